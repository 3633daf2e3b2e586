#pragma once

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

#include "foldkit/catalog.hpp"
#include "foldkit/grothendieck.hpp"

namespace foldkit {

inline constexpr const char* kVersion = "0.1.0";

struct SystemSpec {
    std::shared_ptr<const CoxeterSystem> system;
    std::optional<WeightFunction> weights;
};

/// Accepts a builtin name (JSON string or {"builtin": name}) or an inline
/// {"generators": [...], "coxeter_matrix": [[...]]}; optional "weights"
/// object and "cap".
SystemSpec parse_system(const nlohmann::json& j, std::size_t default_cap = CoxeterSystem::kDefaultCap);

/// {"generators": {"r": {"u1":"u2", ...}, ...}, "sigma": ["r"]}.
GroupAction parse_action(const CoxeterMatrix& matrix, const nlohmann::json& j);
/// The distinguished element; defaults to the sole generator when absent.
Perm parse_sigma(const GroupAction& action, const nlohmann::json& j);

/// Fixture schema: {"system":..., "action":..., "product_word":[...],
/// "entries":[{"orbit": [[words]], "shift": n, "character": kind|{"values":...}}]}.
EquivDecomp parse_fixture(const nlohmann::json& j, std::size_t cap = CoxeterSystem::kDefaultCap);

nlohmann::json load_json_file(const std::string& path);
EquivDecomp load_fixture_file(const std::string& path);

/// Space-separated generator names -> element.
Elt parse_element(const CoxeterSystem& system, const std::string& words);
std::vector<std::string> split_words(const std::string& text);

/// TSV rendering: one "element<TAB>polynomial" row per entry, ascending id,
/// under a comment line carrying the command and version.
std::string render_table(const std::string& command, const CoxeterSystem& system,
                         const std::map<Elt, LaurentPoly>& coords);
std::map<Elt, LaurentPoly> parse_table(const CoxeterSystem& system, const std::string& tsv);

} // namespace foldkit
