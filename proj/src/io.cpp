#include "foldkit/io.hpp"

#include <fstream>
#include <sstream>

namespace foldkit {

using nlohmann::json;

SystemSpec parse_system(const json& j, std::size_t default_cap) {
    SystemSpec out;
    std::size_t cap = default_cap;
    const json* obj = &j;
    if (j.is_object() && j.contains("cap")) cap = j.at("cap").get<std::size_t>();

    if (j.is_string()) {
        out.system = builtin_system(j.get<std::string>(), cap);
    } else if (j.is_object() && j.contains("builtin")) {
        out.system = builtin_system(j.at("builtin").get<std::string>(), cap);
    } else if (j.is_object() && j.contains("generators")) {
        CoxeterMatrix m;
        m.generators = j.at("generators").get<std::vector<std::string>>();
        m.entries = j.at("coxeter_matrix").get<std::vector<std::vector<int>>>();
        out.system = std::make_shared<const CoxeterSystem>(std::move(m), cap);
    } else {
        throw parse_error("system must be a builtin name or {generators, coxeter_matrix}");
    }

    if (obj->is_object() && obj->contains("weights")) {
        WeightFunction w;
        w.values.assign(out.system->rank(), 0);
        for (const auto& [name, val] : obj->at("weights").items())
            w.values[out.system->matrix().gen_index(name)] = val.get<long>();
        w.validate(out.system->matrix());
        out.weights = std::move(w);
    }
    return out;
}

GroupAction parse_action(const CoxeterMatrix& matrix, const json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw parse_error("action must carry a \"generators\" object");
    std::map<std::string, std::map<std::string, std::string>> gens;
    for (const auto& [name, mapping] : j.at("generators").items()) {
        std::map<std::string, std::string> mp;
        for (const auto& [from, to] : mapping.items()) mp[from] = to.get<std::string>();
        gens[name] = std::move(mp);
    }
    return make_action(matrix, gens);
}

Perm parse_sigma(const GroupAction& action, const json& j) {
    if (j.is_object() && j.contains("sigma"))
        return action.evaluate_word(j.at("sigma").get<std::vector<std::string>>());
    if (action.gen_names.size() == 1) return action.gen_perms[0];
    throw parse_error("action needs an explicit \"sigma\" word");
}

namespace {

ClassFunction parse_character(const json& j, const PermGroup& stabilizer, const GroupAction& action) {
    if (j.is_string()) {
        const std::string kind = j.get<std::string>();
        if (kind == "trivial") return character(CharacterKind::Trivial, stabilizer);
        if (kind == "sign") return character(CharacterKind::Sign, stabilizer);
        if (kind == "std3") return character(CharacterKind::Std3, stabilizer);
        if (kind == "regular") return character(CharacterKind::Regular, stabilizer);
        throw parse_error("unknown character kind: " + kind);
    }
    if (!j.is_object() || !j.contains("values"))
        throw parse_error("character must be a kind name or {\"values\": {...}}");

    const auto classes = stabilizer.conjugacy_classes();
    std::vector<std::optional<CycloScalar>> vals(classes.size());
    for (const auto& [word, value] : j.at("values").items()) {
        const Perm g = action.evaluate_word(split_words(word));
        if (!stabilizer.contains(g))
            throw parse_error("character key \"" + word + "\" is not in the stabilizer");
        const int c = stabilizer.class_of(g);
        CycloScalar v{value.get<long>()};
        if (vals[c] && *vals[c] != v)
            throw parse_error("character keys disagree on one conjugacy class");
        vals[c] = v;
    }
    std::vector<CycloScalar> out;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (!vals[c]) throw parse_error("character misses a conjugacy class of the stabilizer");
        out.push_back(*vals[c]);
    }
    return character_explicit(stabilizer, out);
}

} // namespace

EquivDecomp parse_fixture(const json& j, std::size_t cap) {
    EquivDecomp d;
    SystemSpec spec = parse_system(j.at("system"), cap);
    d.ambient = spec.system;
    d.action = parse_action(d.ambient->matrix(), j.at("action"));
    d.sigma = parse_sigma(d.action, j.at("action"));
    d.product_word = j.at("product_word").get<std::vector<std::string>>();
    for (const auto& ej : j.at("entries")) {
        std::vector<Elt> orbit;
        for (const auto& wj : ej.at("orbit"))
            orbit.push_back(d.ambient->evaluate_names(wj.get<std::vector<std::string>>()));
        const int shift = ej.at("shift").get<int>();
        const json& cj = ej.at("character");
        if (cj.is_string()) {
            CharacterKind kind;
            const std::string k = cj.get<std::string>();
            if (k == "trivial") kind = CharacterKind::Trivial;
            else if (k == "sign") kind = CharacterKind::Sign;
            else if (k == "std3") kind = CharacterKind::Std3;
            else if (k == "regular") kind = CharacterKind::Regular;
            else throw parse_error("unknown character kind: " + k);
            d.entries.push_back(make_entry(*d.ambient, d.action, std::move(orbit), shift, kind));
        } else {
            // Explicit values: validated against the computed stabilizer.
            DecompEntry e = make_entry(*d.ambient, d.action, std::move(orbit), shift,
                                       CharacterKind::Trivial);
            e.character = parse_character(cj, e.character.group, d.action);
            d.entries.push_back(std::move(e));
        }
    }
    return d;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

EquivDecomp load_fixture_file(const std::string& path) { return parse_fixture(load_json_file(path)); }

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

Elt parse_element(const CoxeterSystem& system, const std::string& words) {
    auto parts = split_words(words);
    if (parts.size() == 1 && parts[0] == "e") return kIdentity;
    return system.evaluate_names(parts);
}

std::string render_table(const std::string& command, const CoxeterSystem& system,
                         const std::map<Elt, LaurentPoly>& coords) {
    std::ostringstream os;
    os << "# foldkit " << kVersion << " " << command << "\n";
    for (const auto& [w, p] : coords) os << system.name(w) << "\t" << p.str() << "\n";
    return os.str();
}

std::map<Elt, LaurentPoly> parse_table(const CoxeterSystem& system, const std::string& tsv) {
    std::map<Elt, LaurentPoly> out;
    std::istringstream is(tsv);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw parse_error("table row without a tab: " + line);
        out.emplace(parse_element(system, line.substr(0, tab)), LaurentPoly::parse(line.substr(tab + 1)));
    }
    return out;
}

} // namespace foldkit
