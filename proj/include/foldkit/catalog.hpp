#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "foldkit/folding.hpp"

namespace foldkit {

/// Coxeter matrix for a builtin name: A1..A5, B2, B3, D4, G2, H3, I2(m),
/// and products joined with "x" (or the multiplication sign).
CoxeterMatrix builtin_matrix(const std::string& name);

/// Builds (and caches per process) the builtin system.
std::shared_ptr<const CoxeterSystem> builtin_system(const std::string& name,
                                                    std::size_t cap = CoxeterSystem::kDefaultCap);

GroupAction make_action(const CoxeterMatrix& matrix,
                        const std::map<std::string, std::map<std::string, std::string>>& generators);

FinitaryPartition make_partition(const CoxeterMatrix& matrix,
                                 const std::map<std::string, std::vector<std::string>>& blocks);

/// A named folding example: a builtin ambient plus either an action (the
/// quasi-split ones) or a bare partition.
struct ExampleSpec {
    std::string name;
    std::string system;
    std::map<std::string, std::map<std::string, std::string>> action;  // empty -> partition fold
    std::vector<std::string> sigma;                                    // word in action generators
    std::map<std::string, std::vector<std::string>> partition;

    bool quasi_split() const { return !action.empty() || partition.empty(); }
};

/// The shipped quasi-split foldings exercised by the verification suites.
std::vector<ExampleSpec> quasi_split_examples();
/// Coxeter embeddings that are not quasi-split (no compatible action given).
std::vector<ExampleSpec> plain_embedding_examples();

struct ResolvedExample {
    ExampleSpec spec;
    std::shared_ptr<const CoxeterSystem> system;
    std::optional<GroupAction> action;
    Perm sigma;
    QuasiSplitEmbedding embedding;
};

ResolvedExample resolve_example(const ExampleSpec& spec);

/// Builtin systems (with orders) used by the KL property suite.
std::vector<std::string> catalog_names();

} // namespace foldkit
