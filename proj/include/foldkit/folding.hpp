#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foldkit/coxeter.hpp"
#include "foldkit/hecke.hpp"
#include "foldkit/perm.hpp"

namespace foldkit {

/// A group acting on (W',S') by Coxeter-matrix-preserving permutations of
/// the generators. Generators are named; the closure keeps a defining word
/// per element for I/O.
struct GroupAction {
    std::vector<std::string> gen_names;
    std::vector<Perm> gen_perms;
    PermGroup closure;

    static GroupAction build(const CoxeterMatrix& matrix, std::vector<std::string> names,
                             std::vector<Perm> perms);
    Perm evaluate_word(const std::vector<std::string>& word) const;
    bool trivial() const { return closure.size() == 1; }
};

/// Apply a generator permutation to a group element letterwise.
Elt act_element(const CoxeterSystem& system, const Perm& p, Elt w);

struct FinitaryPartition {
    struct Block {
        std::string name;
        std::vector<Gen> members;  // sorted
    };
    std::vector<Block> blocks;  // ordered by least member

    void validate(const CoxeterMatrix& matrix) const;
    int block_index(const std::string& name) const;
};

/// Orbits of the action as a partition; blocks are named by their least
/// member (declaration order).
FinitaryPartition orbits(const CoxeterMatrix& matrix, const GroupAction& action);

struct QuasiSplitEmbedding {
    std::shared_ptr<const CoxeterSystem> ambient;
    FinitaryPartition partition;
    std::vector<Elt> images;  // w_{I(s)} per block
    CoxeterMatrix folded_matrix;
    WeightFunction weights;
    std::shared_ptr<const CoxeterSystem> folded;
    std::optional<GroupAction> action;

    /// Image of a folded-group word under phi.
    Elt phi_word(const Word& folded_word) const;
    /// Image of a folded-group element under phi.
    Elt phi(Elt folded_elt) const;
    /// Ambient element -> folded element, defined on the image of phi.
    const std::map<Elt, Elt>& phi_inverse() const;
    /// l'(phi(w)) == sum of weights along the normal form of w.
    bool length_additive(Elt folded_elt) const;

  private:
    mutable std::map<Elt, Elt> phi_inv_;
};

/// Builds the embedding from a finitary partition, verifying Coxeter-ness
/// by comparing the generated subgroup's order with the abstract folded
/// group's order. The action, when given, must have the partition as its
/// orbit set.
QuasiSplitEmbedding fold(std::shared_ptr<const CoxeterSystem> ambient, FinitaryPartition partition,
                         std::optional<GroupAction> action,
                         std::size_t cap = CoxeterSystem::kDefaultCap);

struct SteinbergReport {
    std::size_t fixed_order;      // #{w : g(w)=w for all g in G}
    std::size_t generated_order;  // subgroup generated by orbit longest elements
    bool equal;
};

SteinbergReport steinberg_check(const CoxeterSystem& ambient, const GroupAction& action);

enum class OrbitPairCase { EqualParameters, A1Commuting, A3Type, A4Type, D4Type, F4Type };

std::string to_string(OrbitPairCase c);

struct OrbitPairClass {
    OrbitPairCase tag;
    int m;
    long l_s, l_t;
    int k;
    int l;  // only for the commuting case; otherwise equals k
};

/// Matches I(s) u I(t) against the classification of dihedral quasi-split
/// pairs. Requires the embedding to carry an action; the structural match
/// and the predicted (m, L(s), L(t)) are both checked.
OrbitPairClass classify_orbit_pair(const QuasiSplitEmbedding& embedding, int s_block, int t_block);

/// True iff the cyclic group generated by sigma has the same orbits on S'
/// as the whole group.
bool sigma_transitive(const GroupAction& action, const Perm& sigma);

} // namespace foldkit
