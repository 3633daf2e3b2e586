#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "foldkit/cyclo.hpp"
#include "foldkit/folding.hpp"
#include "foldkit/hecke.hpp"
#include "foldkit/perm.hpp"

namespace foldkit {

enum class CharacterKind { Trivial, Sign, Std3, Regular, Explicit };

/// Class function on a finite permutation group: one value per conjugacy
/// class, in canonical class order.
struct ClassFunction {
    PermGroup group;
    std::vector<CycloScalar> values;

    CycloScalar at(const Perm& g) const;
    Int at_integer(const Perm& g) const;  // requires an integer value
    Int dim() const { return at_integer(perm_identity(static_cast<int>(group.elements[0].size()))); }
};

/// Named character constructors. std3 is the standard 3-dimensional
/// character of S_3 (3,1,0 on identity/transpositions/3-cycles) or its
/// restriction to Z/3 (3,0,0); regular is |G| at the identity, 0 elsewhere.
ClassFunction character(CharacterKind kind, const PermGroup& group);
ClassFunction character_explicit(const PermGroup& group, const std::vector<CycloScalar>& class_values);

// ---------------------------------------------------------------------------
// Weighted Grothendieck group of a G-set of indecomposables.

struct GSetOrbit {
    std::string label;
    std::size_t orbit_size;
    PermGroup stabilizer;  // subgroup of G
    std::vector<std::string> irrep_labels;
    /// Per character of G (by index): the permutation xi induces on the
    /// irrep labels via V -> xi (x) V.
    std::vector<std::vector<std::size_t>> xi_action;
};

struct GSetDatum {
    PermGroup group;
    std::vector<GSetOrbit> orbits;

    void validate(std::size_t character_count) const;
};

/// Basis of [C]_g for abelian G: the orbits whose stabilizer contains g.
std::vector<std::string> weighted_basis_abelian(const GSetDatum& gset, const Perm& g);

struct WeightedQuotient {
    std::size_t rank;
    /// Surviving (orbit label, irrep label) representatives.
    std::vector<std::pair<std::string, std::string>> basis;
};

/// Rank and basis of the free module on (orbit, irrep) pairs modulo
/// [M,xi (x) V] = xi(g) [M,V], by exact elimination over Q(zeta).
WeightedQuotient weighted_quotient(const GSetDatum& gset, const std::vector<ClassFunction>& characters,
                                   const Perm& g);

// ---------------------------------------------------------------------------
// Equivariant decomposition data and trace specialization.

struct DecompEntry {
    std::vector<Elt> orbit;  // one G-orbit of W'-elements, representative first
    int shift;
    ClassFunction character;  // on the stabilizer of the representative
};

struct EquivDecomp {
    std::shared_ptr<const CoxeterSystem> ambient;
    GroupAction action;
    Perm sigma;  // the distinguished weighting element
    std::vector<std::string> product_word;  // folded generator names
    std::vector<DecompEntry> entries;
};

/// Builds an entry, computing the stabilizer of orbit.front() and checking
/// the orbit is exactly one G-orbit of elements of a single length.
DecompEntry make_entry(const CoxeterSystem& system, const GroupAction& action, std::vector<Elt> orbit,
                       int shift, CharacterKind kind,
                       const std::vector<CycloScalar>& explicit_values = {});

/// Trace of g: sums chi(g) v^shift over the entries whose orbit g fixes
/// pointwise, keyed by orbit representative.
std::map<Elt, LaurentPoly> trace_specialize(const EquivDecomp& decomp, const Perm& g);

/// Trace at the identity expanded over every orbit member (dimensions).
std::map<Elt, LaurentPoly> forget_specialize(const EquivDecomp& decomp);

struct CompareReport {
    bool pass;
    std::string detail;
};

/// Checks (1) forget_specialize == the split ambient KL product over the
/// images, and (2) trace at sigma, re-keyed through phi^{-1}, == the folded
/// KL product of `word` in H(W,S,L).
CompareReport compare_folded_product(const QuasiSplitEmbedding& embedding,
                                     const std::vector<std::string>& word, const EquivDecomp& decomp,
                                     const Perm& sigma);

// ---------------------------------------------------------------------------
// Combinatorial decompositions.

struct SubsetFixedCounts {
    std::vector<Int> counts;  // c_0 .. c_L
    LaurentPoly poly;         // sum c_i v^{2i - L}
};

/// c_i = number of sigma-invariant i-subsets of an L-set, for sigma with the
/// given cycle type (a partition of L): a subset is fixed iff it is a union
/// of cycles.
SubsetFixedCounts subset_fixed_counts(const std::vector<int>& cycle_type, int L);

/// Multiplicities of V_j (highest weight j) in the n-th tensor power of the
/// 2-dimensional representation, via a(n,j) = a(n-1,j-1) + a(n-1,j+1).
std::map<int, Int> sl2_tensor_decompose(int n);

struct DihedralEqualCoeffs {
    std::map<int, Int> kappa;  // k -> kappa_{k,m}, 1 <= k < m
    std::map<int, Int> rho;    // k -> rho_{k,m}, 1 <= k < m
    std::string convention;
};

/// kappa_{k,m} = multiplicity of V_{k-1} in the (m-1)-th tensor power; rho
/// is the triangular inverse. The indexing is pinned by the Hecke oracle.
DihedralEqualCoeffs dihedral_equal_coeffs(int m);

} // namespace foldkit
