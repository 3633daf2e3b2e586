#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "foldkit/errors.hpp"

namespace foldkit {

using Gen = int;                 // generator index (declaration order)
using Elt = std::uint32_t;       // dense element id, BFS discovery order
using Word = std::string;        // generator indices packed as chars

constexpr Elt kIdentity = 0;

/// Symmetric Coxeter matrix over named generators. All bonds finite.
struct CoxeterMatrix {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> entries;

    int rank() const { return static_cast<int>(generators.size()); }
    int m(Gen s, Gen t) const { return entries[s][t]; }
    Gen gen_index(const std::string& name) const;
    void validate() const;

    /// Block-diagonal product; generator names must stay distinct.
    static CoxeterMatrix direct_product(const CoxeterMatrix& a, const CoxeterMatrix& b);

    bool operator==(const CoxeterMatrix& o) const = default;
};

// Tits word machinery: braid-move closure of a word. Any two reduced words
// of the same element are connected by braid moves, which is what makes the
// closure usable as an equality oracle during enumeration.
namespace tits {

std::vector<Word> braid_neighbors(const CoxeterMatrix& m, const Word& w);
/// All reduced words of the element, given one reduced word.
std::set<Word> reduced_words(const CoxeterMatrix& m, const Word& w);
/// A word is reduced iff no word in its braid closure has two equal
/// adjacent letters.
bool is_reduced(const CoxeterMatrix& m, const Word& w);

} // namespace tits

/// A finite Coxeter group, fully enumerated. Immutable once built; element
/// ids are BFS-by-length discovery order, ties broken by generator order,
/// so id 0 is the identity and the last id is the longest element.
class CoxeterSystem {
  public:
    static constexpr std::size_t kDefaultCap = 50000;

    CoxeterSystem(CoxeterMatrix matrix, std::size_t cap = kDefaultCap);

    const CoxeterMatrix& matrix() const { return matrix_; }
    int rank() const { return matrix_.rank(); }
    std::size_t order() const { return normal_forms_.size(); }

    int length(Elt w) const { return static_cast<int>(normal_forms_[w].size()); }
    const Word& normal_form(Elt w) const { return normal_forms_[w]; }
    Elt inverse(Elt w) const { return inverses_[w]; }
    Elt longest() const { return static_cast<Elt>(order() - 1); }

    Elt mult_gen(Elt w, Gen s) const { return cayley_[w][s]; }
    Elt multiply(Elt a, Elt b) const;
    Elt evaluate(const Word& word) const;
    Elt evaluate_names(const std::vector<std::string>& names) const;
    Elt generator(Gen s) const { return cayley_[kIdentity][s]; }

    bool right_descent(Elt w, Gen s) const { return length(cayley_[w][s]) < length(w); }
    std::vector<Gen> descents_right(Elt w) const;
    std::vector<Gen> descents_left(Elt w) const;

    bool bruhat_leq(Elt a, Elt b) const;

    /// Longest element of the standard parabolic subgroup; identity for the
    /// empty subset.
    Elt longest_element(const std::vector<Gen>& subset) const;
    int element_order(Elt a) const;

    /// Elements of the subgroup generated by the given elements, as ids.
    std::vector<Elt> generated_subgroup(const std::vector<Elt>& gens, std::size_t cap = kDefaultCap) const;

    std::vector<std::size_t> layer_sizes() const;
    std::string word_str(const Word& w) const;
    std::string name(Elt w) const { return word_str(normal_forms_[w]); }

  private:
    CoxeterMatrix matrix_;
    std::vector<Word> normal_forms_;
    std::vector<std::vector<Elt>> cayley_;
    std::vector<Elt> inverses_;

    void build(std::size_t cap);
};

} // namespace foldkit
