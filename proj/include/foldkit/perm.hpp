#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace foldkit {

/// Permutation of {0..n-1} in one-line notation.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inverse(const Perm& a);
int perm_parity(const Perm& a);  // +1 or -1
bool perm_is_identity(const Perm& a);

/// A finite permutation group given by its full element list (closure of a
/// generating set). Element 0 is the identity; order of discovery is BFS.
struct PermGroup {
    std::vector<Perm> elements;
    std::vector<std::vector<int>> words;  // generator word per element

    static PermGroup closure(const std::vector<Perm>& gens, int npoints);
    /// Subgroup structure over an explicit element list (must be closed).
    static PermGroup from_elements(std::vector<Perm> els);

    std::size_t size() const { return elements.size(); }
    int index_of(const Perm& p) const;  // -1 when absent
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    bool is_abelian() const;

    /// Conjugacy classes as element-index lists; each class is sorted and
    /// classes are ordered by their least member. Computed once.
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    /// Index of the class containing p.
    int class_of(const Perm& p) const;

  private:
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_index_;
};

} // namespace foldkit
