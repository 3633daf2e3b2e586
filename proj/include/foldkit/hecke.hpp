#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "foldkit/coxeter.hpp"
#include "foldkit/laurent.hpp"

namespace foldkit {

/// Positive weight function, one value per generator. Values at s and t must
/// agree when m_st is odd.
struct WeightFunction {
    std::vector<long> values;

    static WeightFunction split(const CoxeterMatrix& m);
    void validate(const CoxeterMatrix& m) const;
    long at(Gen s) const { return values[s]; }
    bool is_split() const;
    bool operator==(const WeightFunction& o) const = default;
};

/// Element of the Hecke algebra in standard-basis coordinates. Zero
/// polynomials are never stored.
struct HeckeElt {
    std::map<Elt, LaurentPoly> coords;

    static HeckeElt unit() { return basis(kIdentity); }
    static HeckeElt basis(Elt x) {
        HeckeElt h;
        h.coords.emplace(x, LaurentPoly(1));
        return h;
    }

    bool is_zero() const { return coords.empty(); }
    const LaurentPoly& coord(Elt x) const;
    void add(Elt x, const LaurentPoly& p);
    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt operator+(const HeckeElt& o) const;
    HeckeElt operator-(const HeckeElt& o) const;
    bool operator==(const HeckeElt& o) const { return coords == o.coords; }
};

HeckeElt operator*(const LaurentPoly& p, const HeckeElt& h);

/// KL-basis coordinates of a Hecke element: element id -> coefficient.
using KLCoords = std::map<Elt, LaurentPoly>;

/// The Hecke algebra H(W,S,L). Holds per-(W,L) caches for bar involution
/// and KL basis elements; safe for concurrent use.
class HeckeAlgebra {
  public:
    HeckeAlgebra(const CoxeterSystem& system, WeightFunction weights);

    const CoxeterSystem& system() const { return system_; }
    const WeightFunction& weights() const { return weights_; }

    // h * H_s and H_s * h via the quadratic relation.
    HeckeElt mult_gen_right(const HeckeElt& h, Gen s) const;
    HeckeElt mult_gen_left(Gen s, const HeckeElt& h) const;
    HeckeElt mult(const HeckeElt& h, const HeckeElt& k) const;

    // h * b_s where b_s = H_s + v^{L(s)}.
    HeckeElt mult_kl_gen_right(const HeckeElt& h, Gen s) const;

    HeckeElt bar(const HeckeElt& h) const;

    /// The KL basis element b_x in standard coordinates (cached).
    HeckeElt kl_element(Elt x) const;
    /// The polynomial P_{y,x}.
    LaurentPoly kl_polynomial(Elt y, Elt x) const;

    /// Writes h in the KL basis. Strips maximal-length support first, ids
    /// breaking ties; triangularity guarantees termination.
    KLCoords kl_expand(HeckeElt h) const;

    /// KL coordinates of b_{s_1} ... b_{s_d} for a word in the generators.
    KLCoords kl_product(const Word& word) const;
    KLCoords kl_product_names(const std::vector<std::string>& names) const;
    /// KL coordinates of b_{x_1} ... b_{x_k} for arbitrary elements.
    KLCoords kl_product_general(const std::vector<Elt>& factors) const;

    /// m^z_{x,y} with b_x b_y = sum_z m^z_{x,y} b_z (row cached).
    const KLCoords& structure_constants(Elt x, Elt y) const;

    /// Standard pairing with (H_x,H_y) = delta_{x,y}; split case only.
    LaurentPoly pairing(const HeckeElt& h, const HeckeElt& k) const;

  private:
    const CoxeterSystem& system_;
    WeightFunction weights_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Elt, HeckeElt> kl_cache_;
    mutable std::map<Elt, HeckeElt> bar_cache_;
    mutable std::map<std::pair<Elt, Elt>, KLCoords> struct_cache_;

    const HeckeElt& bar_of_basis(Elt x) const;
    const HeckeElt& kl_element_locked(Elt x) const;
};

/// Balanced Poincare polynomial: sum over w of v^{2 l(w) - l(w0)}.
LaurentPoly poincare_balanced(const CoxeterSystem& system);

} // namespace foldkit
