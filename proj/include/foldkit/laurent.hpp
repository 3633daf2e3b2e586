#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>

namespace foldkit {

using Int = mpz_class;

/// Sparse Laurent polynomial in one variable v with exact integer
/// coefficients. The map never stores zero coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long c) { set(0, Int(c)); }
    LaurentPoly(const Int& c) { set(0, c); }

    static LaurentPoly monomial(long exp, Int coeff = 1);
    /// v^k + v^-k for k > 0, the constant 2 for k = 0.
    static LaurentPoly sym(long k);

    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(long exp) const;
    const std::map<long, Int>& terms() const { return coeffs_; }
    long min_exp() const;  // requires nonzero
    long max_exp() const;  // requires nonzero

    void set(long exp, const Int& c);
    void add(long exp, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

    /// The bar involution v -> v^-1 (negates every exponent).
    LaurentPoly bar() const;

    /// Restriction to the exponents where pred holds.
    LaurentPoly part(const std::function<bool(long)>& pred) const;
    LaurentPoly positive_part() const { return part([](long e) { return e > 0; }); }
    LaurentPoly negative_part() const { return part([](long e) { return e < 0; }); }
    LaurentPoly constant_part() const { return part([](long e) { return e == 0; }); }

    bool is_bar_invariant() const;
    /// True when every exponent is strictly positive (zero counts).
    bool is_in_positive_part() const;
    bool has_negative_coeff() const;

    /// The unique bar-invariant q with p - q supported in strictly positive
    /// exponents: q = p^0 + sum_{k>0} p^{-k} (v^k + v^-k).
    LaurentPoly bar_invariant_completion() const;

    /// Writes the polynomial as c_0 + sum c_k (v^k + v^-k); only valid for
    /// bar-invariant input. Returns the map k -> c_k (k >= 0).
    std::map<long, Int> sym_coordinates() const;

    /// Ascending-exponent text form, e.g. "v^-2 + 5 + 7v".
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

  private:
    std::map<long, Int> coeffs_;
};

LaurentPoly operator*(const Int& c, const LaurentPoly& p);

} // namespace foldkit
