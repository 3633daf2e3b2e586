#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace foldkit {

using Rat = mpq_class;

/// Monic cyclotomic polynomial Phi_n as integer coefficients (ascending).
std::vector<mpz_class> cyclotomic_poly(long n);

/// Element of Q(zeta_n): a polynomial in zeta_n reduced modulo Phi_n, with
/// exact rational coordinates. Order 1 embeds the rationals.
class CycloScalar {
  public:
    CycloScalar() : n_(1), c_(1, Rat(0)) {}
    explicit CycloScalar(const Rat& r) : n_(1), c_(1, r) {}
    CycloScalar(long num) : n_(1), c_(1, Rat(num)) {}

    static CycloScalar root_of_unity(long n, long power = 1);

    long order() const { return n_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational

    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const;
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator-() const;
    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    /// Multiplicative inverse (extended Euclid against Phi_n); requires nonzero.
    CycloScalar inverse() const;

    std::string str() const;

  private:
    long n_;              // cyclotomic order
    std::vector<Rat> c_;  // coordinates, degree < deg(Phi_n)

    void reduce_(std::vector<Rat>& poly) const;
    static std::pair<CycloScalar, CycloScalar> promote(const CycloScalar& a, const CycloScalar& b);
};

/// Rank of a matrix over Q(zeta), by exact Gaussian elimination with
/// lowest-column pivoting. Returns the pivot column indices.
std::vector<std::size_t> cyclo_row_reduce(std::vector<std::vector<CycloScalar>>& rows);

} // namespace foldkit
