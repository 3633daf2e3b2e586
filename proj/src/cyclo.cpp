#include "foldkit/cyclo.hpp"

#include <numeric>
#include <sstream>

#include "foldkit/errors.hpp"

namespace foldkit {

namespace {

// Exact division of integer polynomials, quotient known integral.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        mpz_class c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

} // namespace

std::vector<mpz_class> cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

CycloScalar CycloScalar::root_of_unity(long n, long power) {
    if (n < 1) throw error("cyclotomic order must be >= 1");
    CycloScalar z;
    z.n_ = n;
    const std::size_t deg = cyclotomic_poly(n).size() - 1;
    power = ((power % n) + n) % n;
    std::vector<Rat> poly(static_cast<std::size_t>(power) + 1, Rat(0));
    poly.back() = 1;
    z.c_.assign(deg, Rat(0));
    z.reduce_(poly);
    z.c_ = std::move(poly);
    z.c_.resize(deg, Rat(0));
    return z;
}

void CycloScalar::reduce_(std::vector<Rat>& poly) const {
    const auto phi = cyclotomic_poly(n_);
    const std::size_t deg = phi.size() - 1;
    while (poly.size() > deg) {
        Rat lead = poly.back();
        const std::size_t shift = poly.size() - 1 - deg;
        if (lead != 0)
            for (std::size_t j = 0; j <= deg; ++j) poly[shift + j] -= lead * Rat(phi[j]);
        poly.pop_back();
    }
    poly.resize(deg, Rat(0));
}

bool CycloScalar::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloScalar::rational_value() const {
    if (!is_rational()) throw error("scalar is not rational: " + str());
    return c_.empty() ? Rat(0) : c_[0];
}

std::pair<CycloScalar, CycloScalar> CycloScalar::promote(const CycloScalar& a, const CycloScalar& b) {
    if (a.n_ == b.n_) return {a, b};
    if (a.is_rational()) {
        CycloScalar up = b;
        for (Rat& r : up.c_) r = 0;
        up.c_[0] = a.c_.empty() ? Rat(0) : a.c_[0];
        return {up, b};
    }
    if (b.is_rational()) {
        auto [bb, aa] = promote(b, a);
        return {aa, bb};
    }
    throw error("mixed cyclotomic orders " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    auto [a, b] = promote(*this, o);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycloScalar CycloScalar::operator-(const CycloScalar& o) const { return *this + (-o); }

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    auto [a, b] = promote(*this, o);
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    a.reduce_(prod);
    a.c_ = std::move(prod);
    return a;
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    if (n_ != o.n_) {
        if (is_rational() && o.is_rational()) return rational_value() == o.rational_value();
        auto [a, b] = promote(*this, o);
        return a == b;
    }
    return c_ == o.c_;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw error("division by zero cyclotomic scalar");
    if (is_rational()) {
        CycloScalar r = *this;
        r.c_[0] = Rat(1) / r.c_[0];
        return r;
    }
    // Extended Euclid over Q[x]: u * this + v * Phi_n = gcd = const.
    const auto phi_int = cyclotomic_poly(n_);
    std::vector<Rat> r0(phi_int.begin(), phi_int.end());
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`

    auto deg = [](const std::vector<Rat>& p) { return static_cast<long>(p.size()) - 1; };
    while (deg(r1) > 0) {
        std::vector<Rat> q(deg(r0) - deg(r1) + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            Rat c = rem[i + r1.size() - 1] / r1.back();
            q[i] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_next = s0 - q * s1
        std::vector<Rat> snext(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        while (!snext.empty() && snext.back() == 0) snext.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    if (r1.empty()) throw error("scalar shares a factor with Phi_n; not invertible");
    // this * s1 == r1[0], so inverse = s1 / r1[0].
    CycloScalar inv;
    inv.n_ = n_;
    inv.c_ = s1;
    inv.c_.resize(c_.size(), Rat(0));
    for (Rat& x : inv.c_) x /= r1[0];
    return inv;
}

std::string CycloScalar::str() const {
    std::ostringstream os;
    if (n_ == 1) return c_.empty() ? "0" : c_[0].get_str();
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::size_t> cyclo_row_reduce(std::vector<std::vector<CycloScalar>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const CycloScalar inv = rows[rank][col].inverse();
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            const CycloScalar f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

} // namespace foldkit
