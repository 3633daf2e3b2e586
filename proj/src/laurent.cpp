#include "foldkit/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "foldkit/errors.hpp"

namespace foldkit {

LaurentPoly LaurentPoly::monomial(long exp, Int coeff) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::sym(long k) {
    LaurentPoly p;
    if (k == 0) {
        p.set(0, 2);
    } else {
        p.set(k, 1);
        p.set(-k, 1);
    }
    return p;
}

const Int& LaurentPoly::coeff(long exp) const {
    static const Int zero(0);
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? zero : it->second;
}

long LaurentPoly::min_exp() const { return coeffs_.begin()->first; }
long LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }

void LaurentPoly::set(long exp, const Int& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

void LaurentPoly::add(long exp, const Int& c) {
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, a] : p.terms()) r.set(e, c * a);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::part(const std::function<bool(long)>& pred) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        if (pred(e)) r.coeffs_.emplace(e, c);
    return r;
}

bool LaurentPoly::is_bar_invariant() const { return *this == bar(); }

bool LaurentPoly::is_in_positive_part() const {
    return coeffs_.empty() || coeffs_.begin()->first > 0;
}

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return true;
    return false;
}

LaurentPoly LaurentPoly::bar_invariant_completion() const {
    LaurentPoly q = constant_part();
    for (const auto& [e, c] : coeffs_) {
        if (e >= 0) break;
        q.add(e, c);
        q.add(-e, c);
    }
    return q;
}

std::map<long, Int> LaurentPoly::sym_coordinates() const {
    if (!is_bar_invariant())
        throw error("sym_coordinates: polynomial is not bar-invariant");
    std::map<long, Int> out;
    for (const auto& [e, c] : coeffs_)
        if (e > 0) out[e] = c;
    if (coeffs_.count(0)) out[0] = coeffs_.at(0);
    return out;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly out;
    size_t i = 0;
    skip_ws(text, i);
    if (i == text.size()) throw parse_error("empty polynomial");
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    } else if (text[i] == '+') {
        ++i;
    }
    while (true) {
        skip_ws(text, i);
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        Int coeff = digits.empty() ? Int(1) : Int(digits, 10);
        long exp = 0;
        if (i < text.size() && text[i] == 'v') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    eneg = text[i] == '-';
                    ++i;
                }
                std::string ed;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ed += text[i++];
                if (ed.empty()) throw parse_error("missing exponent in: " + text);
                exp = std::strtol(ed.c_str(), nullptr, 10);
                if (eneg) exp = -exp;
            }
        } else if (digits.empty()) {
            throw parse_error("expected term in: " + text);
        }
        out.add(exp, neg ? Int(-coeff) : coeff);
        skip_ws(text, i);
        if (i == text.size()) break;
        if (text[i] == '+')
            neg = false;
        else if (text[i] == '-')
            neg = true;
        else
            throw parse_error("unexpected character in: " + text);
        ++i;
    }
    return out;
}

} // namespace foldkit
