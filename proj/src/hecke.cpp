#include "foldkit/hecke.hpp"

#include <algorithm>

namespace foldkit {

WeightFunction WeightFunction::split(const CoxeterMatrix& m) {
    WeightFunction w;
    w.values.assign(m.rank(), 1);
    return w;
}

void WeightFunction::validate(const CoxeterMatrix& m) const {
    if (static_cast<int>(values.size()) != m.rank())
        throw weight_mismatch("weight function does not cover all generators");
    for (long v : values)
        if (v <= 0) throw invalid_weight("weights must be positive");
    for (int s = 0; s < m.rank(); ++s)
        for (int t = s + 1; t < m.rank(); ++t)
            if (m.m(s, t) % 2 == 1 && values[s] != values[t])
                throw invalid_weight("L(s) must equal L(t) when m_st is odd");
}

bool WeightFunction::is_split() const {
    return std::all_of(values.begin(), values.end(), [](long v) { return v == 1; });
}

const LaurentPoly& HeckeElt::coord(Elt x) const {
    static const LaurentPoly zero;
    auto it = coords.find(x);
    return it == coords.end() ? zero : it->second;
}

void HeckeElt::add(Elt x, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto it = coords.find(x);
    if (it == coords.end()) {
        coords.emplace(x, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) coords.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    for (const auto& [x, p] : o.coords) add(x, p);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    for (const auto& [x, p] : o.coords) add(x, -p);
    return *this;
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
    HeckeElt r = *this;
    r += o;
    return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
    HeckeElt r = *this;
    r -= o;
    return r;
}

HeckeElt operator*(const LaurentPoly& p, const HeckeElt& h) {
    HeckeElt r;
    if (p.is_zero()) return r;
    for (const auto& [x, q] : h.coords) {
        LaurentPoly prod = p * q;
        if (!prod.is_zero()) r.coords.emplace(x, std::move(prod));
    }
    return r;
}

HeckeAlgebra::HeckeAlgebra(const CoxeterSystem& system, WeightFunction weights)
    : system_(system), weights_(std::move(weights)) {
    weights_.validate(system_.matrix());
}

// H_x H_s = H_{xs} if l(xs) > l(x), else H_{xs} + (v^-L - v^L) H_x.
HeckeElt HeckeAlgebra::mult_gen_right(const HeckeElt& h, Gen s) const {
    const long L = weights_.at(s);
    LaurentPoly down = LaurentPoly::monomial(-L) - LaurentPoly::monomial(L);
    HeckeElt out;
    for (const auto& [x, p] : h.coords) {
        const Elt xs = system_.mult_gen(x, s);
        out.add(xs, p);
        if (system_.length(xs) < system_.length(x)) out.add(x, down * p);
    }
    return out;
}

HeckeElt HeckeAlgebra::mult_gen_left(Gen s, const HeckeElt& h) const {
    const long L = weights_.at(s);
    LaurentPoly down = LaurentPoly::monomial(-L) - LaurentPoly::monomial(L);
    const Elt gen = system_.generator(s);
    HeckeElt out;
    for (const auto& [x, p] : h.coords) {
        const Elt sx = system_.multiply(gen, x);
        out.add(sx, p);
        if (system_.length(sx) < system_.length(x)) out.add(x, down * p);
    }
    return out;
}

HeckeElt HeckeAlgebra::mult(const HeckeElt& h, const HeckeElt& k) const {
    HeckeElt out;
    for (const auto& [y, q] : k.coords) {
        HeckeElt cur = h;
        for (char c : system_.normal_form(y)) cur = mult_gen_right(cur, static_cast<Gen>(c));
        out += q * cur;
    }
    return out;
}

HeckeElt HeckeAlgebra::mult_kl_gen_right(const HeckeElt& h, Gen s) const {
    HeckeElt out = mult_gen_right(h, s);
    out += LaurentPoly::monomial(weights_.at(s)) * h;
    return out;
}

// bar(H_x) built incrementally: bar(H_{x's}) = bar(H_{x'}) (H_s + (v^L - v^-L)).
const HeckeElt& HeckeAlgebra::bar_of_basis(Elt x) const {
    auto it = bar_cache_.find(x);
    if (it != bar_cache_.end()) return it->second;
    HeckeElt val;
    if (x == kIdentity) {
        val = HeckeElt::unit();
    } else {
        const Gen s = static_cast<Gen>(system_.normal_form(x).back());
        const Elt prefix = system_.mult_gen(x, s);
        const long L = weights_.at(s);
        const HeckeElt& left = bar_of_basis(prefix);
        val = mult_gen_right(left, s);
        val += (LaurentPoly::monomial(L) - LaurentPoly::monomial(-L)) * left;
    }
    return bar_cache_.emplace(x, std::move(val)).first->second;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    HeckeElt out;
    for (const auto& [x, p] : h.coords) out += p.bar() * bar_of_basis(x);
    return out;
}

const HeckeElt& HeckeAlgebra::kl_element_locked(Elt x) const {
    auto it = kl_cache_.find(x);
    if (it != kl_cache_.end()) return it->second;

    HeckeElt b;
    if (x == kIdentity) {
        b = HeckeElt::unit();
    } else {
        const Gen s = system_.descents_left(x).front();
        const Elt sx = system_.multiply(system_.generator(s), x);
        // b_s b_{sx} is self-dual with H_x coefficient 1; correcting by
        // bar-invariant completions keeps self-duality at every step.
        const HeckeElt& lower = kl_element_locked(sx);
        b = mult_gen_left(s, lower);
        b += LaurentPoly::monomial(weights_.at(s)) * lower;

        // Sweep lengths downward; corrections at length l only touch support
        // strictly below l, so recollecting per length catches coefficients
        // introduced by earlier corrections.
        for (int len = system_.length(x) - 1; len >= 0; --len) {
            std::vector<Elt> layer;
            for (const auto& [y, p] : b.coords)
                if (y != x && system_.length(y) == len) layer.push_back(y);
            for (Elt y : layer) {
                LaurentPoly q = b.coord(y).bar_invariant_completion();
                if (!q.is_zero()) b -= q * kl_element_locked(y);
            }
        }
    }
    return kl_cache_.emplace(x, std::move(b)).first->second;
}

HeckeElt HeckeAlgebra::kl_element(Elt x) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return kl_element_locked(x);
}

LaurentPoly HeckeAlgebra::kl_polynomial(Elt y, Elt x) const {
    return kl_element(x).coord(y);
}

KLCoords HeckeAlgebra::kl_expand(HeckeElt h) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    KLCoords out;
    while (!h.is_zero()) {
        Elt top = h.coords.begin()->first;
        int best = system_.length(top);
        for (const auto& [y, p] : h.coords) {
            const int l = system_.length(y);
            if (l > best || (l == best && y < top)) {
                top = y;
                best = l;
            }
        }
        LaurentPoly c = h.coord(top);
        h -= c * kl_element_locked(top);
        out.emplace(top, std::move(c));
    }
    return out;
}

KLCoords HeckeAlgebra::kl_product(const Word& word) const {
    HeckeElt acc = HeckeElt::unit();
    for (char c : word) acc = mult_kl_gen_right(acc, static_cast<Gen>(c));
    return kl_expand(std::move(acc));
}

KLCoords HeckeAlgebra::kl_product_names(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& nm : names) w.push_back(static_cast<char>(system_.matrix().gen_index(nm)));
    return kl_product(w);
}

KLCoords HeckeAlgebra::kl_product_general(const std::vector<Elt>& factors) const {
    if (factors.size() == 2) return structure_constants(factors[0], factors[1]);
    HeckeElt acc = HeckeElt::unit();
    for (Elt x : factors) acc = mult(acc, kl_element(x));
    return kl_expand(std::move(acc));
}

const KLCoords& HeckeAlgebra::structure_constants(Elt x, Elt y) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_pair(x, y);
    auto it = struct_cache_.find(key);
    if (it != struct_cache_.end()) return it->second;
    KLCoords row = kl_expand(mult(kl_element_locked(x), kl_element_locked(y)));
    return struct_cache_.emplace(key, std::move(row)).first->second;
}

LaurentPoly HeckeAlgebra::pairing(const HeckeElt& h, const HeckeElt& k) const {
    if (!weights_.is_split())
        throw unsupported_weights("standard pairing is defined in the split case only");
    LaurentPoly out;
    for (const auto& [x, p] : h.coords) {
        auto it = k.coords.find(x);
        if (it != k.coords.end()) out += p * it->second;
    }
    return out;
}

LaurentPoly poincare_balanced(const CoxeterSystem& system) {
    LaurentPoly out;
    const int top = system.length(system.longest());
    for (Elt w = 0; w < system.order(); ++w) out.add(2 * system.length(w) - top, 1);
    return out;
}

} // namespace foldkit
