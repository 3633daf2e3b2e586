#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "foldkit/catalog.hpp"
#include "foldkit/hecke.hpp"
#include "oracles.hpp"

using namespace foldkit;

namespace {

long total_weight(const HeckeAlgebra& alg, Elt w) {
    long out = 0;
    for (char c : alg.system().normal_form(w)) out += alg.weights().at(static_cast<Gen>(c));
    return out;
}

HeckeElt kl_gen(const HeckeAlgebra& alg, Gen s) {
    HeckeElt b = HeckeElt::basis(alg.system().generator(s));
    b.add(kIdentity, LaurentPoly::monomial(alg.weights().at(s)));
    return b;
}

} // namespace

TEST_CASE("weight function validation") {
    auto a2 = builtin_system("A2");
    CHECK_THROWS_AS(HeckeAlgebra(*a2, WeightFunction{{1, 2}}), invalid_weight);  // odd bond
    CHECK_THROWS_AS(HeckeAlgebra(*a2, WeightFunction{{0, 0}}), invalid_weight);
    CHECK_THROWS_AS(HeckeAlgebra(*a2, WeightFunction{{1}}), weight_mismatch);
}

TEST_CASE("quadratic relation") {
    auto a1 = builtin_system("A1");
    HeckeAlgebra alg(*a1, WeightFunction::split(a1->matrix()));
    // (H_s + v)^2 = (v + v^-1)(H_s + v)
    HeckeElt bs = kl_gen(alg, 0);
    CHECK(alg.mult(bs, bs) == LaurentPoly::sym(1) * bs);

    // H_s H_s = 1 + (v^-L - v^L) H_s in B2 with L=(1,2).
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg2(*b2, WeightFunction{{1, 2}});
    for (Gen s : {0, 1}) {
        HeckeElt hs = HeckeElt::basis(b2->generator(s));
        HeckeElt want = HeckeElt::unit();
        const long L = alg2.weights().at(s);
        want.add(b2->generator(s), LaurentPoly::monomial(-L) - LaurentPoly::monomial(L));
        CHECK(alg2.mult(hs, hs) == want);
    }
}

TEST_CASE("unit is neutral") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    std::mt19937 rng(23);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b2->order() - 1));
    for (int i = 0; i < 20; ++i) {
        HeckeElt h = HeckeElt::basis(pick(rng));
        h.add(pick(rng), LaurentPoly::monomial(-2, 3));
        CHECK(alg.mult(HeckeElt::unit(), h) == h);
        CHECK(alg.mult(h, HeckeElt::unit()) == h);
    }
}

TEST_CASE("multiplication is associative") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    std::mt19937 rng(19);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b2->order() - 1));
    for (int i = 0; i < 30; ++i) {
        HeckeElt h = HeckeElt::basis(pick(rng)), k = HeckeElt::basis(pick(rng)),
                 l = HeckeElt::basis(pick(rng));
        h.add(pick(rng), LaurentPoly::monomial(-1, 2));
        k.add(pick(rng), LaurentPoly::sym(1));
        CHECK(alg.mult(alg.mult(h, k), l) == alg.mult(h, alg.mult(k, l)));
    }
}

TEST_CASE("bar involution") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    CHECK(alg.bar(HeckeElt::unit()) == HeckeElt::unit());
    for (Gen s : {0, 1}) {
        HeckeElt bs = kl_gen(alg, s);
        CHECK(alg.bar(bs) == bs);
    }
    for (Elt x = 0; x < b2->order(); ++x) {
        HeckeElt h = HeckeElt::basis(x);
        CHECK(alg.bar(alg.bar(h)) == h);
    }
    // Ring involution on random elements.
    std::mt19937 rng(29);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b2->order() - 1));
    for (int i = 0; i < 25; ++i) {
        HeckeElt h = HeckeElt::basis(pick(rng)), k = HeckeElt::basis(pick(rng));
        h.add(pick(rng), LaurentPoly::monomial(1, 2));
        CHECK(alg.bar(alg.mult(h, k)) == alg.mult(alg.bar(h), alg.bar(k)));
    }
}

TEST_CASE("kl elements against the bar-fixed-point oracle") {
    // Split I2(3): b_{sts} = H_sts + v H_st + v H_ts + v^2 H_s + v^2 H_t + v^3.
    auto a2 = builtin_system("I2(3)");
    HeckeAlgebra alg(*a2, WeightFunction::split(a2->matrix()));
    for (Elt x = 0; x < a2->order(); ++x)
        CHECK(alg.kl_element(x) == oracles::kl_fixed_point(alg, x, 3));
    {
        HeckeElt want;
        want.add(a2->longest(), LaurentPoly(1));
        want.add(a2->evaluate_names({"s", "t"}), LaurentPoly::monomial(1));
        want.add(a2->evaluate_names({"t", "s"}), LaurentPoly::monomial(1));
        want.add(a2->generator(0), LaurentPoly::monomial(2));
        want.add(a2->generator(1), LaurentPoly::monomial(2));
        want.add(kIdentity, LaurentPoly::monomial(3));
        CHECK(alg.kl_element(a2->longest()) == want);
    }

    // Unequal parameters: B2 with L=(1,2) and G2 with L=(1,3).
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg2(*b2, WeightFunction{{1, 2}});
    for (Elt x = 0; x < b2->order(); ++x)
        CHECK(alg2.kl_element(x) == oracles::kl_fixed_point(alg2, x, total_weight(alg2, b2->longest())));

    auto g2 = builtin_system("G2");
    HeckeAlgebra alg3(*g2, WeightFunction{{1, 3}});
    for (Elt x = 0; x < g2->order(); ++x)
        CHECK(alg3.kl_element(x) == oracles::kl_fixed_point(alg3, x, total_weight(alg3, g2->longest())));
}

TEST_CASE("negative KL coefficient appears at unequal parameters") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    const Elt tst = b2->evaluate_names({"t", "s", "t"});
    // b_tst has P_{t,tst} = v^3 - v (checked against the oracle).
    const LaurentPoly p = alg.kl_polynomial(b2->generator(1), tst);
    CHECK(p == LaurentPoly::monomial(3) - LaurentPoly::monomial(1));
    CHECK(oracles::kl_fixed_point(alg, tst, 6) == alg.kl_element(tst));
}

TEST_CASE("kl_expand round-trips") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    CHECK(alg.kl_expand(kl_gen(alg, 0)) == KLCoords{{b2->generator(0), LaurentPoly(1)}});
    // H_s = b_s - v^{L(s)} b_e.
    KLCoords hs = alg.kl_expand(HeckeElt::basis(b2->generator(0)));
    CHECK(hs == KLCoords{{b2->generator(0), LaurentPoly(1)},
                         {kIdentity, -LaurentPoly::monomial(1)}});

    std::mt19937 rng(31);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b2->order() - 1));
    for (int i = 0; i < 30; ++i) {
        HeckeElt h = HeckeElt::basis(pick(rng));
        h.add(pick(rng), LaurentPoly::monomial(-1) + LaurentPoly(2));
        h.add(pick(rng), LaurentPoly::monomial(2, -5));
        KLCoords coords = alg.kl_expand(h);
        HeckeElt rebuilt;
        for (const auto& [x, c] : coords) rebuilt += c * alg.kl_element(x);
        CHECK(rebuilt == h);
    }
}

TEST_CASE("kl_product examples") {
    // m=2: b_{w0} = b_s b_t.
    auto i22 = builtin_system("I2(2)");
    HeckeAlgebra alg0(*i22, WeightFunction{{1, 2}});
    CHECK(alg0.kl_product_names({"s", "t"}) == KLCoords{{i22->longest(), LaurentPoly(1)}});

    // B2, L=(1,2): b_s b_t b_s b_t = b_{stst} + (v + v^-1) b_{st}.
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction{{1, 2}});
    KLCoords got = alg.kl_product_names({"s", "t", "s", "t"});
    CHECK(got == KLCoords{{b2->longest(), LaurentPoly(1)},
                          {b2->evaluate_names({"s", "t"}), LaurentPoly::sym(1)}});

    // G2, L=(1,3): b_s b_t b_s b_t b_s b_t.
    auto g2 = builtin_system("G2");
    HeckeAlgebra alg2(*g2, WeightFunction{{1, 3}});
    KLCoords got2 = alg2.kl_product_names({"s", "t", "s", "t", "s", "t"});
    KLCoords want2{{g2->longest(), LaurentPoly(1)},
                   {g2->evaluate_names({"s", "t", "s", "t"}), Int(2) * LaurentPoly::sym(2)},
                   {g2->evaluate_names({"s", "t"}), LaurentPoly::sym(4) + LaurentPoly(3)}};
    CHECK(got2 == want2);
}

TEST_CASE("unequal-parameter dihedral recursion in I2(12)") {
    auto sys = builtin_system("I2(12)");
    HeckeAlgebra alg(*sys, WeightFunction{{1, 2}});  // 0 < L(s) < L(t)
    auto b = [&](const std::vector<std::string>& w) { return alg.kl_element(sys->evaluate_names(w)); };

    // b_s b_{tststs} = b_{stststs}
    HeckeElt lhs = alg.mult(b({"s"}), b({"t", "s", "t", "s", "t", "s"}));
    CHECK(lhs == b({"s", "t", "s", "t", "s", "t", "s"}));

    // b_t b_{stststs} = b_{tstststs} + (v^{L(t)-L(s)} + v^{L(s)-L(t)}) b_{tststs} + b_{tsts}
    HeckeElt lhs2 = alg.mult(b({"t"}), b({"s", "t", "s", "t", "s", "t", "s"}));
    HeckeElt want = b({"t", "s", "t", "s", "t", "s", "t", "s"});
    want += LaurentPoly::sym(1) * b({"t", "s", "t", "s", "t", "s"});
    want += b({"t", "s", "t", "s"});
    CHECK(lhs2 == want);
}

TEST_CASE("structure constants reproduce the product") {
    auto g2 = builtin_system("G2");
    HeckeAlgebra alg(*g2, WeightFunction{{1, 3}});
    std::mt19937 rng(37);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(g2->order() - 1));
    for (int i = 0; i < 15; ++i) {
        const Elt x = pick(rng), y = pick(rng);
        HeckeElt rebuilt;
        for (const auto& [z, mz] : alg.structure_constants(x, y)) rebuilt += mz * alg.kl_element(z);
        CHECK(rebuilt == alg.mult(alg.kl_element(x), alg.kl_element(y)));
    }
}

TEST_CASE("bott-samelson coefficients are bar-invariant") {
    auto b3 = builtin_system("B3");
    HeckeAlgebra alg(*b3, WeightFunction::split(b3->matrix()));
    std::mt19937 rng(41);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b3->order() - 1));
    for (int i = 0; i < 12; ++i) {
        const Word& w = b3->normal_form(pick(rng));
        for (const auto& [y, q] : alg.kl_product(w)) CHECK(q.is_bar_invariant());
    }
}

TEST_CASE("standard pairing in the split case") {
    auto b2 = builtin_system("B2");
    HeckeAlgebra alg(*b2, WeightFunction::split(b2->matrix()));
    HeckeAlgebra unequal(*b2, WeightFunction{{1, 2}});
    CHECK_THROWS_AS(unequal.pairing(HeckeElt::unit(), HeckeElt::unit()), unsupported_weights);

    // (H_x, H_y) = delta.
    for (Elt x = 0; x < b2->order(); ++x)
        for (Elt y = 0; y < b2->order(); ++y) {
            LaurentPoly p = alg.pairing(HeckeElt::basis(x), HeckeElt::basis(y));
            CHECK(p == (x == y ? LaurentPoly(1) : LaurentPoly()));
        }

    // (b_s, b_s) = 1 + v^2 and (b_s H_e, H_e) = (H_e, b_s H_e) = v.
    HeckeElt bs = kl_gen(alg, 0);
    CHECK(alg.pairing(bs, bs) == LaurentPoly(1) + LaurentPoly::monomial(2));
    CHECK(alg.pairing(bs, HeckeElt::unit()) == LaurentPoly::monomial(1));
    CHECK(alg.pairing(HeckeElt::unit(), bs) == LaurentPoly::monomial(1));

    // Self-adjointness (b_w x, y) = (x, b_{w^-1} y) on random data.
    std::mt19937 rng(43);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(b2->order() - 1));
    for (int i = 0; i < 40; ++i) {
        const Elt w = pick(rng);
        HeckeElt x = HeckeElt::basis(pick(rng)), y = HeckeElt::basis(pick(rng));
        x.add(pick(rng), LaurentPoly::monomial(-1, 2));
        HeckeElt bw = alg.kl_element(w);
        HeckeElt bwinv = alg.kl_element(b2->inverse(w));
        CHECK(alg.pairing(alg.mult(bw, x), y) == alg.pairing(x, alg.mult(bwinv, y)));
        CHECK(alg.pairing(alg.mult(x, bw), y) == alg.pairing(x, alg.mult(y, bwinv)));
    }

    // Graded orthonormality: (b_w, b_v) = delta + v Z[v].
    for (Elt w = 0; w < b2->order(); ++w)
        for (Elt v = 0; v < b2->order(); ++v) {
            LaurentPoly p = alg.pairing(alg.kl_element(w), alg.kl_element(v));
            if (w == v) p -= LaurentPoly(1);
            CHECK(p.is_in_positive_part());
        }
}

TEST_CASE("concurrent readers share one KL table") {
    auto d4 = builtin_system("D4");
    HeckeAlgebra alg(*d4, WeightFunction::split(d4->matrix()));
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (Elt x = static_cast<Elt>(w); x < 60; x += 4) {
                HeckeElt b = alg.kl_element(x);
                if (alg.bar(b) != b) ok = false;
            }
        });
    for (auto& t : workers) t.join();
    CHECK(ok.load());
}

TEST_CASE("balanced poincare polynomials") {
    CHECK(poincare_balanced(*builtin_system("A1")) == LaurentPoly::sym(1));
    CHECK(poincare_balanced(*builtin_system("A1xA1")) == LaurentPoly::sym(1) * LaurentPoly::sym(1));
    // A2: length census 1,2,2,1.
    LaurentPoly a2 = poincare_balanced(*builtin_system("A2"));
    LaurentPoly want = LaurentPoly::sym(3) + Int(2) * LaurentPoly::sym(1);
    CHECK(a2 == want);
}
