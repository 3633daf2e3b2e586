#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foldkit/catalog.hpp"
#include "foldkit/coxeter.hpp"
#include "oracles.hpp"

using namespace foldkit;

TEST_CASE("orders of small groups") {
    CHECK(builtin_system("A1")->order() == 2);
    CHECK(builtin_system("A1")->length(builtin_system("A1")->longest()) == 1);
    CHECK(builtin_system("A2")->order() == 6);
    CHECK(builtin_system("A3")->order() == 24);
    CHECK(builtin_system("B2")->order() == 8);
    CHECK(builtin_system("B3")->order() == 48);
    CHECK(builtin_system("G2")->order() == 12);
    CHECK(builtin_system("H3")->order() == 120);
    CHECK(builtin_system("I2(7)")->order() == 14);
    CHECK(builtin_system("A3xA3")->order() == 576);
}

TEST_CASE("D4 has order 192 and longest length 12") {
    auto d4 = builtin_system("D4");
    CHECK(d4->order() == 192);
    CHECK(d4->length(d4->longest()) == 12);  // = number of positive roots
}

TEST_CASE("A_n layer sizes match the permutation inversion census") {
    for (int n = 2; n <= 4; ++n) {
        auto sys = builtin_system("A" + std::to_string(n));
        auto layers = sys->layer_sizes();
        auto census = oracles::inversion_census(n + 1);
        REQUIRE(layers.size() == census.size());
        for (std::size_t l = 0; l < layers.size(); ++l)
            CHECK(layers[l] == static_cast<std::size_t>(census.at(static_cast<int>(l))));
    }
}

TEST_CASE("cap exceeded on an infinite group") {
    // Affine A_2: all bonds 3, three generators.
    CoxeterMatrix m;
    m.generators = {"a", "b", "c"};
    m.entries = {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
    CHECK_THROWS_AS(CoxeterSystem(m, 500), cap_exceeded);
}

TEST_CASE("matrix validation") {
    CoxeterMatrix m;
    m.generators = {"a", "b"};
    m.entries = {{1, 1}, {1, 1}};
    CHECK_THROWS_AS((CoxeterSystem{m}), invalid_matrix);
    m.entries = {{1, 3}, {2, 1}};
    CHECK_THROWS_AS((CoxeterSystem{m}), invalid_matrix);
}

TEST_CASE("normal forms") {
    auto a3 = builtin_system("A3");
    CHECK(a3->evaluate_names({"x", "x"}) == kIdentity);
    CHECK(a3->evaluate_names({"x", "y", "x"}) == a3->evaluate_names({"y", "x", "y"}));

    auto b2 = builtin_system("B2");
    const Elt w = b2->evaluate_names({"s", "t", "s", "t", "s"});
    CHECK(b2->length(w) == 3);
    CHECK(b2->name(w) == "t s t");  // ShortLex-least reduced word of stst*s
}

TEST_CASE("multiplication") {
    auto a3 = builtin_system("A3");
    const Elt w = a3->evaluate_names({"x", "y", "x"});
    CHECK(a3->multiply(kIdentity, w) == w);
    const Elt s = a3->generator(0);
    CHECK(a3->multiply(s, s) == kIdentity);
    CHECK(a3->length(a3->multiply(w, a3->generator(2))) == 4);

    std::mt19937 rng(3);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(a3->order() - 1));
    for (int i = 0; i < 500; ++i) {
        const Elt a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(a3->multiply(a3->multiply(a, b), c) == a3->multiply(a, a3->multiply(b, c)));
    }
}

TEST_CASE("descents") {
    auto a3 = builtin_system("A3");
    CHECK(a3->descents_right(kIdentity).empty());
    CHECK(a3->descents_right(a3->longest()).size() == 3);
    CHECK(a3->descents_left(a3->longest()).size() == 3);
    const Elt xy = a3->evaluate_names({"x", "y"});
    CHECK(a3->descents_right(xy) == std::vector<Gen>{1});
    CHECK(a3->descents_left(xy) == std::vector<Gen>{0});
}

TEST_CASE("length changes by one under generators") {
    for (const std::string& name : std::vector<std::string>{"A3", "B3", "I2(5)", "D4"}) {
        auto sys = builtin_system(name);
        for (Elt w = 0; w < sys->order(); ++w)
            for (Gen s = 0; s < sys->rank(); ++s) {
                const int diff = sys->length(sys->mult_gen(w, s)) - sys->length(w);
                CHECK((diff == 1 || diff == -1));
            }
    }
}

TEST_CASE("bruhat order basics") {
    auto b2 = builtin_system("B2");
    const Elt s = b2->generator(0), t = b2->generator(1);
    const Elt sts = b2->evaluate_names({"s", "t", "s"});
    const Elt tst = b2->evaluate_names({"t", "s", "t"});
    // The subword property: "s" sits inside the reduced word "t s t", while
    // sts and tst are incomparable.
    CHECK(b2->bruhat_leq(s, tst));
    CHECK(b2->bruhat_leq(t, tst));
    CHECK(!b2->bruhat_leq(sts, tst));
    CHECK(!b2->bruhat_leq(tst, sts));
    for (Elt w = 0; w < b2->order(); ++w) {
        CHECK(b2->bruhat_leq(kIdentity, w));
        CHECK(b2->bruhat_leq(w, b2->longest()));
        CHECK((b2->bruhat_leq(b2->longest(), w) == (w == b2->longest())));
    }
}

TEST_CASE("bruhat order agrees with the brute-force subword oracle") {
    for (const std::string& name : std::vector<std::string>{"I2(6)", "A3", "B3"}) {
        auto sys = builtin_system(name);
        for (Elt a = 0; a < sys->order(); ++a)
            for (Elt b = 0; b < sys->order(); ++b)
                CHECK(sys->bruhat_leq(a, b) == oracles::bruhat_leq_brute(*sys, a, b));
    }
    // Sampled pairs in a group of order 120.
    auto a4 = builtin_system("A4");
    std::mt19937 rng(5);
    std::uniform_int_distribution<Elt> pick(0, static_cast<Elt>(a4->order() - 1));
    for (int i = 0; i < 200; ++i) {
        const Elt a = pick(rng), b = pick(rng);
        CHECK(a4->bruhat_leq(a, b) == oracles::bruhat_leq_brute(*a4, a, b));
    }
}

TEST_CASE("antisymmetry and transitivity on A3") {
    auto sys = builtin_system("A3");
    for (Elt a = 0; a < sys->order(); ++a)
        for (Elt b = 0; b < sys->order(); ++b) {
            if (sys->bruhat_leq(a, b) && sys->bruhat_leq(b, a)) CHECK(a == b);
            for (Elt c = 0; c < sys->order(); ++c)
                if (sys->bruhat_leq(a, b) && sys->bruhat_leq(b, c)) CHECK(sys->bruhat_leq(a, c));
        }
}

TEST_CASE("parabolic longest elements") {
    auto a4 = builtin_system("A4");
    CHECK(a4->longest_element({0}) == a4->generator(0));
    CHECK(a4->longest_element({}) == kIdentity);
    // Commuting subset: the product, of length 2.
    const Elt both = a4->longest_element({0, 3});
    CHECK(a4->length(both) == 2);
    CHECK(both == a4->multiply(a4->generator(0), a4->generator(3)));
    // A_2 parabolic {s2,s3}: s2 s3 s2 of length 3.
    const Elt u = a4->longest_element({1, 2});
    CHECK(a4->length(u) == 3);
    CHECK(u == a4->evaluate_names({"s2", "s3", "s2"}));
}

TEST_CASE("element orders") {
    auto d4 = builtin_system("D4");
    CHECK(d4->element_order(kIdentity) == 1);
    for (Gen s = 0; s < d4->rank(); ++s) CHECK(d4->element_order(d4->generator(s)) == 2);
    const Elt st = d4->multiply(d4->generator(0), d4->evaluate_names({"u1", "u2", "u3"}));
    CHECK(d4->element_order(st) == 6);
}

TEST_CASE("tits reducedness oracle agrees with length bookkeeping") {
    auto b3 = builtin_system("B3");
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> len(0, 10), gen(0, b3->rank() - 1);
    for (int i = 0; i < 300; ++i) {
        Word w;
        const int l = len(rng);
        for (int j = 0; j < l; ++j) w.push_back(static_cast<char>(gen(rng)));
        const bool reduced = b3->length(b3->evaluate(w)) == static_cast<int>(w.size());
        CHECK(tits::is_reduced(b3->matrix(), w) == reduced);
    }
}

TEST_CASE("braid closure enumerates exactly the reduced words") {
    auto a3 = builtin_system("A3");
    for (Elt w = 0; w < a3->order(); ++w)
        CHECK(tits::reduced_words(a3->matrix(), a3->normal_form(w)) ==
              oracles::reduced_words_brute(*a3, w));
}

TEST_CASE("normal form is ShortLex-least among reduced words") {
    auto b3 = builtin_system("B3");
    for (Elt w = 0; w < b3->order(); ++w) {
        auto words = oracles::reduced_words_brute(*b3, w);
        CHECK(*words.begin() == b3->normal_form(w));
    }
}

TEST_CASE("poincare layers are palindromic for finite groups") {
    for (const std::string& name : std::vector<std::string>{"A3", "B3", "D4", "H3"}) {
        auto sys = builtin_system(name);
        auto layers = sys->layer_sizes();
        for (std::size_t i = 0; i < layers.size(); ++i)
            CHECK(layers[i] == layers[layers.size() - 1 - i]);
    }
}
