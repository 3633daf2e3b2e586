#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "foldkit/catalog.hpp"
#include "foldkit/grothendieck.hpp"
#include "foldkit/io.hpp"
#include "foldkit/verify.hpp"

using namespace foldkit;

namespace {

PermGroup s3_group() {
    return PermGroup::closure({{1, 2, 0}, {0, 2, 1}}, 3);
}

} // namespace

TEST_CASE("cyclotomic scalars") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});

    CycloScalar i = CycloScalar::root_of_unity(4);
    CHECK(i * i == CycloScalar(-1));
    CHECK(i * i * i * i == CycloScalar(1));
    CHECK((i.inverse() * i) == CycloScalar(1));
    CHECK(i.inverse() == -i);

    CycloScalar z = CycloScalar::root_of_unity(6);
    CycloScalar sum = z + z.inverse();  // 2 cos(pi/3) = 1
    CHECK(sum == CycloScalar(1));

    CHECK((CycloScalar(3) * CycloScalar(Rat(1, 3))) == CycloScalar(1));
}

TEST_CASE("characters") {
    PermGroup s3 = s3_group();
    REQUIRE(s3.size() == 6);
    REQUIRE(s3.conjugacy_classes().size() == 3);

    ClassFunction triv = character(CharacterKind::Trivial, s3);
    ClassFunction sign = character(CharacterKind::Sign, s3);
    ClassFunction std3 = character(CharacterKind::Std3, s3);
    ClassFunction reg = character(CharacterKind::Regular, s3);

    Perm e = perm_identity(3), cyc = {1, 2, 0}, tr = {0, 2, 1};
    CHECK(triv.at_integer(cyc) == 1);
    CHECK(sign.at_integer(tr) == -1);
    CHECK(sign.at_integer(cyc) == 1);
    CHECK(std3.at_integer(e) == 3);
    CHECK(std3.at_integer(tr) == 1);
    CHECK(std3.at_integer(cyc) == 0);
    CHECK(reg.at_integer(e) == 6);
    CHECK(reg.at_integer(tr) == 0);

    PermGroup z3 = PermGroup::closure({{1, 2, 0}}, 3);
    ClassFunction std3r = character(CharacterKind::Std3, z3);
    CHECK(std3r.at_integer(perm_identity(3)) == 3);
    CHECK(std3r.at_integer(cyc) == 0);

    PermGroup z2 = PermGroup::closure({{1, 0}}, 2);
    CHECK_THROWS_AS(character(CharacterKind::Std3, z2), kind_unavailable);
}

TEST_CASE("weighted basis and quotient agree for abelian groups") {
    Perm swap = {1, 0};
    PermGroup z2 = PermGroup::closure({swap}, 2);

    GSetOrbit pair{"pair", 2, PermGroup::from_elements({perm_identity(2)}), {"1"}, {{0}, {0}}};
    GSetOrbit pt{"pt", 1, z2, {"+", "-"}, {{0, 1}, {1, 0}}};
    GSetDatum gset{z2, {pt, pair}};
    std::vector<ClassFunction> chars{character(CharacterKind::Trivial, z2),
                                     character(CharacterKind::Sign, z2)};

    CHECK(weighted_basis_abelian(gset, swap) == std::vector<std::string>{"pt"});
    CHECK(weighted_basis_abelian(gset, perm_identity(2)) == std::vector<std::string>{"pt", "pair"});

    auto at_e = weighted_quotient(gset, chars, perm_identity(2));
    auto at_s = weighted_quotient(gset, chars, swap);
    CHECK(at_e.rank == 2);
    CHECK(at_s.rank == 1);
    REQUIRE(at_s.basis.size() == 1);
    CHECK(at_s.basis[0].first == "pt");

    GSetDatum nonab{s3_group(), {}};
    CHECK_THROWS_AS(weighted_basis_abelian(nonab, perm_identity(3)), not_abelian);
}

TEST_CASE("weighted quotient over Z/4 uses genuinely cyclotomic scalars") {
    Perm four = {1, 2, 3, 0};
    PermGroup z4 = PermGroup::closure({four}, 4);
    REQUIRE(z4.size() == 4);

    // One fixed point; irreps of Z/4 permuted by the dual generator, which
    // scales by i at the group generator.
    GSetOrbit pt{"pt", 1, z4, {"1", "i", "-1", "-i"}, {}};
    std::vector<std::size_t> ident{0, 1, 2, 3}, rotation{1, 2, 3, 0};
    pt.xi_action = {ident, rotation};
    GSetDatum gset{z4, {pt}};

    ClassFunction triv = character(CharacterKind::Trivial, z4);
    ClassFunction xi;
    xi.group = z4;
    for (const auto& cls : z4.conjugacy_classes()) {
        const Perm& rep = z4.elements[static_cast<std::size_t>(cls.front())];
        // xi(four^k) = i^k
        int k = 0;
        Perm cur = perm_identity(4);
        while (cur != rep) {
            cur = perm_compose(cur, four);
            ++k;
        }
        xi.values.push_back(CycloScalar::root_of_unity(4, k));
    }

    // One orbit, g always in the stabilizer: rank 1 at every g (the dual
    // generator identifies all four irreps, scaled by i^k).
    auto q = weighted_quotient(gset, {triv, xi}, four);
    CHECK(q.rank == 1);
    auto q0 = weighted_quotient(gset, {triv, xi}, perm_identity(4));
    CHECK(q0.rank == 1);
    CHECK(weighted_basis_abelian(gset, four).size() == 1);
    // Without the dual generator there are no relations at all.
    GSetOrbit pt_triv_only = pt;
    pt_triv_only.xi_action = {ident};
    GSetDatum gset1{z4, {pt_triv_only}};
    CHECK(weighted_quotient(gset1, {triv}, four).rank == 4);
}

TEST_CASE("xi-action must be a permutation") {
    Perm swap = {1, 0};
    PermGroup z2 = PermGroup::closure({swap}, 2);
    GSetOrbit bad{"pt", 1, z2, {"+", "-"}, {{0, 0}}};
    GSetDatum gset{z2, {bad}};
    CHECK_THROWS_AS(weighted_quotient(gset, {character(CharacterKind::Trivial, z2)}, swap),
                    inconsistent_action);
}

TEST_CASE("subset fixed counts") {
    auto r = subset_fixed_counts({3}, 3);
    CHECK(r.poly == LaurentPoly::sym(3));
    CHECK(r.counts == std::vector<Int>{1, 0, 0, 1});

    auto r2 = subset_fixed_counts({2, 1}, 3);
    CHECK(r2.poly == LaurentPoly::sym(3) + LaurentPoly::sym(1));

    auto r3 = subset_fixed_counts({2, 2}, 4);
    CHECK(r3.poly == LaurentPoly::sym(4) + LaurentPoly(2));

    CHECK_THROWS_AS(subset_fixed_counts({2, 2}, 3), partition_mismatch);

    // Palindromic counts for assorted cycle types.
    for (const auto& type : std::vector<std::vector<int>>{{1, 1, 1}, {3, 2}, {4, 2, 1}, {5}}) {
        int L = 0;
        for (int c : type) L += c;
        auto rr = subset_fixed_counts(type, L);
        for (std::size_t i = 0; i < rr.counts.size(); ++i)
            CHECK(rr.counts[i] == rr.counts[rr.counts.size() - 1 - i]);
        CHECK(rr.poly.is_bar_invariant());
    }
}

TEST_CASE("sl2 tensor decomposition") {
    CHECK(sl2_tensor_decompose(1) == std::map<int, Int>{{1, 1}});
    CHECK(sl2_tensor_decompose(2) == std::map<int, Int>{{0, 1}, {2, 1}});
    CHECK(sl2_tensor_decompose(4) == std::map<int, Int>{{0, 2}, {2, 3}, {4, 1}});
    // Dimension bookkeeping: sum of mult * dim = 2^n.
    for (int n = 1; n <= 10; ++n) {
        Int total = 0;
        for (const auto& [j, mult] : sl2_tensor_decompose(n)) total += mult * (j + 1);
        Int want = 1;
        for (int i = 0; i < n; ++i) want *= 2;
        CHECK(total == want);
    }
}

TEST_CASE("dihedral equal-parameter coefficients match the Hecke oracle") {
    for (int m = 2; m <= 8; ++m) {
        auto coeffs = dihedral_equal_coeffs(m);
        auto sys = builtin_system("I2(" + std::to_string(m) + ")");
        HeckeAlgebra alg(*sys, WeightFunction::split(sys->matrix()));
        Word word;
        for (int i = 0; i < m; ++i) word.push_back(static_cast<char>(i % 2));
        KLCoords got = alg.kl_product(word);

        KLCoords want{{sys->longest(), LaurentPoly(1)}};
        for (const auto& [k, mult] : coeffs.kappa) {
            Word prefix(word.begin(), word.begin() + k);
            want.emplace(sys->evaluate(prefix), LaurentPoly(mult));
        }
        CHECK(got == want);
    }
    auto c3 = dihedral_equal_coeffs(3);
    CHECK(c3.kappa == std::map<int, Int>{{1, 1}});
    CHECK(c3.rho == std::map<int, Int>{{1, -1}});
    auto c4 = dihedral_equal_coeffs(4);
    CHECK(c4.kappa == std::map<int, Int>{{2, 2}});
    CHECK(!c4.convention.empty());
}

TEST_CASE("fixture loading validates orbits and stabilizers") {
    auto sys = builtin_system("A3");
    auto action = make_action(sys->matrix(), {{"swap", {{"x", "z"}, {"z", "x"}}}});
    // Orbit not closed under G:
    CHECK_THROWS(make_entry(*sys, action, {sys->evaluate_names({"y", "x", "y", "z"})}, 0,
                            CharacterKind::Trivial));
    // Proper orbit is accepted and the stabilizer is trivial:
    DecompEntry e = make_entry(
        *sys, action,
        {sys->evaluate_names({"y", "x", "y", "z"}), sys->evaluate_names({"y", "z", "y", "x"})}, 0,
        CharacterKind::Trivial);
    CHECK(e.character.group.size() == 1);
    // Singleton sigma-fixed orbit has the full group as stabilizer:
    DecompEntry e2 =
        make_entry(*sys, action, {sys->evaluate_names({"y", "x", "z"})}, 1, CharacterKind::Trivial);
    CHECK(e2.character.group.size() == 2);
}

TEST_CASE("a1a1 fixture traces") {
    EquivDecomp d = load_fixture_file(std::string(default_fixture_dir()) + "/a1a1.json");
    const Elt tu = d.ambient->evaluate_names({"t", "u"});

    auto at_sigma = trace_specialize(d, d.sigma);
    REQUIRE(at_sigma.size() == 1);
    CHECK(at_sigma.at(tu) == LaurentPoly::sym(2));

    auto at_e = trace_specialize(d, perm_identity(2));
    CHECK(at_e.at(tu) == LaurentPoly::sym(2) + LaurentPoly(2));

    auto forget = forget_specialize(d);
    CHECK(forget == at_e);
}

TEST_CASE("d4g2 fixture traces") {
    EquivDecomp d = load_fixture_file(std::string(default_fixture_dir()) + "/d4g2.json");
    auto sys = d.ambient;
    const Elt st = sys->evaluate_names({"v", "u1", "u2", "u3"});
    const Elt stst = sys->multiply(st, st);
    const Elt w0 = sys->multiply(stst, st);

    auto traced = trace_specialize(d, d.sigma);
    REQUIRE(traced.size() == 3);
    CHECK(traced.at(w0) == LaurentPoly(1));
    CHECK(traced.at(stst) == Int(2) * LaurentPoly::sym(2));
    CHECK(traced.at(st) == LaurentPoly::sym(4) + LaurentPoly(3));

    auto forget = forget_specialize(d);
    CHECK(forget.at(st) == LaurentPoly::sym(4) + Int(6) * LaurentPoly::sym(2) + LaurentPoly(12));
    CHECK(forget.at(stst) == Int(2) * LaurentPoly::sym(2) + LaurentPoly(6));
    // Blue orbits contribute 1 (or v + v^-1) on each member.
    const Elt u1u2stst = sys->multiply(sys->evaluate_names({"u1", "u2"}), stst);
    CHECK(forget.at(u1u2stst) == LaurentPoly(1));

    // Trace at e, weighted by orbit size, matches forget summed over all
    // orbit members.
    auto at_e = trace_specialize(d, perm_identity(4));
    LaurentPoly lhs, rhs;
    for (const auto& [w, p] : at_e) {
        std::set<Elt> orbit;
        for (const Perm& g : d.action.closure.elements) orbit.insert(act_element(*sys, g, w));
        lhs += Int(static_cast<long>(orbit.size())) * p;
    }
    for (const auto& [w, p] : forget) rhs += p;
    CHECK(lhs == rhs);
}

TEST_CASE("trace support is always sigma-fixed") {
    for (const std::string& name : std::vector<std::string>{"a1a1", "a3b2", "a4b2", "d4g2"}) {
        EquivDecomp d = load_fixture_file(std::string(default_fixture_dir()) + "/" + name + ".json");
        for (const Perm& g : d.action.closure.elements) {
            auto traced = trace_specialize(d, g);
            for (const auto& [w, p] : traced) CHECK(act_element(*d.ambient, g, w) == w);
        }
    }
}

TEST_CASE("comparison products respect augmentation and symmetry") {
    // At v=1 the KL coordinate expansion must satisfy the augmentation
    // identity eps(prod b_{x_i}) = prod eps(b_{x_i}), and the expansion of a
    // product of G-fixed factors must be G-symmetric. These are independent
    // of the expansion algorithm and pin down the full support.
    auto eval1 = [](const LaurentPoly& p) {
        Int out = 0;
        for (const auto& [e, c] : p.terms()) out += c;
        return out;
    };
    struct Case {
        std::string system;
        std::map<std::string, std::map<std::string, std::string>> action;
        std::vector<std::string> factors;
    };
    std::vector<Case> cases = {
        {"A3", {{"swap", {{"x", "z"}, {"z", "x"}}}}, {"y", "x z", "y", "x z"}},
        {"A4",
         {{"flip", {{"s1", "s4"}, {"s4", "s1"}, {"s2", "s3"}, {"s3", "s2"}}}},
         {"s1 s4", "s2 s3 s2", "s1 s4", "s2 s3 s2"}},
        {"D4",
         {{"rot", {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u1"}}}},
         {"v", "u1 u2 u3", "v", "u1 u2 u3", "v", "u1 u2 u3"}},
    };
    for (const auto& c : cases) {
        auto sys = builtin_system(c.system);
        HeckeAlgebra alg(*sys, WeightFunction::split(sys->matrix()));
        std::vector<Elt> factors;
        Int want_mass = 1;
        for (const auto& f : c.factors) {
            const Elt x = parse_element(*sys, f);
            factors.push_back(x);
            Int eps = 0;
            for (const auto& [y, p] : alg.kl_element(x).coords) eps += eval1(p);
            want_mass *= eps;
        }
        KLCoords expansion = alg.kl_product_general(factors);
        Int mass = 0;
        for (const auto& [z, mz] : expansion) {
            Int eps = 0;
            for (const auto& [y, p] : alg.kl_element(z).coords) eps += eval1(p);
            mass += eval1(mz) * eps;
        }
        CAPTURE(c.system);
        CHECK(mass == want_mass);

        GroupAction action = make_action(sys->matrix(), c.action);
        for (const Perm& g : action.closure.elements)
            for (const auto& [z, mz] : expansion) {
                auto it = expansion.find(act_element(*sys, g, z));
                REQUIRE(it != expansion.end());
                CHECK(it->second == mz);
            }
    }
}

TEST_CASE("compare_folded_product rejects non-transitive sigma") {
    EquivDecomp d = load_fixture_file(std::string(default_fixture_dir()) + "/a1a1.json");
    QuasiSplitEmbedding emb = fold(d.ambient, orbits(d.ambient->matrix(), d.action), d.action);
    CHECK_THROWS_AS(compare_folded_product(emb, d.product_word, d, perm_identity(2)),
                    verification_failed);
}
