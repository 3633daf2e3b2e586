#include "foldkit/verify.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "foldkit/catalog.hpp"
#include "foldkit/grothendieck.hpp"
#include "foldkit/io.hpp"

namespace foldkit {

namespace {

using Coords = std::map<Elt, LaurentPoly>;

std::shared_ptr<HeckeAlgebra> algebra(const std::string& system_name, const WeightFunction& w) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::vector<long>>, std::shared_ptr<HeckeAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(system_name, w.values);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sys = builtin_system(system_name);
    auto alg = std::make_shared<HeckeAlgebra>(*sys, w);
    cache.emplace(key, alg);
    return alg;
}

std::shared_ptr<HeckeAlgebra> split_algebra(const std::string& system_name) {
    return algebra(system_name, WeightFunction::split(builtin_matrix(system_name)));
}

std::string render(const CoxeterSystem& sys, const Coords& c) {
    std::ostringstream os;
    for (const auto& [w, p] : c) os << "  b(" << sys.name(w) << ") : " << p.str() << "\n";
    return os.str();
}

void check_coords(std::vector<CaseResult>& cases, const std::string& name, const CoxeterSystem& sys,
                  const Coords& got, const Coords& want) {
    if (got == want) {
        cases.push_back({name, true, ""});
    } else {
        cases.push_back({name, false, "expected:\n" + render(sys, want) + "got:\n" + render(sys, got)});
    }
}

void check(std::vector<CaseResult>& cases, const std::string& name, bool ok,
           const std::string& detail = "") {
    cases.push_back({name, ok, ok ? "" : detail});
}

Word alternating_word(int len, Gen first = 0) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(i % 2 == 0 ? first : 1 - first));
    return w;
}

// ---------------------------------------------------------------------------

SuiteResult suite_dihedral() {
    SuiteResult suite{"dihedral", {}};
    auto& cases = suite.cases;

    // m=2: b_{w0} = b_s b_t, any weights.
    for (auto [ls, lt] : {std::pair<long, long>{1, 1}, {1, 2}, {3, 5}}) {
        auto alg = algebra("I2(2)", WeightFunction{{ls, lt}});
        const Elt st = alg->system().evaluate(alternating_word(2));
        Coords want{{st, LaurentPoly(1)}};
        check_coords(cases, "m=2 L=(" + std::to_string(ls) + "," + std::to_string(lt) + ")",
                     alg->system(), alg->kl_product(alternating_word(2)), want);
    }

    // m=4: b_s b_t b_s b_t = b_{stst} + (v^k + v^-k) b_{st} for L in
    // {(k,2k)} and the (3k,2k) variant.
    for (auto [ls, lt, k] : {std::tuple<long, long, long>{1, 2, 1}, {2, 4, 2}, {3, 2, 1}}) {
        auto alg = algebra("I2(4)", WeightFunction{{ls, lt}});
        const CoxeterSystem& sys = alg->system();
        const std::string tag = " L=(" + std::to_string(ls) + "," + std::to_string(lt) + ")";
        Coords want{{sys.evaluate(alternating_word(4)), LaurentPoly(1)},
                    {sys.evaluate(alternating_word(2)), LaurentPoly::sym(k)}};
        check_coords(cases, "m=4 alt" + tag, sys, alg->kl_product(alternating_word(4)), want);

        // Direct form, in both letter orders.
        for (Gen first : {0, 1}) {
            HeckeElt prod4 = HeckeElt::unit(), prod2 = HeckeElt::unit();
            for (char c : alternating_word(4, first)) prod4 = alg->mult_kl_gen_right(prod4, c);
            for (char c : alternating_word(2, first)) prod2 = alg->mult_kl_gen_right(prod2, c);
            HeckeElt lhs = prod4 - LaurentPoly::sym(k) * prod2;
            check(cases, std::string("m=4 direct ") + (first == 0 ? "s" : "t") + "-first" + tag,
                  lhs == alg->kl_element(sys.evaluate(alternating_word(4, first))),
                  "b-product minus correction is not b_{w0}");
        }
    }

    // m=6: L = (k, 3k).
    for (auto [ls, lt, k] : {std::tuple<long, long, long>{1, 3, 1}, {2, 6, 2}}) {
        auto alg = algebra("I2(6)", WeightFunction{{ls, lt}});
        const CoxeterSystem& sys = alg->system();
        const std::string tag = " L=(" + std::to_string(ls) + "," + std::to_string(lt) + ")";
        LaurentPoly mid = Int(2) * LaurentPoly::sym(2 * k);
        LaurentPoly low = LaurentPoly::sym(4 * k) + LaurentPoly(3);
        Coords want{{sys.evaluate(alternating_word(6)), LaurentPoly(1)},
                    {sys.evaluate(alternating_word(4)), mid},
                    {sys.evaluate(alternating_word(2)), low}};
        check_coords(cases, "m=6 alt" + tag, sys, alg->kl_product(alternating_word(6)), want);

        for (Gen first : {0, 1}) {
            HeckeElt prod6 = HeckeElt::unit(), prod4 = HeckeElt::unit(), prod2 = HeckeElt::unit();
            for (char c : alternating_word(6, first)) prod6 = alg->mult_kl_gen_right(prod6, c);
            for (char c : alternating_word(4, first)) prod4 = alg->mult_kl_gen_right(prod4, c);
            for (char c : alternating_word(2, first)) prod2 = alg->mult_kl_gen_right(prod2, c);
            HeckeElt lhs = prod6 - (Int(2) * LaurentPoly::sym(2 * k)) * prod4 +
                           (LaurentPoly::sym(4 * k) + LaurentPoly(1)) * prod2;
            check(cases, std::string("m=6 direct ") + (first == 0 ? "s" : "t") + "-first" + tag,
                  lhs == alg->kl_element(sys.evaluate(alternating_word(6, first))),
                  "b-product minus corrections is not b_{w0}");
        }
    }

    // Equal parameters, m in 2..6, L = 1 and L = 2: coefficients are the
    // kappa/rho plethysm numbers from the ballot recursion.
    for (int m = 2; m <= 6; ++m) {
        const auto coeffs = dihedral_equal_coeffs(m);
        for (long level : {1L, 2L}) {
            auto alg = algebra("I2(" + std::to_string(m) + ")", WeightFunction{{level, level}});
            const CoxeterSystem& sys = alg->system();
            const std::string tag = "equal m=" + std::to_string(m) + " L=" + std::to_string(level);

            Coords want{{sys.evaluate(alternating_word(m)), LaurentPoly(1)}};
            for (const auto& [k, mult] : coeffs.kappa)
                want.emplace(sys.evaluate(alternating_word(k)), LaurentPoly(mult));
            check_coords(cases, tag + " alt(kappa)", sys, alg->kl_product(alternating_word(m)), want);

            HeckeElt rhs = HeckeElt::unit();
            for (char c : alternating_word(m)) rhs = alg->mult_kl_gen_right(rhs, c);
            for (const auto& [k, mult] : coeffs.rho) {
                HeckeElt prod = HeckeElt::unit();
                for (char c : alternating_word(k)) prod = alg->mult_kl_gen_right(prod, c);
                rhs += LaurentPoly(mult) * prod;
            }
            check(cases, tag + " (rho)", rhs == alg->kl_element(sys.longest()),
                  "b_{m} + sum rho_k b_{k} is not b_{w0}");
        }
    }
    return suite;
}

// ---------------------------------------------------------------------------

SuiteResult suite_compare() {
    SuiteResult suite{"compare", {}};
    auto& cases = suite.cases;

    {
        auto alg = split_algebra("A1xA1");
        const Elt s = alg->system().evaluate_names({"s1", "s2"});
        LaurentPoly want = LaurentPoly::sym(2) + LaurentPoly(2);  // v^2 + 2 + v^-2
        check_coords(cases, "A1xA1: b_s b_s", alg->system(), alg->kl_product_general({s, s}),
                     Coords{{s, want}});
    }

    // b_{w0}^2 = [W'] b_{w0}.
    for (const std::string& name : std::vector<std::string>{
             "A1", "A2", "B2", "A3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"}) {
        auto alg = split_algebra(name);
        const Elt w0 = alg->system().longest();
        check_coords(cases, name + ": b_{w0}^2 = [W'] b_{w0}", alg->system(),
                     alg->kl_product_general({w0, w0}),
                     Coords{{w0, poincare_balanced(alg->system())}});
    }

    // A1^k x A1^l: b_s b_t = b_{st}.
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            std::string name = "A1";
            for (int i = 1; i < k + l; ++i) name += "xA1";
            auto alg = split_algebra(name);
            const CoxeterSystem& sys = alg->system();
            Word ws, wt;
            for (int i = 0; i < k; ++i) ws.push_back(static_cast<char>(i));
            for (int i = k; i < k + l; ++i) wt.push_back(static_cast<char>(i));
            const Elt s = sys.evaluate(ws), t = sys.evaluate(wt);
            Word wst = ws + wt;
            check_coords(cases, "A1^" + std::to_string(k) + " x A1^" + std::to_string(l), sys,
                         alg->kl_product_general({s, t}), Coords{{sys.evaluate(wst), LaurentPoly(1)}});
        }

    // I2(m)^k: products factor through the commuting copies, so the full
    // ambient expansion is the k-fold tensor square of the dihedral kappa
    // expansion. The folded sigma-trace counterpart with plain kappa
    // coefficients is covered by the dihedral suite at L = k.
    for (int m = 3; m <= 5; ++m) {
        const auto coeffs = dihedral_equal_coeffs(m);
        std::map<int, Int> kappa = coeffs.kappa;
        kappa[m] = 1;
        const std::string base = "I2(" + std::to_string(m) + ")";
        for (int k = 1; k <= 2; ++k) {
            const std::string name = k == 1 ? base : base + "x" + base;
            auto alg = split_algebra(name);
            const CoxeterSystem& sys = alg->system();
            // Alternating elements of one copy.
            auto copy_elt = [&](int copy, int len) {
                Word w;
                for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(2 * copy + (i % 2)));
                return sys.evaluate(w);
            };
            Elt s = kIdentity, t = kIdentity;
            for (int copy = 0; copy < k; ++copy) {
                s = sys.multiply(s, copy_elt(copy, 1));
                t = sys.multiply(t, sys.evaluate(Word(1, static_cast<char>(2 * copy + 1))));
            }
            std::vector<Elt> factors;
            for (int i = 0; i < m; ++i) factors.push_back(i % 2 == 0 ? s : t);

            Coords want;
            if (k == 1) {
                for (const auto& [j, mult] : kappa) want.emplace(copy_elt(0, j), LaurentPoly(mult));
            } else {
                for (const auto& [i, mi] : kappa)
                    for (const auto& [j, mj] : kappa)
                        want.emplace(sys.multiply(copy_elt(0, i), copy_elt(1, j)),
                                     LaurentPoly(mi * mj));
            }
            check_coords(cases, base + "^" + std::to_string(k) + ": kappa expansion", sys,
                         alg->kl_product_general(factors), want);
        }
    }

    {
        auto alg = split_algebra("A3");
        const CoxeterSystem& sys = alg->system();
        const Elt s = parse_element(sys, "y"), t = parse_element(sys, "x z");
        Coords want{{parse_element(sys, "y x z y x z"), LaurentPoly(1)},
                    {parse_element(sys, "y x y z"), LaurentPoly(1)},
                    {parse_element(sys, "y z y x"), LaurentPoly(1)},
                    {parse_element(sys, "y x z"), LaurentPoly::sym(1)}};
        check_coords(cases, "A3/B2: b_s b_t b_s b_t", sys, alg->kl_product_general({s, t, s, t}), want);
    }

    {
        auto alg = split_algebra("A4");
        const CoxeterSystem& sys = alg->system();
        const Elt t = parse_element(sys, "s1 s4"), u = parse_element(sys, "s2 s3 s2");
        const std::string w234 = "s2 s3 s2 s4 s3 s2";
        const std::string w123 = "s1 s2 s1 s3 s2 s1";
        // The printed terms plus the degree-zero flip pair w_{12} s4 s3 s2 /
        // w_{45} s1 s2 s3, which the augmentation count at v=1 forces.
        Coords want{{sys.multiply(sys.multiply(t, u), sys.multiply(t, u)), LaurentPoly(1)},
                    {parse_element(sys, "s2 s1 " + w234), LaurentPoly(1)},
                    {parse_element(sys, "s3 s4 " + w123), LaurentPoly(1)},
                    {parse_element(sys, "s1 " + w234), LaurentPoly::sym(1)},
                    {parse_element(sys, "s4 " + w123), LaurentPoly::sym(1)},
                    {parse_element(sys, "s1 s2 s1 s4 s3 s2"), LaurentPoly(1)},
                    {parse_element(sys, "s4 s3 s4 s1 s2 s3"), LaurentPoly(1)},
                    {sys.multiply(t, u), LaurentPoly::sym(1)}};
        check_coords(cases, "A4/B2: b_t b_u b_t b_u", sys, alg->kl_product_general({t, u, t, u}), want);
    }

    {
        auto alg = split_algebra("D4");
        const CoxeterSystem& sys = alg->system();
        const Elt s = parse_element(sys, "v"), t = parse_element(sys, "u1 u2 u3");
        const Elt st = sys.multiply(s, t);
        const Elt stst = sys.multiply(st, st);
        const Elt w0 = sys.multiply(stst, st);
        Coords want{{w0, LaurentPoly(1)},
                    {stst, Int(2) * LaurentPoly::sym(2) + LaurentPoly(6)},
                    {st, LaurentPoly::sym(4) + Int(6) * LaurentPoly::sym(2) + LaurentPoly(12)}};
        for (const std::string& pair : std::vector<std::string>{"u1 u2", "u1 u3", "u2 u3"}) {
            want.emplace(sys.multiply(parse_element(sys, pair), stst), LaurentPoly(1));
            want.emplace(sys.multiply(parse_element(sys, "v " + pair), st), LaurentPoly::sym(1));
        }
        for (const std::string& one : std::vector<std::string>{"u1", "u2", "u3"})
            want.emplace(sys.multiply(parse_element(sys, one), stst), LaurentPoly::sym(1));
        check_coords(cases, "D4/G2: (b_s b_t)^3", sys, alg->kl_product_general({s, t, s, t, s, t}),
                     want);
    }
    return suite;
}

// ---------------------------------------------------------------------------

SuiteResult suite_trace(const std::string& fixture_dir) {
    SuiteResult suite{"trace", {}};
    for (const std::string& name : std::vector<std::string>{"a1a1", "a3b2", "a4b2", "d4g2"}) {
        try {
            EquivDecomp d = load_fixture_file(fixture_dir + "/" + name + ".json");
            QuasiSplitEmbedding emb =
                fold(d.ambient, orbits(d.ambient->matrix(), d.action), d.action);
            CompareReport r = compare_folded_product(emb, d.product_word, d, d.sigma);
            check(suite.cases, "fixture " + name, r.pass, r.detail);
        } catch (const std::exception& e) {
            check(suite.cases, "fixture " + name, false, e.what());
        }
    }
    return suite;
}

// ---------------------------------------------------------------------------

SuiteResult suite_quadratic() {
    SuiteResult suite{"quadratic", {}};
    auto& cases = suite.cases;

    for (int L = 1; L <= 6; ++L) {
        auto r = subset_fixed_counts({L}, L);
        check(cases, "transitive cycle, L=" + std::to_string(L), r.poly == LaurentPoly::sym(L),
              "got " + r.poly.str());
    }
    {
        auto r = subset_fixed_counts({2, 1}, 3);
        LaurentPoly want = LaurentPoly::sym(3) + LaurentPoly::sym(1);
        check(cases, "L=3 cycle type (2,1)", r.poly == want, "got " + r.poly.str());
    }
    {
        auto r = subset_fixed_counts({2, 2}, 4);
        LaurentPoly want = LaurentPoly::sym(4) + LaurentPoly(2);
        check(cases, "L=4 cycle type (2,2)", r.poly == want, "got " + r.poly.str());
    }

    // c_s^2 = (v^{L(s)} + v^{-L(s)}) c_s in every shipped folded algebra.
    for (const auto& spec : quasi_split_examples()) {
        try {
            ResolvedExample ex = resolve_example(spec);
            HeckeAlgebra folded(*ex.embedding.folded, ex.embedding.weights);
            bool ok = true;
            std::ostringstream detail;
            for (Gen s = 0; s < ex.embedding.folded->rank(); ++s) {
                const Elt gs = ex.embedding.folded->generator(s);
                Coords want{{gs, LaurentPoly::sym(ex.embedding.weights.at(s))}};
                Coords got = folded.kl_product_general({gs, gs});
                if (got != want) {
                    ok = false;
                    detail << "generator " << ex.embedding.folded->matrix().generators[s] << ": got\n"
                           << render(*ex.embedding.folded, got);
                }
            }
            check(cases, "quadratic relation: " + spec.name, ok, detail.str());
        } catch (const std::exception& e) {
            check(cases, "quadratic relation: " + spec.name, false, e.what());
        }
    }
    return suite;
}

// ---------------------------------------------------------------------------

SuiteResult suite_steinberg() {
    SuiteResult suite{"steinberg", {}};
    auto& cases = suite.cases;

    for (const auto& spec : quasi_split_examples()) {
        try {
            ResolvedExample ex = resolve_example(spec);
            std::ostringstream detail;
            bool ok = true;

            SteinbergReport rep = steinberg_check(*ex.system, *ex.action);
            if (!rep.equal || rep.fixed_order != ex.embedding.folded->order()) {
                ok = false;
                detail << "fixed set " << rep.fixed_order << ", generated " << rep.generated_order
                       << ", folded order " << ex.embedding.folded->order() << "\n";
            }
            if (!sigma_transitive(*ex.action, ex.sigma)) {
                ok = false;
                detail << "sigma is not transitive on the orbits\n";
            }
            const int rank = ex.embedding.folded->rank();
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    try {
                        OrbitPairClass cls = classify_orbit_pair(ex.embedding, i, j);
                        (void)cls;
                    } catch (const std::exception& e) {
                        ok = false;
                        detail << "pair (" << i << "," << j << "): " << e.what() << "\n";
                    }
                }
            for (Elt w = 0; w < ex.embedding.folded->order(); ++w)
                if (!ex.embedding.length_additive(w)) {
                    ok = false;
                    detail << "length additivity fails at " << ex.embedding.folded->name(w) << "\n";
                    break;
                }
            check(cases, "quasi-split: " + spec.name, ok, detail.str());
        } catch (const std::exception& e) {
            check(cases, "quasi-split: " + spec.name, false, e.what());
        }
    }

    for (const auto& spec : plain_embedding_examples()) {
        try {
            ResolvedExample ex = resolve_example(spec);
            std::ostringstream detail;
            bool ok = true;
            const int rank = ex.embedding.folded->rank();
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    bool raised = false;
                    try {
                        classify_orbit_pair(ex.embedding, i, j);
                    } catch (const no_matching_case&) {
                        raised = true;
                    }
                    if (!raised) {
                        ok = false;
                        detail << "pair (" << i << "," << j << ") unexpectedly classified\n";
                    }
                }
            if (spec.name.find("weird") != std::string::npos) {
                const Elt image_w0 = ex.embedding.phi(ex.embedding.folded->longest());
                if (image_w0 == ex.system->longest()) {
                    ok = false;
                    detail << "longest element unexpectedly mapped to the ambient longest element\n";
                }
            }
            check(cases, "embedding: " + spec.name, ok, detail.str());
        } catch (const std::exception& e) {
            check(cases, "embedding: " + spec.name, false, e.what());
        }
    }
    return suite;
}

// ---------------------------------------------------------------------------

std::vector<WeightFunction> shipped_weightings(const std::string& name) {
    std::vector<WeightFunction> out{WeightFunction::split(builtin_matrix(name))};
    if (name == "A1") {
        for (long m = 2; m <= 8; ++m) out.push_back(WeightFunction{{m}});  // I2(m) -> A1 folds
    } else if (name == "B2") {
        out.push_back(WeightFunction{{1, 2}});
        out.push_back(WeightFunction{{2, 4}});
        out.push_back(WeightFunction{{4, 2}});  // A3xA3 fold
        out.push_back(WeightFunction{{3, 2}});
        out.push_back(WeightFunction{{2, 3}});  // A4 fold
    } else if (name == "G2" || name == "I2(6)") {
        out.push_back(WeightFunction{{1, 3}});
        out.push_back(WeightFunction{{3, 1}});
        out.push_back(WeightFunction{{2, 6}});
        out.push_back(WeightFunction{{2, 2}});
    } else if (name == "I2(3)" || name == "I2(5)") {
        out.push_back(WeightFunction{{2, 2}});  // I2(m)^2 diagonal folds
    } else if (name == "I2(4)") {
        out.push_back(WeightFunction{{1, 2}});
        out.push_back(WeightFunction{{2, 2}});
    } else if (name == "I2(12)") {
        out.push_back(WeightFunction{{1, 2}});
    } else if (name == "I2(2)") {
        out.push_back(WeightFunction{{1, 2}});
    }
    return out;
}

SuiteResult suite_klprops() {
    SuiteResult suite{"klprops", {}};
    auto& cases = suite.cases;

    for (const std::string& name : catalog_names()) {
        auto sys = builtin_system(name);
        if (sys->order() > 600) continue;
        for (const WeightFunction& w : shipped_weightings(name)) {
            std::ostringstream tag;
            tag << name << " L=(";
            for (std::size_t i = 0; i < w.values.size(); ++i)
                tag << (i ? "," : "") << w.values[i];
            tag << ")";
            auto alg = algebra(name, w);
            bool ok = true;
            std::ostringstream detail;
            for (Elt x = 0; x < sys->order() && ok; ++x) {
                HeckeElt b = alg->kl_element(x);
                if (alg->bar(b) != b) {
                    ok = false;
                    detail << "b_" << sys->name(x) << " is not self-dual\n";
                    break;
                }
                for (const auto& [y, p] : b.coords) {
                    if (!sys->bruhat_leq(y, x)) {
                        ok = false;
                        detail << "P_{" << sys->name(y) << "," << sys->name(x)
                               << "} nonzero violates triangularity\n";
                    }
                    if (y == x && p != LaurentPoly(1)) {
                        ok = false;
                        detail << "P_{x,x} != 1 at " << sys->name(x) << "\n";
                    }
                    if (y != x && !p.is_in_positive_part()) {
                        ok = false;
                        detail << "P_{" << sys->name(y) << "," << sys->name(x)
                               << "} = " << p.str() << " not strictly positive\n";
                    }
                    if (w.is_split() && p.has_negative_coeff()) {
                        ok = false;
                        detail << "split P_{" << sys->name(y) << "," << sys->name(x)
                               << "} = " << p.str() << " has a negative coefficient\n";
                    }
                }
            }
            check(cases, "KL table: " + tag.str(), ok, detail.str());
        }
    }

    // Split structure constants stay nonnegative (systems small enough for
    // the full pair table).
    for (const std::string& name : std::vector<std::string>{"A2", "B2", "A3", "B3", "G2", "I2(7)", "A1xA1xA1"}) {
        auto alg = split_algebra(name);
        const auto& sys = alg->system();
        bool ok = true;
        std::ostringstream detail;
        for (Elt x = 0; x < sys.order() && ok; ++x)
            for (Elt y = 0; y < sys.order() && ok; ++y)
                for (const auto& [z, mz] : alg->structure_constants(x, y))
                    if (mz.has_negative_coeff()) {
                        ok = false;
                        detail << "m^" << sys.name(z) << "_{" << sys.name(x) << "," << sys.name(y)
                               << "} = " << mz.str() << "\n";
                    }
        check(cases, "split positivity of m^z: " + name, ok, detail.str());
    }

    // Unequal parameters genuinely lose positivity.
    for (auto [name, ls, lt] : {std::tuple<std::string, long, long>{"I2(4)", 1, 2}, {"I2(6)", 1, 3}}) {
        auto alg = algebra(name, WeightFunction{{ls, lt}});
        const auto& sys = alg->system();
        bool found = false;
        for (Elt x = 0; x < sys.order() && !found; ++x) {
            HeckeElt b = alg->kl_element(x);
            for (const auto& [y, p] : b.coords)
                if (p.has_negative_coeff()) found = true;
        }
        for (Elt x = 0; x < sys.order() && !found; ++x)
            for (Elt y = 0; y < sys.order() && !found; ++y)
                for (const auto& [z, mz] : alg->structure_constants(x, y))
                    if (mz.has_negative_coeff()) found = true;
        check(cases,
              "negative coefficient exists: " + name + " L=(" + std::to_string(ls) + "," +
                  std::to_string(lt) + ")",
              found, "no negative coefficient found in P or m^z");
    }
    return suite;
}

// ---------------------------------------------------------------------------

PermGroup symmetric_group(int n) {
    std::vector<Perm> gens;
    Perm cycle(n), swap01 = perm_identity(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    std::swap(swap01[0], swap01[1]);
    gens.push_back(cycle);
    gens.push_back(swap01);
    return PermGroup::closure(gens, n);
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Descending parts, depth-first.
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<int> transpose_partition(const std::vector<int>& p) {
    std::vector<int> out;
    for (int row = 1; row <= (p.empty() ? 0 : p[0]); ++row) {
        int count = 0;
        for (int part : p)
            if (part >= row) ++count;
        out.push_back(count);
    }
    return out;
}

std::string partition_label(const std::vector<int>& p) {
    std::string out;
    for (int part : p) out += std::to_string(part);
    return out;
}

SuiteResult suite_wgg() {
    SuiteResult suite{"wgg", {}};
    auto& cases = suite.cases;

    // S3 acting through its abelianization on a 2-element set: rank 3 for
    // g in the commutator subgroup, 0 outside it.
    {
        PermGroup s3 = symmetric_group(3);
        std::vector<Perm> alternating;
        for (const Perm& p : s3.elements)
            if (perm_parity(p) == 1) alternating.push_back(p);
        GSetOrbit orbit;
        orbit.label = "K";
        orbit.orbit_size = 2;
        orbit.stabilizer = PermGroup::from_elements(alternating);
        orbit.irrep_labels = {"1", "w", "w2"};
        orbit.xi_action = {{0, 1, 2}, {0, 1, 2}};  // sign restricts trivially to A3
        GSetDatum gset{s3, {orbit}};
        std::vector<ClassFunction> chars{character(CharacterKind::Trivial, s3),
                                         character(CharacterKind::Sign, s3)};
        Perm three_cycle = {1, 2, 0}, transposition = {1, 0, 2};
        auto in_rank = weighted_quotient(gset, chars, three_cycle).rank;
        auto out_rank = weighted_quotient(gset, chars, transposition).rank;
        check(cases, "S3/A3 ranks (3, 0)", in_rank == 3 && out_rank == 0,
              "got (" + std::to_string(in_rank) + ", " + std::to_string(out_rank) + ")");
    }

    // S_n standard action: partitions of n-1 modulo transpose.
    for (int n : {4, 5}) {
        PermGroup sn = symmetric_group(n);
        std::vector<Perm> stab_elements;
        for (const Perm& p : sn.elements)
            if (p[n - 1] == n - 1) stab_elements.push_back(p);

        const auto parts = partitions_of(n - 1);
        GSetOrbit orbit;
        orbit.label = "X";
        orbit.orbit_size = static_cast<std::size_t>(n);
        orbit.stabilizer = PermGroup::from_elements(stab_elements);
        std::vector<std::size_t> sign_action;
        for (const auto& p : parts) orbit.irrep_labels.push_back(partition_label(p));
        for (const auto& p : parts) {
            const std::string t = partition_label(transpose_partition(p));
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (orbit.irrep_labels[i] == t) sign_action.push_back(i);
        }
        std::vector<std::size_t> ident(parts.size());
        for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
        orbit.xi_action = {ident, sign_action};
        GSetDatum gset{sn, {orbit}};
        std::vector<ClassFunction> chars{character(CharacterKind::Trivial, sn),
                                         character(CharacterKind::Sign, sn)};

        std::size_t classes_mod_transpose = 0, non_self_pairs = 0;
        std::set<std::string> seen;
        for (const auto& p : parts) {
            const std::string a = partition_label(p), b = partition_label(transpose_partition(p));
            if (seen.count(a)) continue;
            seen.insert(a);
            seen.insert(b);
            ++classes_mod_transpose;
            if (a != b) ++non_self_pairs;
        }

        Perm even = perm_identity(n);
        Perm odd = perm_identity(n);
        std::swap(odd[0], odd[1]);
        const auto even_rank = weighted_quotient(gset, chars, even).rank;
        const auto odd_rank = weighted_quotient(gset, chars, odd).rank;
        bool ok = even_rank == classes_mod_transpose && odd_rank == non_self_pairs;
        if (n == 4) ok = ok && even_rank == 2 && odd_rank == 1;
        check(cases, "S" + std::to_string(n) + " partition ranks", ok,
              "got (" + std::to_string(even_rank) + ", " + std::to_string(odd_rank) + "), want (" +
                  std::to_string(classes_mod_transpose) + ", " + std::to_string(non_self_pairs) + ")");
    }

    // Abelian consistency: the quotient rank matches the pointwise-fixed
    // orbit count.
    {
        Perm swap2 = {1, 0};
        PermGroup z2 = PermGroup::closure({swap2}, 2);
        GSetOrbit pair;
        pair.label = "pair";
        pair.orbit_size = 2;
        pair.stabilizer = PermGroup::from_elements({perm_identity(2)});
        pair.irrep_labels = {"1"};
        pair.xi_action = {{0}, {0}};
        GSetOrbit fixed;
        fixed.label = "pt";
        fixed.orbit_size = 1;
        fixed.stabilizer = z2;
        fixed.irrep_labels = {"+", "-"};
        fixed.xi_action = {{0, 1}, {1, 0}};
        GSetDatum gset{z2, {fixed, pair}};
        std::vector<ClassFunction> chars{character(CharacterKind::Trivial, z2),
                                         character(CharacterKind::Sign, z2)};

        auto basis_e = weighted_basis_abelian(gset, perm_identity(2));
        auto basis_s = weighted_basis_abelian(gset, swap2);
        auto rank_e = weighted_quotient(gset, chars, perm_identity(2)).rank;
        auto rank_s = weighted_quotient(gset, chars, swap2).rank;
        check(cases, "Z/2 abelian basis vs quotient",
              basis_e.size() == 2 && basis_s.size() == 1 && rank_e == 2 && rank_s == 1,
              "basis sizes (" + std::to_string(basis_e.size()) + "," + std::to_string(basis_s.size()) +
                  "), ranks (" + std::to_string(rank_e) + "," + std::to_string(rank_s) + ")");
    }
    return suite;
}

// ---------------------------------------------------------------------------

SuiteResult suite_sigma() {
    SuiteResult suite{"sigma", {}};
    auto& cases = suite.cases;

    auto sys = builtin_system("A3xA3");
    GroupAction klein = make_action(
        sys->matrix(), {{"g1",
                         {{"x1", "x2"}, {"x2", "x1"}, {"y1", "y2"}, {"y2", "y1"},
                          {"z1", "z2"}, {"z2", "z1"}}},
                        {"g2", {{"x1", "z1"}, {"z1", "x1"}, {"x2", "z2"}, {"z2", "x2"}}}});
    check(cases, "G = Z/2 x Z/2 has order 4", klein.closure.size() == 4, "");

    bool none_transitive = true;
    for (const Perm& g : klein.closure.elements)
        if (sigma_transitive(klein, g)) none_transitive = false;
    check(cases, "no element of Z/2 x Z/2 is orbit-transitive", none_transitive, "");

    QuasiSplitEmbedding emb = fold(sys, orbits(sys->matrix(), klein), klein);
    check(cases, "fold A3xA3 -> B2 with L=(4,2)",
          emb.folded_matrix.m(0, 1) == 4 && emb.weights.values == std::vector<long>{4, 2},
          "unexpected folded data");

    const Perm sigma = klein.evaluate_word({"g1", "g2"});
    const Elt x1z2 = parse_element(*sys, "x1 z2");
    check(cases, "x1 z2 is sigma-fixed", act_element(*sys, sigma, x1z2) == x1z2, "");
    check(cases, "x1 z2 lies outside the folded image",
          emb.phi_inverse().find(x1z2) == emb.phi_inverse().end(), "");

    EquivDecomp demo;
    demo.ambient = sys;
    demo.action = klein;
    demo.product_word = {};
    demo.entries.push_back(
        make_entry(*sys, klein, {x1z2, parse_element(*sys, "x2 z1")}, 0, CharacterKind::Trivial));
    auto traced = trace_specialize(demo, sigma);
    check(cases, "sigma trace supported on a non-W element",
          traced.size() == 1 && traced.count(x1z2) == 1 && traced.at(x1z2) == LaurentPoly(1),
          "trace support is wrong");
    return suite;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"dihedral", "compare", "trace", "quadratic", "steinberg", "klprops", "wgg", "sigma"};
}

std::string default_fixture_dir() {
#ifdef FOLDKIT_FIXTURE_DIR
    return FOLDKIT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

SuiteResult run_suite(const std::string& name, const std::string& fixture_dir) {
    const std::string dir = fixture_dir.empty() ? default_fixture_dir() : fixture_dir;
    if (name == "dihedral") return suite_dihedral();
    if (name == "compare") return suite_compare();
    if (name == "trace") return suite_trace(dir);
    if (name == "quadratic") return suite_quadratic();
    if (name == "steinberg") return suite_steinberg();
    if (name == "klprops") return suite_klprops();
    if (name == "wgg") return suite_wgg();
    if (name == "sigma") return suite_sigma();
    throw parse_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& name, const std::string& fixture_dir) {
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(run_suite(n, fixture_dir));
    } else {
        out.push_back(run_suite(name, fixture_dir));
    }
    return out;
}

} // namespace foldkit
