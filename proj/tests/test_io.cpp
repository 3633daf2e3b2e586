#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "foldkit/io.hpp"
#include "foldkit/verify.hpp"

using namespace foldkit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/foldkit_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

int run_cli(const std::string& args) {
#ifdef FOLDKIT_BIN
    const int status = std::system((std::string(FOLDKIT_BIN) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
#else
    (void)args;
    return -1;
#endif
}

} // namespace

TEST_CASE("system parsing") {
    auto spec = parse_system(nlohmann::json("B2"));
    CHECK(spec.system->order() == 8);
    CHECK(!spec.weights);

    nlohmann::json inline_sys = {
        {"generators", {"a", "b"}},
        {"coxeter_matrix", {{1, 5}, {5, 1}}},
        {"weights", {{"a", 2}, {"b", 2}}},
    };
    auto spec2 = parse_system(inline_sys);
    CHECK(spec2.system->order() == 10);
    REQUIRE(spec2.weights);
    CHECK(spec2.weights->values == std::vector<long>{2, 2});

    CHECK_THROWS_AS(parse_system(nlohmann::json{{"nope", 1}}), parse_error);
}

TEST_CASE("table rendering round-trips") {
    auto spec = parse_system(nlohmann::json("B2"));
    const CoxeterSystem& sys = *spec.system;
    std::map<Elt, LaurentPoly> coords{
        {kIdentity, LaurentPoly::monomial(3)},
        {sys.evaluate_names({"s", "t"}), LaurentPoly::sym(1)},
        {sys.longest(), LaurentPoly(1) - LaurentPoly::monomial(-2, 4)},
    };
    const std::string tsv = render_table("kl test", sys, coords);
    CHECK(tsv.rfind("# foldkit", 0) == 0);
    CHECK(parse_table(sys, tsv) == coords);
}

TEST_CASE("rendering is deterministic") {
    auto spec = parse_system(nlohmann::json("A3"));
    std::map<Elt, LaurentPoly> coords{{spec.system->longest(), LaurentPoly::sym(2)}};
    CHECK(render_table("x", *spec.system, coords) == render_table("x", *spec.system, coords));
}

TEST_CASE("fixture files load and validate") {
    for (const std::string& name : std::vector<std::string>{"a1a1", "a3b2", "a4b2", "d4g2"}) {
        EquivDecomp d = load_fixture_file(std::string(default_fixture_dir()) + "/" + name + ".json");
        CHECK(!d.entries.empty());
        CHECK(!d.product_word.empty());
    }
}

#ifdef FOLDKIT_BIN

TEST_CASE("cli exit codes") {
    const std::string sys = write_temp("b2.json", R"({"builtin": "B2", "weights": {"s": 1, "t": 2}})");
    CHECK(run_cli("kl --system " + sys + " --element \"s t s t\"") == 0);
    CHECK(run_cli("mult --system " + sys + " --factors \"s,t,s,t\"") == 0);
    // Unknown generator: input error.
    CHECK(run_cli("kl --system " + sys + " --element \"q\"") == 2);
    // Missing file: input error.
    CHECK(run_cli("kl --system /tmp/foldkit_no_such_file.json --element \"s\"") == 2);

    const std::string a3 = write_temp("a3.json", R"("A3")");
    const std::string action = write_temp(
        "swap.json", R"({"generators": {"swap": {"x": "z", "z": "x"}}, "sigma": ["swap"]})");
    CHECK(run_cli("fold --system " + a3 + " --action " + action) == 0);

    CHECK(run_cli(std::string("trace --fixture ") + default_fixture_dir() + "/a1a1.json --at swap --check") == 0);
    CHECK(run_cli("verify quadratic") == 0);

    // A fixture with a wrong shift fails the --check comparison: exit 1.
    const std::string bad = write_temp("bad_a1a1.json", R"({
      "system": {"generators": ["t", "u"], "coxeter_matrix": [[1, 2], [2, 1]]},
      "action": {"generators": {"swap": {"t": "u", "u": "t"}}, "sigma": ["swap"]},
      "product_word": ["t", "t"],
      "entries": [
        {"orbit": [["t", "u"]], "shift": 3, "character": "trivial"},
        {"orbit": [["t", "u"]], "shift": 0, "character": "trivial"},
        {"orbit": [["t", "u"]], "shift": 0, "character": "sign"},
        {"orbit": [["t", "u"]], "shift": -3, "character": "trivial"}
      ]})");
    CHECK(run_cli("trace --fixture " + bad + " --at swap --check") == 1);
}

TEST_CASE("cli output is byte-identical across runs") {
    const std::string sys = write_temp("g2.json", R"({"builtin": "G2", "weights": {"s": 1, "t": 3}})");
    const std::string out1 = "/tmp/foldkit_test_out1.tsv", out2 = "/tmp/foldkit_test_out2.tsv";
    REQUIRE(run_cli("mult --system " + sys + " --factors \"s,t,s,t,s,t\" --out " + out1) == 0);
    REQUIRE(run_cli("mult --system " + sys + " --factors \"s,t,s,t,s,t\" --out " + out2) == 0);
    std::ifstream f1(out1), f2(out2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(!s1.empty());
}

#endif
