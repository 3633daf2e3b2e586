#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>

#include "foldkit/io.hpp"
#include "foldkit/verify.hpp"

using namespace foldkit;

namespace {

// exit codes: 0 all good, 1 verification mismatch, 2 input error
constexpr int kOk = 0, kFail = 1, kInputError = 2;

std::ostream* open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) throw parse_error("cannot write " + path);
    return &file;
}

int cmd_fold(const std::string& system_path, const std::string& action_path,
             const std::string& partition_json, const std::string& out_path, std::size_t cap) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    SystemSpec spec = parse_system(load_json_file(system_path), cap);
    const CoxeterSystem& sys = *spec.system;

    std::optional<GroupAction> action;
    std::optional<Perm> sigma;
    FinitaryPartition partition;
    if (!action_path.empty()) {
        nlohmann::json aj = load_json_file(action_path);
        action = parse_action(sys.matrix(), aj);
        sigma = parse_sigma(*action, aj);
        partition = orbits(sys.matrix(), *action);
    } else if (!partition_json.empty()) {
        nlohmann::json pj = load_json_file(partition_json);
        std::map<std::string, std::vector<std::string>> blocks;
        for (const auto& [name, members] : pj.at("blocks").items())
            blocks[name] = members.get<std::vector<std::string>>();
        partition = make_partition(sys.matrix(), blocks);
    } else {
        throw parse_error("fold needs --action or --partition");
    }

    QuasiSplitEmbedding emb = fold(spec.system, partition, action, cap);
    out << "# foldkit " << kVersion << " fold\n";
    out << "ambient order\t" << sys.order() << "\n";
    for (std::size_t i = 0; i < emb.partition.blocks.size(); ++i) {
        const auto& b = emb.partition.blocks[i];
        out << "block\t" << b.name << "\t{";
        for (std::size_t j = 0; j < b.members.size(); ++j)
            out << (j ? " " : "") << sys.matrix().generators[b.members[j]];
        out << "}\timage\t" << sys.name(emb.images[i]) << "\tL\t" << emb.weights.at(static_cast<int>(i))
            << "\n";
    }
    out << "folded matrix";
    for (int i = 0; i < emb.folded_matrix.rank(); ++i)
        for (int j = i + 1; j < emb.folded_matrix.rank(); ++j)
            out << "\tm(" << emb.folded_matrix.generators[i] << "," << emb.folded_matrix.generators[j]
                << ")=" << emb.folded_matrix.m(i, j);
    out << "\nfolded order\t" << emb.folded->order() << "\n";

    bool all_ok = true;
    for (int i = 0; i < emb.folded_matrix.rank(); ++i)
        for (int j = i + 1; j < emb.folded_matrix.rank(); ++j) {
            out << "pair\t" << emb.folded_matrix.generators[i] << "," << emb.folded_matrix.generators[j]
                << "\t";
            try {
                OrbitPairClass cls = classify_orbit_pair(emb, i, j);
                out << to_string(cls.tag) << "\tk=" << cls.k << "\n";
            } catch (const no_matching_case& e) {
                out << "NoMatchingCase\t" << e.what() << "\n";
            }
        }

    if (action) {
        SteinbergReport rep = steinberg_check(sys, *action);
        out << "steinberg\tfixed=" << rep.fixed_order << "\tgenerated=" << rep.generated_order << "\t"
            << (rep.equal ? "PASS" : "FAIL") << "\n";
        out << "sigma transitive\t" << (sigma_transitive(*action, *sigma) ? "true" : "false") << "\n";
        if (!rep.equal) all_ok = false;
    }
    const Elt w0_image = emb.phi(emb.folded->longest());
    out << "longest maps to longest\t" << (w0_image == sys.longest() ? "true" : "false") << "\n";
    return all_ok ? kOk : kFail;
}

// "--weights s=1,t=2" overrides any weights carried by the system file.
WeightFunction resolve_weights(const SystemSpec& spec, const std::string& flag) {
    if (flag.empty())
        return spec.weights ? *spec.weights : WeightFunction::split(spec.system->matrix());
    WeightFunction w;
    w.values.assign(spec.system->rank(), 0);
    std::string cur;
    for (char c : flag + ",") {
        if (c == ',') {
            const auto eq = cur.find('=');
            if (eq == std::string::npos) throw parse_error("weights must look like s=1,t=2");
            w.values[spec.system->matrix().gen_index(cur.substr(0, eq))] =
                std::stol(cur.substr(eq + 1));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    w.validate(spec.system->matrix());
    return w;
}

int cmd_kl(const std::string& system_path, const std::string& word, const std::string& weights,
           const std::string& out_path, std::size_t cap) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    SystemSpec spec = parse_system(load_json_file(system_path), cap);
    HeckeAlgebra alg(*spec.system, resolve_weights(spec, weights));
    const Elt x = parse_element(*spec.system, word);
    HeckeElt b = alg.kl_element(x);
    std::map<Elt, LaurentPoly> coords(b.coords.begin(), b.coords.end());
    out << render_table("kl \"" + word + "\"", *spec.system, coords);
    return kOk;
}

int cmd_mult(const std::string& system_path, const std::string& factors, const std::string& weights,
             const std::string& out_path, std::size_t cap) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    SystemSpec spec = parse_system(load_json_file(system_path), cap);
    HeckeAlgebra alg(*spec.system, resolve_weights(spec, weights));

    std::vector<Elt> xs;
    std::string cur;
    for (char c : factors + ",") {
        if (c == ',') {
            if (!cur.empty()) xs.push_back(parse_element(*spec.system, cur));
            cur.clear();
        } else if (c != '(' && c != ')') {
            cur += c;
        }
    }
    KLCoords prod = alg.kl_product_general(xs);
    out << render_table("mult \"" + factors + "\"", *spec.system, prod);
    return kOk;
}

int cmd_trace(const std::string& fixture_path, const std::string& at, bool run_check,
              const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    EquivDecomp d = load_fixture_file(fixture_path);
    const Perm g = at == "e" ? perm_identity(d.ambient->rank()) : d.action.evaluate_word(split_words(at));

    std::map<Elt, LaurentPoly> table =
        perm_is_identity(g) ? forget_specialize(d) : trace_specialize(d, g);
    out << render_table("trace at \"" + at + "\"", *d.ambient, table);

    if (run_check) {
        QuasiSplitEmbedding emb = fold(d.ambient, orbits(d.ambient->matrix(), d.action), d.action);
        CompareReport rep = compare_folded_product(emb, d.product_word, d, d.sigma);
        out << "# check\t" << (rep.pass ? "PASS" : "FAIL") << "\n";
        if (!rep.pass) {
            std::cerr << rep.detail;
            return kFail;
        }
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const std::string& fixture_dir, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    bool all = true;
    // Timing goes to stderr; stdout stays byte-identical across runs.
    const auto t0 = std::chrono::steady_clock::now();
    for (const SuiteResult& s : run_suites(suite, fixture_dir)) {
        for (const auto& c : s.cases) {
            out << (c.pass ? "PASS" : "FAIL") << "\t" << s.name << "\t" << c.name << "\n";
            if (!c.pass) {
                all = false;
                std::cerr << "FAIL " << s.name << " / " << c.name << "\n" << c.detail << "\n";
            }
        }
        std::cerr << "suite " << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << " ("
                  << std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count()
                  << " ms elapsed)\n";
    }
    return all ? kOk : kFail;
}

int cmd_wgg(const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = *open_out(out_path, file);
    SuiteResult s = run_suite("wgg");
    out << "# foldkit " << kVersion << " wgg\n";
    for (const auto& c : s.cases)
        out << (c.pass ? "PASS" : "FAIL") << "\t" << c.name << "\n";
    return s.pass() ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"foldkit: Hecke algebras with unequal parameters and quasi-split foldings"};
    app.require_subcommand(1);

    std::string system_path, action_path, partition_path, fixture_path, out_path;
    std::string word, factors, weights, at = "e", suite = "all", fixture_dir;
    std::size_t cap = CoxeterSystem::kDefaultCap;
    bool run_check = false;

    auto* fold_cmd = app.add_subcommand("fold", "fold a system along an action or partition");
    fold_cmd->add_option("--system", system_path, "system JSON file")->required();
    fold_cmd->add_option("--action", action_path, "action JSON file");
    fold_cmd->add_option("--partition", partition_path, "partition JSON file");
    fold_cmd->add_option("--cap", cap, "enumeration cap");
    fold_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* kl_cmd = app.add_subcommand("kl", "standard-basis expansion of a KL basis element");
    kl_cmd->add_option("--system", system_path)->required();
    kl_cmd->add_option("--element", word, "element as space-separated generators")->required();
    kl_cmd->add_option("--weights", weights, "weight overrides, e.g. s=1,t=2");
    kl_cmd->add_option("--cap", cap);
    kl_cmd->add_option("--out", out_path);

    auto* mult_cmd = app.add_subcommand("mult", "KL-basis expansion of a product of b_x factors");
    mult_cmd->add_option("--system", system_path)->required();
    mult_cmd->add_option("--factors", factors, "comma-separated factor words")->required();
    mult_cmd->add_option("--weights", weights, "weight overrides, e.g. s=1,t=2");
    mult_cmd->add_option("--cap", cap);
    mult_cmd->add_option("--out", out_path);

    auto* trace_cmd = app.add_subcommand("trace", "trace-specialize an equivariant fixture");
    trace_cmd->add_option("--fixture", fixture_path)->required();
    trace_cmd->add_option("--at", at, "group element word, or e");
    trace_cmd->add_flag("--check", run_check, "run compare_folded_product");
    trace_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite,
                           "dihedral|compare|trace|quadratic|steinberg|klprops|wgg|sigma|all");
    verify_cmd->add_option("--fixtures", fixture_dir, "fixture directory");
    verify_cmd->add_option("--out", out_path);

    auto* wgg_cmd = app.add_subcommand("wgg", "weighted Grothendieck group demo computations");
    wgg_cmd->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (fold_cmd->parsed()) return cmd_fold(system_path, action_path, partition_path, out_path, cap);
        if (kl_cmd->parsed()) return cmd_kl(system_path, word, weights, out_path, cap);
        if (mult_cmd->parsed()) return cmd_mult(system_path, factors, weights, out_path, cap);
        if (trace_cmd->parsed()) return cmd_trace(fixture_path, at, run_check, out_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, fixture_dir, out_path);
        if (wgg_cmd->parsed()) return cmd_wgg(out_path);
    } catch (const verification_failed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
