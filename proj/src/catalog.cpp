#include "foldkit/catalog.hpp"

#include <mutex>

namespace foldkit {

namespace {

CoxeterMatrix chain(std::vector<std::string> gens, std::vector<int> bonds) {
    CoxeterMatrix m;
    m.generators = std::move(gens);
    const int n = m.rank();
    m.entries.assign(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m.entries[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) {
        m.entries[i][i + 1] = bonds[i];
        m.entries[i + 1][i] = bonds[i];
    }
    return m;
}

std::vector<std::string> numbered(const std::string& base, int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(base + std::to_string(i));
    return out;
}

CoxeterMatrix irreducible_matrix(const std::string& name) {
    if (name == "A1") return chain({"s"}, {});
    if (name == "A2") return chain({"s", "t"}, {3});
    if (name == "A3") return chain({"x", "y", "z"}, {3, 3});
    if (name == "A4") return chain(numbered("s", 1, 4), {3, 3, 3});
    if (name == "A5") return chain(numbered("s", 1, 5), {3, 3, 3, 3});
    if (name == "B2") return chain({"s", "t"}, {4});
    if (name == "B3") return chain(numbered("s", 1, 3), {3, 4});
    if (name == "G2") return chain({"s", "t"}, {6});
    if (name == "H3") return chain(numbered("s", 1, 3), {5, 3});
    if (name == "D4") {
        CoxeterMatrix m;
        m.generators = {"v", "u1", "u2", "u3"};
        m.entries = {{1, 3, 3, 3}, {3, 1, 2, 2}, {3, 2, 1, 2}, {3, 2, 2, 1}};
        return m;
    }
    if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
        const int m = std::stoi(name.substr(3, name.size() - 4));
        if (m < 2) throw invalid_matrix("I2(m) needs m >= 2");
        return chain({"s", "t"}, {m});
    }
    throw parse_error("unknown builtin system: " + name);
}

std::vector<std::string> split_product(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < name.size();) {
        if (name[i] == 'x' && !cur.empty() && cur.back() != '(' ) {
            parts.push_back(cur);
            cur.clear();
            ++i;
        } else if (name.compare(i, 2, "\xc3\x97") == 0) {  // UTF-8 multiplication sign
            parts.push_back(cur);
            cur.clear();
            i += 2;
        } else {
            cur += name[i];
            ++i;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

CoxeterMatrix builtin_matrix(const std::string& name) {
    auto parts = split_product(name);
    if (parts.size() == 1) return irreducible_matrix(parts[0]);
    CoxeterMatrix out = irreducible_matrix(parts[0]);
    // Name collisions across factors are resolved by per-copy suffixes.
    std::vector<CoxeterMatrix> factors{out};
    for (std::size_t i = 1; i < parts.size(); ++i) factors.push_back(irreducible_matrix(parts[i]));
    CoxeterMatrix prod;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        CoxeterMatrix f = factors[i];
        for (auto& g : f.generators) g += std::to_string(i + 1);
        prod = (i == 0) ? f : CoxeterMatrix::direct_product(prod, f);
    }
    return prod;
}

std::shared_ptr<const CoxeterSystem> builtin_system(const std::string& name, std::size_t cap) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CoxeterSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    auto sys = std::make_shared<const CoxeterSystem>(builtin_matrix(name), cap);
    cache.emplace(name, sys);
    return sys;
}

GroupAction make_action(const CoxeterMatrix& matrix,
                        const std::map<std::string, std::map<std::string, std::string>>& generators) {
    std::vector<std::string> names;
    std::vector<Perm> perms;
    for (const auto& [name, mapping] : generators) {
        Perm p = perm_identity(matrix.rank());
        for (const auto& [from, to] : mapping) p[matrix.gen_index(from)] = matrix.gen_index(to);
        names.push_back(name);
        perms.push_back(std::move(p));
    }
    return GroupAction::build(matrix, std::move(names), std::move(perms));
}

FinitaryPartition make_partition(const CoxeterMatrix& matrix,
                                 const std::map<std::string, std::vector<std::string>>& blocks) {
    FinitaryPartition part;
    for (const auto& [name, members] : blocks) {
        FinitaryPartition::Block b;
        b.name = name;
        for (const auto& g : members) b.members.push_back(matrix.gen_index(g));
        std::sort(b.members.begin(), b.members.end());
        part.blocks.push_back(std::move(b));
    }
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const auto& a, const auto& b) { return a.members.front() < b.members.front(); });
    part.validate(matrix);
    return part;
}

std::vector<ExampleSpec> quasi_split_examples() {
    std::vector<ExampleSpec> out;

    out.push_back({"A1xA1 -> A1", "A1xA1", {{"swap", {{"s1", "s2"}, {"s2", "s1"}}}}, {"swap"}, {}});

    for (int k = 2; k <= 4; ++k) {
        ExampleSpec e;
        e.name = "A1^" + std::to_string(k) + " -> A1";
        e.system = "A1";
        for (int i = 1; i < k; ++i) e.system += "xA1";
        std::map<std::string, std::string> rot;
        for (int i = 1; i <= k; ++i)
            rot["s" + std::to_string(i)] = "s" + std::to_string(i % k + 1);
        e.action = {{"rot", rot}};
        e.sigma = {"rot"};
        out.push_back(std::move(e));
    }

    for (int m = 3; m <= 8; ++m) {
        ExampleSpec e;
        e.name = "I2(" + std::to_string(m) + ") -> A1";
        e.system = "I2(" + std::to_string(m) + ")";
        e.action = {{"flip", {{"s", "t"}, {"t", "s"}}}};
        e.sigma = {"flip"};
        out.push_back(std::move(e));
    }

    out.push_back({"A1 split", "A1", {{"id", {}}}, {}, {}});
    out.push_back({"A2 split (star n=1)", "A2", {{"id", {}}}, {}, {}});
    out.push_back({"A3 split", "A3", {{"id", {}}}, {}, {}});
    for (int m = 3; m <= 5; ++m) {
        const std::string i2 = "I2(" + std::to_string(m) + ")";
        out.push_back({i2 + " split", i2, {{"id", {}}}, {}, {}});
    }
    out.push_back({"A3 -> B2", "A3", {{"swap", {{"x", "z"}, {"z", "x"}}}}, {"swap"}, {}});
    out.push_back({"A4 -> B2", "A4",
                   {{"flip", {{"s1", "s4"}, {"s4", "s1"}, {"s2", "s3"}, {"s3", "s2"}}}},
                   {"flip"},
                   {}});
    out.push_back({"D4 -> G2 (Z/3)", "D4",
                   {{"rot", {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u1"}}}},
                   {"rot"},
                   {}});
    out.push_back({"D4 -> G2 (S3)", "D4",
                   {{"rot", {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u1"}}},
                    {"swap", {{"u2", "u3"}, {"u3", "u2"}}}},
                   {"rot"},
                   {}});
    out.push_back({"A3xA3 -> B2", "A3xA3",
                   {{"rot4",
                     {{"x1", "x2"}, {"x2", "z1"}, {"z1", "z2"}, {"z2", "x1"},
                      {"y1", "y2"}, {"y2", "y1"}}}},
                   {"rot4"},
                   {}});

    for (int m = 3; m <= 5; ++m) {
        ExampleSpec e;
        e.name = "I2(" + std::to_string(m) + ")^2 -> I2(" + std::to_string(m) + ")";
        e.system = "I2(" + std::to_string(m) + ")xI2(" + std::to_string(m) + ")";
        e.action = {{"swap", {{"s1", "s2"}, {"s2", "s1"}, {"t1", "t2"}, {"t2", "t1"}}}};
        e.sigma = {"swap"};
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ExampleSpec> plain_embedding_examples() {
    std::vector<ExampleSpec> out;

    // I2(n+1) -> A_n by parity of the generator index.
    for (int n = 2; n <= 4; ++n) {
        ExampleSpec e;
        e.name = "I2(" + std::to_string(n + 1) + ") -> A" + std::to_string(n);
        e.system = "A" + std::to_string(n);
        std::vector<std::string> evens, odds;
        std::vector<std::string> gens =
            (n == 2) ? std::vector<std::string>{"s", "t"}
                     : (n == 3) ? std::vector<std::string>{"x", "y", "z"}
                                : numbered("s", 1, n);
        for (int i = 1; i <= n; ++i)
            (i % 2 == 0 ? evens : odds).push_back(gens[static_cast<std::size_t>(i - 1)]);
        e.partition = {{"t", evens}, {"u", odds}};
        out.push_back(std::move(e));
    }

    out.push_back({"G2 -> B3", "B3", {}, {}, {{"s", {"s1", "s3"}}, {"t", {"s2"}}}});
    out.push_back({"B2 -> A5 (weird)", "A5", {}, {}, {{"t", {"s1", "s5"}}, {"u", {"s2", "s3", "s4"}}}});
    return out;
}

ResolvedExample resolve_example(const ExampleSpec& spec) {
    ResolvedExample r;
    r.spec = spec;
    r.system = builtin_system(spec.system);
    if (!spec.action.empty()) {
        r.action = make_action(r.system->matrix(), spec.action);
        r.sigma = r.action->evaluate_word(spec.sigma);
        r.embedding = fold(r.system, orbits(r.system->matrix(), *r.action), r.action);
    } else {
        r.sigma = perm_identity(r.system->rank());
        r.embedding = fold(r.system, make_partition(r.system->matrix(), spec.partition), std::nullopt);
    }
    return r;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "D4", "G2", "H3"};
    for (int m = 2; m <= 12; ++m) names.push_back("I2(" + std::to_string(m) + ")");
    names.push_back("A1xA1");
    names.push_back("A1xA1xA1");
    names.push_back("A1xA1xA1xA1");
    for (int m = 3; m <= 5; ++m) {
        const std::string i2 = "I2(" + std::to_string(m) + ")";
        names.push_back(i2 + "x" + i2);
    }
    names.push_back("A3xA3");
    return names;
}

} // namespace foldkit
