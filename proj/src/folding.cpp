#include "foldkit/folding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace foldkit {

GroupAction GroupAction::build(const CoxeterMatrix& matrix, std::vector<std::string> names,
                               std::vector<Perm> perms) {
    if (names.size() != perms.size()) throw error("action generator names/permutations mismatch");
    const int n = matrix.rank();
    for (const Perm& p : perms) {
        if (static_cast<int>(p.size()) != n) throw inconsistent_action("permutation size != rank");
        Perm sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != perm_identity(n)) throw inconsistent_action("not a permutation of the generators");
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (matrix.m(p[s], p[t]) != matrix.m(s, t))
                    throw inconsistent_action("permutation does not preserve the Coxeter matrix");
    }
    GroupAction a;
    a.gen_names = std::move(names);
    a.gen_perms = std::move(perms);
    a.closure = PermGroup::closure(a.gen_perms, n);
    return a;
}

Perm GroupAction::evaluate_word(const std::vector<std::string>& word) const {
    Perm cur = perm_identity(static_cast<int>(gen_perms.empty() ? closure.elements[0].size()
                                                                : gen_perms[0].size()));
    for (const auto& nm : word) {
        auto it = std::find(gen_names.begin(), gen_names.end(), nm);
        if (it == gen_names.end()) throw unknown_group_element("unknown action generator: " + nm);
        cur = perm_compose(cur, gen_perms[it - gen_names.begin()]);
    }
    return cur;
}

Elt act_element(const CoxeterSystem& system, const Perm& p, Elt w) {
    Word mapped;
    for (char c : system.normal_form(w)) mapped.push_back(static_cast<char>(p[static_cast<Gen>(c)]));
    return system.evaluate(mapped);
}

void FinitaryPartition::validate(const CoxeterMatrix& matrix) const {
    std::vector<int> seen(matrix.rank(), 0);
    for (const auto& b : blocks) {
        if (b.members.empty()) throw error("empty partition block: " + b.name);
        for (Gen s : b.members) {
            if (s < 0 || s >= matrix.rank()) throw unknown_generator("partition member out of range");
            ++seen[s];
        }
    }
    for (int s = 0; s < matrix.rank(); ++s)
        if (seen[s] != 1) throw error("blocks do not partition the generator set");
}

int FinitaryPartition::block_index(const std::string& name) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].name == name) return static_cast<int>(i);
    throw unknown_generator("unknown folded generator: " + name);
}

FinitaryPartition orbits(const CoxeterMatrix& matrix, const GroupAction& action) {
    const int n = matrix.rank();
    std::vector<int> block(n, -1);
    FinitaryPartition out;
    for (int s = 0; s < n; ++s) {
        if (block[s] >= 0) continue;
        FinitaryPartition::Block b;
        b.name = matrix.generators[s];
        std::vector<int> stack{s};
        block[s] = static_cast<int>(out.blocks.size());
        b.members.push_back(s);
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            for (const Perm& p : action.gen_perms) {
                const int img = p[cur];
                if (block[img] < 0) {
                    block[img] = block[s];
                    b.members.push_back(img);
                    stack.push_back(img);
                }
            }
        }
        std::sort(b.members.begin(), b.members.end());
        out.blocks.push_back(std::move(b));
    }
    return out;
}

Elt QuasiSplitEmbedding::phi_word(const Word& folded_word) const {
    Elt cur = kIdentity;
    for (char c : folded_word) {
        const int b = static_cast<int>(c);
        if (b < 0 || b >= static_cast<int>(images.size()))
            throw unknown_generator("folded generator index out of range");
        cur = ambient->multiply(cur, images[b]);
    }
    return cur;
}

Elt QuasiSplitEmbedding::phi(Elt folded_elt) const { return phi_word(folded->normal_form(folded_elt)); }

const std::map<Elt, Elt>& QuasiSplitEmbedding::phi_inverse() const {
    if (phi_inv_.empty() && folded->order() > 0) {
        for (Elt w = 0; w < folded->order(); ++w) phi_inv_.emplace(phi(w), w);
    }
    return phi_inv_;
}

bool QuasiSplitEmbedding::length_additive(Elt folded_elt) const {
    long total = 0;
    for (char c : folded->normal_form(folded_elt)) total += weights.at(static_cast<Gen>(c));
    return ambient->length(phi(folded_elt)) == total;
}

QuasiSplitEmbedding fold(std::shared_ptr<const CoxeterSystem> ambient, FinitaryPartition partition,
                         std::optional<GroupAction> action, std::size_t cap) {
    const CoxeterMatrix& m = ambient->matrix();
    partition.validate(m);
    if (action) {
        FinitaryPartition from_action = orbits(m, *action);
        auto key = [](const FinitaryPartition& p) {
            std::set<std::vector<Gen>> s;
            for (const auto& b : p.blocks) s.insert(b.members);
            return s;
        };
        if (key(from_action) != key(partition))
            throw inconsistent_action("partition does not match the action's orbits");
    }

    QuasiSplitEmbedding out;
    out.ambient = std::move(ambient);
    out.partition = std::move(partition);
    out.action = std::move(action);

    const int k = static_cast<int>(out.partition.blocks.size());
    for (const auto& b : out.partition.blocks)
        out.images.push_back(out.ambient->longest_element(b.members));

    out.folded_matrix.entries.assign(k, std::vector<int>(k, 1));
    for (const auto& b : out.partition.blocks) out.folded_matrix.generators.push_back(b.name);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const int ord = out.ambient->element_order(out.ambient->multiply(out.images[i], out.images[j]));
            out.folded_matrix.entries[i][j] = ord;
            out.folded_matrix.entries[j][i] = ord;
        }

    for (int i = 0; i < k; ++i) out.weights.values.push_back(out.ambient->length(out.images[i]));
    out.weights.validate(out.folded_matrix);

    out.folded = std::make_shared<CoxeterSystem>(out.folded_matrix, cap);

    const std::size_t generated = out.ambient->generated_subgroup(out.images, cap).size();
    if (generated != out.folded->order()) {
        std::ostringstream os;
        os << "generated subgroup has order " << generated << " but the folded Coxeter group has order "
           << out.folded->order();
        throw not_a_coxeter_embedding(os.str());
    }
    out.phi_inverse();  // embeddings are immutable once returned
    return out;
}

SteinbergReport steinberg_check(const CoxeterSystem& ambient, const GroupAction& action) {
    std::vector<Elt> fixed;
    for (Elt w = 0; w < ambient.order(); ++w) {
        bool ok = true;
        for (const Perm& p : action.gen_perms)
            if (act_element(ambient, p, w) != w) {
                ok = false;
                break;
            }
        if (ok) fixed.push_back(w);
    }

    FinitaryPartition part = orbits(ambient.matrix(), action);
    std::vector<Elt> images;
    for (const auto& b : part.blocks) images.push_back(ambient.longest_element(b.members));
    std::vector<Elt> generated = ambient.generated_subgroup(images);

    SteinbergReport r;
    r.fixed_order = fixed.size();
    r.generated_order = generated.size();
    r.equal = fixed == generated;  // both sorted ascending
    return r;
}

std::string to_string(OrbitPairCase c) {
    switch (c) {
        case OrbitPairCase::EqualParameters: return "equal-parameters-I2(m)^k";
        case OrbitPairCase::A1Commuting: return "A1-commuting";
        case OrbitPairCase::A3Type: return "A3-type";
        case OrbitPairCase::A4Type: return "A4-type";
        case OrbitPairCase::D4Type: return "D4-type";
        case OrbitPairCase::F4Type: return "F4-type";
    }
    return "?";
}

namespace {

// Connected components of the bond graph (edges m >= 3) on a generator set.
std::vector<std::vector<Gen>> components(const CoxeterMatrix& m, const std::vector<Gen>& verts) {
    std::vector<std::vector<Gen>> out;
    std::set<Gen> todo(verts.begin(), verts.end());
    while (!todo.empty()) {
        std::vector<Gen> comp{*todo.begin()};
        todo.erase(todo.begin());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (auto it = todo.begin(); it != todo.end();) {
                if (m.m(comp[i], *it) >= 3) {
                    comp.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int degree(const CoxeterMatrix& m, const std::vector<Gen>& comp, Gen v) {
    int d = 0;
    for (Gen u : comp)
        if (u != v && m.m(u, v) >= 3) ++d;
    return d;
}

// Orders a path component by adjacency; empty result when not a path.
std::vector<Gen> as_path(const CoxeterMatrix& m, const std::vector<Gen>& comp) {
    std::vector<Gen> ends;
    for (Gen v : comp) {
        const int d = degree(m, comp, v);
        if (d == 1) ends.push_back(v);
        else if (d != 2) return {};
    }
    if (ends.size() != 2) return {};
    std::vector<Gen> path{std::min(ends[0], ends[1])};
    std::set<Gen> rest(comp.begin(), comp.end());
    rest.erase(path[0]);
    while (!rest.empty()) {
        bool found = false;
        for (Gen v : rest)
            if (m.m(path.back(), v) >= 3) {
                path.push_back(v);
                rest.erase(v);
                found = true;
                break;
            }
        if (!found) return {};
    }
    return path;
}

bool in_block(const std::vector<Gen>& block, Gen v) {
    return std::binary_search(block.begin(), block.end(), v);
}

} // namespace

OrbitPairClass classify_orbit_pair(const QuasiSplitEmbedding& emb, int s_block, int t_block) {
    if (!emb.action)
        throw no_matching_case("embedding carries no group action; the classification covers quasi-split pairs only");
    const CoxeterMatrix& m = emb.ambient->matrix();
    const auto& bs = emb.partition.blocks[s_block].members;
    const auto& bt = emb.partition.blocks[t_block].members;
    const int mst = emb.folded_matrix.m(s_block, t_block);
    const long ls = emb.weights.at(s_block);
    const long lt = emb.weights.at(t_block);

    std::vector<Gen> all = bs;
    all.insert(all.end(), bt.begin(), bt.end());
    auto comps = components(m, all);

    auto result = [&](OrbitPairCase tag, int predicted_m, long pred_ls, long pred_lt, int k, int l) {
        if (predicted_m != mst || pred_ls != ls || pred_lt != lt)
            throw no_matching_case("structural match predicts (" + std::to_string(predicted_m) + "," +
                                   std::to_string(pred_ls) + "," + std::to_string(pred_lt) +
                                   ") but embedding has (" + std::to_string(mst) + "," + std::to_string(ls) +
                                   "," + std::to_string(lt) + ")");
        return OrbitPairClass{tag, mst, ls, lt, k, l};
    };

    // m=2: a disjoint union of k+l copies of A_1.
    if (mst == 2) {
        for (const auto& c : comps)
            if (c.size() != 1) throw no_matching_case("m=2 but the union is not discrete");
        return result(OrbitPairCase::A1Commuting, 2, static_cast<long>(bs.size()),
                      static_cast<long>(bt.size()), static_cast<int>(bs.size()),
                      static_cast<int>(bt.size()));
    }

    const int k = static_cast<int>(comps.size());

    // k copies of I_2(mst), one generator from each block per copy.
    {
        bool ok = true;
        for (const auto& c : comps) {
            if (c.size() != 2 || m.m(c[0], c[1]) != mst) { ok = false; break; }
            const bool split = (in_block(bs, c[0]) && in_block(bt, c[1])) ||
                               (in_block(bs, c[1]) && in_block(bt, c[0]));
            if (!split) { ok = false; break; }
        }
        if (ok) return result(OrbitPairCase::EqualParameters, mst, k, k, k, k);
    }

    if (mst == 4) {
        // k copies of A_3, middles in one block: L = (k, 2k).
        bool a3 = true, mid_in_s = true, first = true;
        for (const auto& c : comps) {
            auto path = as_path(m, c);
            if (path.size() != 3 || m.m(path[0], path[1]) != 3 || m.m(path[1], path[2]) != 3) {
                a3 = false;
                break;
            }
            const bool mid_s = in_block(bs, path[1]) && in_block(bt, path[0]) && in_block(bt, path[2]);
            const bool mid_t = in_block(bt, path[1]) && in_block(bs, path[0]) && in_block(bs, path[2]);
            if (!mid_s && !mid_t) { a3 = false; break; }
            if (first) { mid_in_s = mid_s; first = false; }
            else if (mid_in_s != mid_s) { a3 = false; break; }
        }
        if (a3) {
            if (mid_in_s) return result(OrbitPairCase::A3Type, 4, k, 2L * k, k, k);
            return result(OrbitPairCase::A3Type, 4, 2L * k, k, k, k);
        }

        // k copies of A_4, inner pair in one block: L = (3k, 2k).
        bool a4 = true, inner_in_s = true;
        first = true;
        for (const auto& c : comps) {
            auto path = as_path(m, c);
            if (path.size() != 4 || m.m(path[0], path[1]) != 3 || m.m(path[1], path[2]) != 3 ||
                m.m(path[2], path[3]) != 3) {
                a4 = false;
                break;
            }
            const bool in_s = in_block(bs, path[1]) && in_block(bs, path[2]) && in_block(bt, path[0]) &&
                              in_block(bt, path[3]);
            const bool in_t = in_block(bt, path[1]) && in_block(bt, path[2]) && in_block(bs, path[0]) &&
                              in_block(bs, path[3]);
            if (!in_s && !in_t) { a4 = false; break; }
            if (first) { inner_in_s = in_s; first = false; }
            else if (inner_in_s != in_s) { a4 = false; break; }
        }
        if (a4) {
            if (inner_in_s) return result(OrbitPairCase::A4Type, 4, 3L * k, 2L * k, k, k);
            return result(OrbitPairCase::A4Type, 4, 2L * k, 3L * k, k, k);
        }
    }

    if (mst == 6) {
        // k copies of D_4, centers in one block: L = (k, 3k).
        bool d4 = true, center_in_s = true, first = true;
        for (const auto& c : comps) {
            if (c.size() != 4) { d4 = false; break; }
            Gen center = -1;
            for (Gen v : c)
                if (degree(m, c, v) == 3) center = v;
            if (center < 0) { d4 = false; break; }
            bool star = true;
            for (Gen v : c)
                if (v != center && (m.m(v, center) != 3 || degree(m, c, v) != 1)) star = false;
            if (!star) { d4 = false; break; }
            const bool in_s = in_block(bs, center);
            bool spokes_other = true;
            for (Gen v : c)
                if (v != center && !in_block(in_s ? bt : bs, v)) spokes_other = false;
            if (!spokes_other) { d4 = false; break; }
            if (first) { center_in_s = in_s; first = false; }
            else if (center_in_s != in_s) { d4 = false; break; }
        }
        if (d4) {
            if (center_in_s) return result(OrbitPairCase::D4Type, 6, k, 3L * k, k, k);
            return result(OrbitPairCase::D4Type, 6, 3L * k, k, k, k);
        }
    }

    if (mst == 8) {
        // k copies of F_4, inner B_2 pair in one block: L = (4k, 2k).
        bool f4 = true, inner_in_s = true, first = true;
        for (const auto& c : comps) {
            auto path = as_path(m, c);
            if (path.size() != 4 || m.m(path[0], path[1]) != 3 || m.m(path[1], path[2]) != 4 ||
                m.m(path[2], path[3]) != 3) {
                f4 = false;
                break;
            }
            const bool in_s = in_block(bs, path[1]) && in_block(bs, path[2]) && in_block(bt, path[0]) &&
                              in_block(bt, path[3]);
            const bool in_t = in_block(bt, path[1]) && in_block(bt, path[2]) && in_block(bs, path[0]) &&
                              in_block(bs, path[3]);
            if (!in_s && !in_t) { f4 = false; break; }
            if (first) { inner_in_s = in_s; first = false; }
            else if (inner_in_s != in_s) { f4 = false; break; }
        }
        if (f4) {
            if (inner_in_s) return result(OrbitPairCase::F4Type, 8, 4L * k, 2L * k, k, k);
            return result(OrbitPairCase::F4Type, 8, 2L * k, 4L * k, k, k);
        }
    }

    throw no_matching_case("I(s) u I(t) matches no row of the dihedral classification");
}

bool sigma_transitive(const GroupAction& action, const Perm& sigma) {
    const int n = static_cast<int>(sigma.size());
    auto orbit_sets = [n](const std::vector<Perm>& gens) {
        std::set<std::set<int>> out;
        std::vector<int> block(n, -1);
        for (int s = 0; s < n; ++s) {
            if (block[s] >= 0) continue;
            std::set<int> orb{s};
            std::vector<int> stack{s};
            block[s] = s;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (const Perm& p : gens)
                    if (block[p[cur]] < 0) {
                        block[p[cur]] = s;
                        orb.insert(p[cur]);
                        stack.push_back(p[cur]);
                    }
            }
            out.insert(std::move(orb));
        }
        return out;
    };
    return orbit_sets({sigma}) == orbit_sets(action.gen_perms);
}

} // namespace foldkit
