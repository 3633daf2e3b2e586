#include "foldkit/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace foldkit {

Gen CoxeterMatrix::gen_index(const std::string& name) const {
    for (int i = 0; i < rank(); ++i)
        if (generators[i] == name) return i;
    throw unknown_generator("unknown generator: " + name);
}

void CoxeterMatrix::validate() const {
    const int n = rank();
    if (static_cast<int>(entries.size()) != n)
        throw invalid_matrix("matrix size does not match generator count");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries[i].size()) != n)
            throw invalid_matrix("matrix is not square");
        if (entries[i][i] != 1) throw invalid_matrix("diagonal entries must be 1");
        for (int j = 0; j < n; ++j) {
            if (entries[i][j] != entries[j][i])
                throw invalid_matrix("matrix is not symmetric");
            if (i != j && entries[i][j] < 2)
                throw invalid_matrix("off-diagonal entries must be finite and >= 2");
        }
    }
    std::set<std::string> names(generators.begin(), generators.end());
    if (static_cast<int>(names.size()) != n)
        throw invalid_matrix("generator names must be distinct");
}

CoxeterMatrix CoxeterMatrix::direct_product(const CoxeterMatrix& a, const CoxeterMatrix& b) {
    CoxeterMatrix out;
    out.generators = a.generators;
    out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
    const int n = a.rank(), m = b.rank();
    out.entries.assign(n + m, std::vector<int>(n + m, 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.entries[i][j] = a.entries[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.entries[n + i][n + j] = b.entries[i][j];
    for (int i = 0; i < n + m; ++i) out.entries[i][i] = 1;
    return out;
}

namespace tits {

std::vector<Word> braid_neighbors(const CoxeterMatrix& mat, const Word& w) {
    std::vector<Word> out;
    const int len = static_cast<int>(w.size());
    for (int i = 0; i < len; ++i) {
        const Gen a = w[i];
        for (Gen b = 0; b < mat.rank(); ++b) {
            if (b == a) continue;
            const int m = mat.m(a, b);
            if (i + m > len) continue;
            bool match = true;
            for (int k = 0; k < m; ++k)
                if (w[i + k] != (k % 2 == 0 ? a : b)) {
                    match = false;
                    break;
                }
            if (!match) continue;
            Word nb = w;
            for (int k = 0; k < m; ++k) nb[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
            out.push_back(std::move(nb));
        }
    }
    return out;
}

namespace {

// Closure BFS. Returns false (not reduced) as soon as a doubled letter shows
// up; with stop_on_double=false it enumerates the full closure.
bool closure(const CoxeterMatrix& mat, const Word& start, bool stop_on_double,
             std::set<Word>& out) {
    std::deque<Word> queue;
    out.clear();
    out.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        if (stop_on_double)
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == w[i + 1]) return false;
        for (Word& nb : braid_neighbors(mat, w))
            if (out.insert(nb).second) queue.push_back(std::move(nb));
    }
    return true;
}

} // namespace

std::set<Word> reduced_words(const CoxeterMatrix& m, const Word& w) {
    std::set<Word> out;
    closure(m, w, false, out);
    return out;
}

bool is_reduced(const CoxeterMatrix& m, const Word& w) {
    std::set<Word> scratch;
    return closure(m, w, true, scratch);
}

} // namespace tits

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::size_t cap) : matrix_(std::move(matrix)) {
    matrix_.validate();
    if (cap < 1) throw invalid_matrix("cap must be >= 1");
    build(cap);
}

void CoxeterSystem::build(std::size_t cap) {
    const int n = rank();
    normal_forms_.push_back(Word{});
    cayley_.push_back(std::vector<Elt>(n, 0));
    constexpr Elt kUnset = static_cast<Elt>(-1);
    std::fill(cayley_[0].begin(), cayley_[0].end(), kUnset);

    std::vector<Elt> layer{kIdentity};
    while (!layer.empty()) {
        // Words of the next layer's elements, every reduced word of each.
        std::unordered_map<Word, Elt> word_to_id;
        std::vector<Elt> next;
        for (Elt w : layer) {
            for (Gen s = 0; s < n; ++s) {
                if (cayley_[w][s] != kUnset) continue;
                Word cand = normal_forms_[w];
                cand.push_back(static_cast<char>(s));
                auto it = word_to_id.find(cand);
                Elt u;
                if (it != word_to_id.end()) {
                    u = it->second;
                } else {
                    // New element: its braid closure is its full reduced-word
                    // set; the ShortLex normal form is the least of them.
                    if (normal_forms_.size() >= cap)
                        throw cap_exceeded("enumeration exceeded cap of " + std::to_string(cap));
                    u = static_cast<Elt>(normal_forms_.size());
                    std::deque<Word> queue{cand};
                    Word best = cand;
                    word_to_id.emplace(cand, u);
                    while (!queue.empty()) {
                        Word cur = std::move(queue.front());
                        queue.pop_front();
                        for (Word& nb : tits::braid_neighbors(matrix_, cur)) {
                            if (word_to_id.emplace(nb, u).second) {
                                if (nb < best) best = nb;
                                queue.push_back(std::move(nb));
                            }
                        }
                    }
                    normal_forms_.push_back(std::move(best));
                    cayley_.push_back(std::vector<Elt>(n, kUnset));
                    next.push_back(u);
                }
                cayley_[w][s] = u;
                cayley_[u][s] = w;
            }
        }
        layer = std::move(next);
    }

    inverses_.resize(order());
    for (Elt w = 0; w < order(); ++w) {
        Word rev(normal_forms_[w].rbegin(), normal_forms_[w].rend());
        inverses_[w] = evaluate(rev);
    }
}

Elt CoxeterSystem::multiply(Elt a, Elt b) const {
    Elt cur = a;
    for (char c : normal_forms_[b]) cur = cayley_[cur][static_cast<Gen>(c)];
    return cur;
}

Elt CoxeterSystem::evaluate(const Word& word) const {
    Elt cur = kIdentity;
    for (char c : word) {
        const Gen s = static_cast<Gen>(c);
        if (s < 0 || s >= rank()) throw unknown_generator("generator index out of range");
        cur = cayley_[cur][s];
    }
    return cur;
}

Elt CoxeterSystem::evaluate_names(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& nm : names) w.push_back(static_cast<char>(matrix_.gen_index(nm)));
    return evaluate(w);
}

std::vector<Gen> CoxeterSystem::descents_right(Elt w) const {
    std::vector<Gen> out;
    for (Gen s = 0; s < rank(); ++s)
        if (right_descent(w, s)) out.push_back(s);
    return out;
}

std::vector<Gen> CoxeterSystem::descents_left(Elt w) const { return descents_right(inverses_[w]); }

bool CoxeterSystem::bruhat_leq(Elt a, Elt b) const {
    while (true) {
        if (a == kIdentity) return true;
        if (length(a) > length(b)) return false;
        if (a == b) return true;
        const Gen s = static_cast<Gen>(normal_forms_[b].back());
        const Elt bs = cayley_[b][s];
        if (right_descent(a, s)) a = cayley_[a][s];
        b = bs;
    }
}

Elt CoxeterSystem::longest_element(const std::vector<Gen>& subset) const {
    Elt w = kIdentity;
    bool progress = true;
    while (progress) {
        progress = false;
        for (Gen s : subset) {
            if (s < 0 || s >= rank()) throw unknown_generator("generator index out of range");
            if (!right_descent(w, s)) {
                w = cayley_[w][s];
                progress = true;
            }
        }
    }
    return w;
}

int CoxeterSystem::element_order(Elt a) const {
    int n = 1;
    Elt cur = a;
    while (cur != kIdentity) {
        cur = multiply(cur, a);
        ++n;
    }
    return n;
}

std::vector<Elt> CoxeterSystem::generated_subgroup(const std::vector<Elt>& gens, std::size_t cap) const {
    std::unordered_set<Elt> seen{kIdentity};
    std::deque<Elt> queue{kIdentity};
    std::vector<Elt> out{kIdentity};
    while (!queue.empty()) {
        const Elt w = queue.front();
        queue.pop_front();
        for (Elt g : gens) {
            const Elt u = multiply(w, g);
            if (seen.insert(u).second) {
                if (seen.size() > cap) throw cap_exceeded("subgroup enumeration exceeded cap");
                out.push_back(u);
                queue.push_back(u);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> CoxeterSystem::layer_sizes() const {
    std::vector<std::size_t> out;
    for (Elt w = 0; w < order(); ++w) {
        const std::size_t l = normal_forms_[w].size();
        if (l >= out.size()) out.resize(l + 1, 0);
        ++out[l];
    }
    return out;
}

std::string CoxeterSystem::word_str(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += matrix_.generators[static_cast<Gen>(w[i])];
    }
    return out;
}

} // namespace foldkit
