#include "foldkit/perm.hpp"

#include <algorithm>
#include <deque>

#include "foldkit/errors.hpp"

namespace foldkit {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
    return out;
}

int perm_parity(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

bool perm_is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

PermGroup PermGroup::closure(const std::vector<Perm>& gens, int npoints) {
    PermGroup g;
    std::map<Perm, int> index;
    const Perm id = perm_identity(npoints);
    g.elements.push_back(id);
    g.words.push_back({});
    index.emplace(id, 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            Perm next = perm_compose(g.elements[cur], gens[gi]);
            if (index.emplace(next, static_cast<int>(g.elements.size())).second) {
                std::vector<int> word = g.words[cur];
                word.push_back(static_cast<int>(gi));
                g.elements.push_back(std::move(next));
                g.words.push_back(std::move(word));
                queue.push_back(static_cast<int>(g.elements.size()) - 1);
            }
        }
    }
    return g;
}

PermGroup PermGroup::from_elements(std::vector<Perm> els) {
    PermGroup g;
    std::sort(els.begin(), els.end());
    auto it = std::find_if(els.begin(), els.end(), perm_is_identity);
    if (it == els.end()) throw error("element list does not contain the identity");
    std::iter_swap(els.begin(), it);
    g.elements = std::move(els);
    g.words.assign(g.elements.size(), {});
    return g;
}

int PermGroup::index_of(const Perm& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return -1;
}

bool PermGroup::is_abelian() const {
    for (const Perm& a : elements)
        for (const Perm& b : elements)
            if (perm_compose(a, b) != perm_compose(b, a)) return false;
    return true;
}

const std::vector<std::vector<int>>& PermGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    std::vector<int> cls(elements.size(), -1);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (cls[i] >= 0) continue;
        std::vector<int> members;
        std::deque<int> queue{static_cast<int>(i)};
        cls[i] = static_cast<int>(out.size());
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            members.push_back(cur);
            for (const Perm& h : elements) {
                Perm conj = perm_compose(perm_compose(perm_inverse(h), elements[cur]), h);
                const int j = index_of(conj);
                if (j < 0) throw error("conjugation left the subgroup; element list not closed");
                if (cls[j] < 0) {
                    cls[j] = cls[i];
                    queue.push_back(j);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    classes_ = std::move(out);
    class_index_ = std::move(cls);
    return classes_;
}

int PermGroup::class_of(const Perm& p) const {
    const int i = index_of(p);
    if (i < 0) throw unknown_group_element("element not in group");
    conjugacy_classes();
    return class_index_[static_cast<std::size_t>(i)];
}

} // namespace foldkit
