#include "foldkit/grothendieck.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace foldkit {

CycloScalar ClassFunction::at(const Perm& g) const {
    return values[static_cast<std::size_t>(group.class_of(g))];
}

Int ClassFunction::at_integer(const Perm& g) const {
    const Rat r = at(g).rational_value();
    if (r.get_den() != 1) throw error("character value is not an integer");
    return r.get_num();
}

ClassFunction character(CharacterKind kind, const PermGroup& group) {
    ClassFunction out;
    out.group = group;
    const auto classes = group.conjugacy_classes();
    out.values.reserve(classes.size());
    const std::size_t n = group.size();

    auto element_order = [&](const Perm& p) {
        int ord = 1;
        Perm cur = p;
        while (!perm_is_identity(cur)) {
            cur = perm_compose(cur, p);
            ++ord;
        }
        return ord;
    };

    for (const auto& cls : classes) {
        const Perm& rep = group.elements[static_cast<std::size_t>(cls.front())];
        switch (kind) {
            case CharacterKind::Trivial:
                out.values.emplace_back(1);
                break;
            case CharacterKind::Sign:
                out.values.emplace_back(perm_parity(rep));
                break;
            case CharacterKind::Std3: {
                if (n != 6 && n != 3)
                    throw kind_unavailable("std3 is defined on S3 or its Z/3 restriction");
                if (n == 6 && group.is_abelian())
                    throw kind_unavailable("std3 needs S3, not an abelian group of order 6");
                const int ord = element_order(rep);
                out.values.emplace_back(ord == 1 ? 3 : (ord == 2 ? 1 : 0));
                break;
            }
            case CharacterKind::Regular:
                out.values.emplace_back(perm_is_identity(rep) ? static_cast<long>(n) : 0);
                break;
            case CharacterKind::Explicit:
                throw error("explicit characters need character_explicit");
        }
    }
    return out;
}

ClassFunction character_explicit(const PermGroup& group, const std::vector<CycloScalar>& class_values) {
    if (class_values.size() != group.conjugacy_classes().size())
        throw error("explicit character must cover every conjugacy class");
    ClassFunction out;
    out.group = group;
    out.values = class_values;
    return out;
}

void GSetDatum::validate(std::size_t character_count) const {
    for (const auto& o : orbits) {
        if (o.orbit_size * o.stabilizer.size() != group.size())
            throw error("orbit " + o.label + ": orbit_size * |stabilizer| != |G|");
        if (o.xi_action.size() != character_count)
            throw inconsistent_action("orbit " + o.label + ": one label action per character required");
        for (const auto& act : o.xi_action) {
            if (act.size() != o.irrep_labels.size())
                throw inconsistent_action("orbit " + o.label + ": label action has wrong size");
            std::vector<std::size_t> sorted = act;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != i)
                    throw inconsistent_action("orbit " + o.label + ": xi-action is not a permutation");
        }
    }
}

std::vector<std::string> weighted_basis_abelian(const GSetDatum& gset, const Perm& g) {
    if (!gset.group.is_abelian()) throw not_abelian("weighted_basis_abelian needs an abelian group");
    std::vector<std::string> out;
    for (const auto& o : gset.orbits)
        if (o.stabilizer.contains(g)) out.push_back(o.label);
    return out;
}

WeightedQuotient weighted_quotient(const GSetDatum& gset, const std::vector<ClassFunction>& characters,
                                   const Perm& g) {
    gset.validate(characters.size());

    std::vector<std::pair<std::string, std::string>> vars;
    std::vector<std::size_t> orbit_start;
    for (const auto& o : gset.orbits) {
        orbit_start.push_back(vars.size());
        for (const auto& lbl : o.irrep_labels) vars.emplace_back(o.label, lbl);
    }

    std::vector<std::vector<CycloScalar>> rows;
    for (std::size_t oi = 0; oi < gset.orbits.size(); ++oi) {
        const auto& o = gset.orbits[oi];
        for (std::size_t xi = 0; xi < characters.size(); ++xi) {
            const CycloScalar scale = characters[xi].at(g);
            for (std::size_t i = 0; i < o.irrep_labels.size(); ++i) {
                // [M, xi (x) V_i] - xi(g) [M, V_i] = 0
                std::vector<CycloScalar> row(vars.size());
                row[orbit_start[oi] + o.xi_action[xi][i]] = row[orbit_start[oi] + o.xi_action[xi][i]] + CycloScalar(1);
                row[orbit_start[oi] + i] = row[orbit_start[oi] + i] - scale;
                bool nonzero = false;
                for (const auto& c : row)
                    if (!c.is_zero()) nonzero = true;
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }

    WeightedQuotient out;
    if (rows.empty()) {
        out.rank = vars.size();
        out.basis = vars;
        return out;
    }
    const auto pivots = cyclo_row_reduce(rows);
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    out.rank = vars.size() - pivots.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!pivot_set.count(i)) out.basis.push_back(vars[i]);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

PermGroup stabilizer_of(const CoxeterSystem& system, const GroupAction& action, Elt x) {
    std::vector<Perm> stab;
    for (const Perm& p : action.closure.elements)
        if (act_element(system, p, x) == x) stab.push_back(p);
    return PermGroup::from_elements(std::move(stab));
}

} // namespace

DecompEntry make_entry(const CoxeterSystem& system, const GroupAction& action, std::vector<Elt> orbit,
                       int shift, CharacterKind kind, const std::vector<CycloScalar>& explicit_values) {
    if (orbit.empty()) throw error("entry orbit is empty");
    const Elt rep = orbit.front();

    std::set<Elt> computed;
    for (const Perm& p : action.closure.elements) computed.insert(act_element(system, p, rep));
    std::set<Elt> given(orbit.begin(), orbit.end());
    if (computed != given) throw error("listed orbit is not the G-orbit of its representative");
    if (given.size() != orbit.size()) throw error("orbit lists a repeated element");
    for (Elt w : orbit)
        if (system.length(w) != system.length(rep)) throw error("orbit members have different lengths");

    DecompEntry e;
    e.orbit = std::move(orbit);
    e.shift = shift;
    PermGroup stab = stabilizer_of(system, action, rep);
    e.character = (kind == CharacterKind::Explicit) ? character_explicit(stab, explicit_values)
                                                    : character(kind, stab);
    return e;
}

std::map<Elt, LaurentPoly> trace_specialize(const EquivDecomp& decomp, const Perm& g) {
    std::map<Elt, LaurentPoly> out;
    for (const auto& e : decomp.entries) {
        bool pointwise = true;
        for (Elt w : e.orbit)
            if (act_element(*decomp.ambient, g, w) != w) {
                pointwise = false;
                break;
            }
        if (!pointwise) continue;
        const Int tr = e.character.at_integer(g);
        if (tr == 0) continue;
        auto [it, inserted] = out.emplace(e.orbit.front(), LaurentPoly());
        it->second.add(e.shift, tr);
        if (it->second.is_zero()) out.erase(it);
    }
    return out;
}

std::map<Elt, LaurentPoly> forget_specialize(const EquivDecomp& decomp) {
    std::map<Elt, LaurentPoly> out;
    for (const auto& e : decomp.entries) {
        const Int dim = e.character.dim();
        for (Elt w : e.orbit) {
            auto [it, inserted] = out.emplace(w, LaurentPoly());
            it->second.add(e.shift, dim);
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

namespace {

std::string render_coords(const CoxeterSystem& system, const std::map<Elt, LaurentPoly>& coords) {
    std::ostringstream os;
    for (const auto& [w, p] : coords) os << "  b(" << system.name(w) << ") : " << p.str() << "\n";
    return os.str();
}

} // namespace

CompareReport compare_folded_product(const QuasiSplitEmbedding& embedding,
                                     const std::vector<std::string>& word, const EquivDecomp& decomp,
                                     const Perm& sigma) {
    if (!embedding.action)
        throw verification_failed("compare_folded_product requires a quasi-split embedding");
    if (!sigma_transitive(*embedding.action, sigma))
        throw verification_failed("sigma does not act transitively on each orbit");

    CompareReport report{true, ""};
    std::ostringstream diff;

    // (1) Identity trace against the split ambient product over the images.
    std::vector<Elt> factors;
    for (const auto& nm : word) factors.push_back(embedding.images[embedding.partition.block_index(nm)]);
    HeckeAlgebra ambient_alg(*embedding.ambient, WeightFunction::split(embedding.ambient->matrix()));
    KLCoords ambient_product = ambient_alg.kl_product_general(factors);
    std::map<Elt, LaurentPoly> forget = forget_specialize(decomp);
    if (std::map<Elt, LaurentPoly>(ambient_product.begin(), ambient_product.end()) != forget) {
        report.pass = false;
        diff << "identity trace disagrees with the ambient KL product\nambient:\n"
             << render_coords(*embedding.ambient, ambient_product) << "fixture:\n"
             << render_coords(*embedding.ambient, forget);
    }

    // (2) Sigma trace against the folded product in H(W,S,L).
    HeckeAlgebra folded_alg(*embedding.folded, embedding.weights);
    KLCoords folded_product = folded_alg.kl_product_names(word);
    std::map<Elt, LaurentPoly> traced = trace_specialize(decomp, sigma);
    std::map<Elt, LaurentPoly> rekeyed;
    bool keys_ok = true;
    for (const auto& [w, p] : traced) {
        auto it = embedding.phi_inverse().find(w);
        if (it == embedding.phi_inverse().end()) {
            report.pass = false;
            keys_ok = false;
            diff << "sigma trace is supported on " << embedding.ambient->name(w)
                 << ", which is not in the image of phi\n";
            continue;
        }
        rekeyed.emplace(it->second, p);
    }
    if (keys_ok && std::map<Elt, LaurentPoly>(folded_product.begin(), folded_product.end()) != rekeyed) {
        report.pass = false;
        diff << "sigma trace disagrees with the folded KL product\nfolded:\n"
             << render_coords(*embedding.folded, folded_product) << "fixture trace:\n"
             << render_coords(*embedding.folded, rekeyed);
    }
    report.detail = diff.str();
    return report;
}

// ---------------------------------------------------------------------------

SubsetFixedCounts subset_fixed_counts(const std::vector<int>& cycle_type, int L) {
    long total = 0;
    for (int c : cycle_type) {
        if (c < 1) throw partition_mismatch("cycle lengths must be positive");
        total += c;
    }
    if (total != L) throw partition_mismatch("cycle type does not sum to L");

    // A fixed subset is a union of cycles: prod over cycles of (1 + z^c).
    std::vector<Int> counts(static_cast<std::size_t>(L) + 1, 0);
    counts[0] = 1;
    for (int c : cycle_type)
        for (long i = L; i >= c; --i) counts[static_cast<std::size_t>(i)] += counts[static_cast<std::size_t>(i - c)];

    SubsetFixedCounts out;
    out.counts = counts;
    for (long i = 0; i <= L; ++i) out.poly.add(2 * i - L, counts[static_cast<std::size_t>(i)]);
    return out;
}

std::map<int, Int> sl2_tensor_decompose(int n) {
    if (n < 1) throw error("tensor power must be >= 1");
    std::map<int, Int> cur{{1, Int(1)}};
    for (int step = 2; step <= n; ++step) {
        std::map<int, Int> next;
        for (const auto& [j, mult] : cur) {
            next[j + 1] += mult;
            if (j >= 1) next[j - 1] += mult;
        }
        cur = std::move(next);
    }
    return cur;
}

DihedralEqualCoeffs dihedral_equal_coeffs(int m) {
    DihedralEqualCoeffs out;
    out.convention =
        "kappa_{k,m} = multiplicity of the highest-weight-(k-1) irreducible in the (m-1)-th tensor "
        "power of the 2-dimensional representation";
    if (m < 2) throw error("m must be >= 2");

    // kappa columns for all lengths up to m, for the triangular inversion.
    std::vector<std::map<int, Int>> kappa_col(static_cast<std::size_t>(m) + 1);
    for (int j = 1; j <= m; ++j) {
        const auto mults = sl2_tensor_decompose(j == 1 ? 1 : j - 1);
        for (int k = 1; k <= j; ++k) {
            Int val = 0;
            if (j == 1) {
                val = (k == 1) ? 1 : 0;
            } else {
                auto it = mults.find(k - 1);
                val = it == mults.end() ? Int(0) : it->second;
            }
            if (val != 0) kappa_col[static_cast<std::size_t>(j)][k] = val;
        }
    }
    for (const auto& [k, v] : kappa_col[static_cast<std::size_t>(m)])
        if (k < m) out.kappa[k] = v;

    // Solve e_m = sum_j c_j kappa_col[j] by stripping top lengths.
    std::map<int, Int> target{{m, Int(1)}};
    std::map<int, Int> c;
    for (int j = m; j >= 1; --j) {
        auto it = target.find(j);
        if (it == target.end() || it->second == 0) continue;
        const Int cj = it->second;
        c[j] = cj;
        for (const auto& [k, v] : kappa_col[static_cast<std::size_t>(j)]) {
            target[k] -= cj * v;
            if (target[k] == 0) target.erase(k);
        }
    }
    for (const auto& [j, v] : c)
        if (j < m) out.rho[j] = v;
    return out;
}

} // namespace foldkit
