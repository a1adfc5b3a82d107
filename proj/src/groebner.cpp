#include "gorlink/groebner.hpp"

#include <algorithm>
#include <list>

namespace gorlink {

namespace {

struct Pair {
    int i, j;          // basis indices, i < j
    Monomial lcm;      // lcm of the lead monomials (shared component)
    int comp;
    std::int64_t deg;  // degree of the lcm including the component twist
};

// in-place full reduction; returns the (possibly zero) normal form
ModVec reduce_full(ModVec v, const std::vector<ModVec>& basis, const ModuleOrder& ord) {
    const Field& f = ord.ring()->field();
    const int n = ord.ring()->nvars();
    ModVec done;
    while (!v.empty()) {
        const ModTerm& lt = v.front();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            const ModTerm& glt = g.front();
            if (glt.comp != lt.comp || !lt.mon.divisible_by(glt.mon, n)) continue;
            Scalar c = FieldOps::div(f, lt.coeff, glt.coeff);
            v = mv_axpy(ord, v, c, lt.mon.div(glt.mon), g);
            reduced = true;
            break;
        }
        if (!reduced) {
            done.push_back(v.front());
            v.erase(v.begin());
        }
    }
    return done;
}

} // namespace

ModVec s_vector(const ModuleOrder& ord, const ModVec& a, const ModVec& b) {
    const ModTerm& la = a.front();
    const ModTerm& lb = b.front();
    Monomial l = Monomial::lcm(la.mon, lb.mon, *ord.ring());
    const Field& f = ord.ring()->field();
    ModVec ta = mv_scale(f, a, FieldOps::inv(f, la.coeff));
    ModVec sb = mv_scale(f, b, FieldOps::inv(f, lb.coeff));
    ModVec left;
    for (const auto& t : ta) left.push_back({t.mon.mul(l.div(la.mon)), t.comp, t.coeff});
    return mv_axpy(ord, left, Scalar::from_int(f, 1), l.div(lb.mon), sb);
}

ModuleGB module_groebner(std::vector<ModVec> gens, const ModuleOrder& ord,
                         const std::vector<int>& comp_degree) {
    ModuleGB gb(ord);
    const PolyRing& ring = *ord.ring();
    const Field& f = ring.field();
    const int n = ring.nvars();
    const bool coprime_ok = ord.rank() == 1; // product criterion is a ring-level fact

    auto comp_deg = [&](int c) -> std::int64_t {
        return comp_degree.empty() ? 0 : comp_degree[c];
    };

    std::vector<ModVec>& G = gb.basis;
    std::list<Pair> pairs;

    auto make_pair = [&](int i, int j) -> Pair {
        const ModTerm& a = G[i].front();
        const ModTerm& b = G[j].front();
        Monomial l = Monomial::lcm(a.mon, b.mon, ring);
        return Pair{i, j, l, a.comp, l.degree() + comp_deg(a.comp)};
    };

    // Gebauer-Moeller update for a new element G[t]
    auto update_pairs = [&](int t) {
        const ModTerm& lt = G[t].front();
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            if (G[i].empty()) continue;
            if (G[i].front().comp != lt.comp) continue;
            cand.push_back(make_pair(i, t));
        }
        // M/F criteria: keep a candidate unless another candidate's lcm
        // properly divides it (coprime pairs survive to help discard).
        std::vector<bool> keep(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
                if (a == b) continue;
                if (cand[a].lcm != cand[b].lcm && cand[a].lcm.divisible_by(cand[b].lcm, n))
                    drop = true; // M: a properly multiple of b
                if (cand[a].lcm == cand[b].lcm && b < a && keep[b])
                    drop = true; // F: keep only one of equal lcms
            }
            keep[a] = !drop;
        }
        // B criterion on old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Pair& p = *it;
            bool erase = false;
            if (p.comp == lt.comp && p.lcm.divisible_by(lt.mon, n)) {
                Monomial l1 = Monomial::lcm(G[p.i].front().mon, lt.mon, ring);
                Monomial l2 = Monomial::lcm(G[p.j].front().mon, lt.mon, ring);
                if (l1 != p.lcm && l2 != p.lcm) erase = true;
            }
            it = erase ? pairs.erase(it) : std::next(it);
        }
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            if (coprime_ok && G[cand[a].i].front().mon.coprime(lt.mon, n)) continue;
            pairs.push_back(cand[a]);
        }
    };

    for (auto& g : gens) {
        if (g.empty()) continue;
        G.push_back(mv_monic(f, g));
        update_pairs(static_cast<int>(G.size()) - 1);
    }

    auto pick = [&]() {
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (it->deg != best->deg) {
                if (it->deg < best->deg) best = it;
                continue;
            }
            int c = ring.cmp(it->lcm, best->lcm);
            if (c != 0) {
                if (c < 0) best = it;
                continue;
            }
            if (it->i != best->i ? it->i < best->i : it->j < best->j) best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        return p;
    };

    while (!pairs.empty()) {
        Pair p = pick();
        ModVec s = s_vector(ord, G[p.i], G[p.j]);
        ModVec nf = reduce_full(std::move(s), G, ord);
        if (nf.empty()) continue;
        G.push_back(mv_monic(f, nf));
        update_pairs(static_cast<int>(G.size()) - 1);
    }

    // reduced basis: minimal lead terms, tails reduced, sorted ascending
    std::vector<ModVec> red;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < G.size() && minimal; ++j) {
            if (i == j) continue;
            const ModTerm& a = G[i].front();
            const ModTerm& b = G[j].front();
            if (a.comp != b.comp || !a.mon.divisible_by(b.mon, n)) continue;
            if (a.mon == b.mon && j > i) continue; // equal leads: keep the first
            minimal = false;
        }
        if (minimal) red.push_back(G[i]);
    }
    for (std::size_t i = 0; i < red.size(); ++i) {
        std::vector<ModVec> others;
        others.reserve(red.size() - 1);
        for (std::size_t j = 0; j < red.size(); ++j)
            if (j != i) others.push_back(red[j]);
        red[i] = mv_monic(f, reduce_full(red[i], others, ord));
        if (red[i].empty()) throw InternalError("reduced GB element vanished during interreduction");
    }
    std::sort(red.begin(), red.end(), [&](const ModVec& a, const ModVec& b) {
        return ord.cmp(a.front(), b.front()) < 0;
    });
    gb.basis = std::move(red);
    return gb;
}

ModVec module_normal_form(ModVec v, const ModuleGB& gb) {
    return reduce_full(std::move(v), gb.basis, gb.ord);
}

} // namespace gorlink
