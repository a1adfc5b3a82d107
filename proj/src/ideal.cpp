#include "gorlink/ideal.hpp"

#include <algorithm>
#include <map>

#include "gorlink/groebner.hpp"
#include "gorlink/linalg.hpp"

namespace gorlink {

struct Ideal::Impl {
    RingPtr ring;
    std::vector<Polynomial> gens;

    std::once_flag gb_flag, grade_flag, hilbert_flag, mingen_flag;
    std::vector<Polynomial> gb;
    std::optional<ModuleGB> gb_mod; // rank-1 view of the same basis
    int grade = -1;
    HilbertData hilbert;
    std::vector<Polynomial> mingens;
};

namespace {

ModVec poly_to_mv(const Polynomial& p, int comp = 0) {
    ModVec v;
    v.reserve(p.terms().size());
    for (const auto& t : p.terms()) v.push_back({t.mon, comp, t.coeff});
    return v;
}

Polynomial mv_to_poly(const RingPtr& ring, const ModVec& v) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const auto& t : v) terms.push_back({t.mon, t.coeff});
    return Polynomial::from_terms(ring, std::move(terms));
}

// minimal hitting set of the generator supports; dim(R/I) = n - |hit|
int min_hitting_set(const std::vector<std::vector<int>>& supports, int n) {
    int best = n + 1;
    std::vector<int> chosen(n, 0);
    auto rec = [&](auto&& self, std::size_t idx, int used) -> void {
        if (used >= best) return;
        while (idx < supports.size()) {
            bool hit = false;
            for (int v : supports[idx])
                if (chosen[v]) { hit = true; break; }
            if (!hit) break;
            ++idx;
        }
        if (idx == supports.size()) {
            best = used;
            return;
        }
        for (int v : supports[idx]) {
            chosen[v] = 1;
            self(self, idx + 1, used + 1);
            chosen[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

} // namespace

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
    if (!ring) throw PrecondFailed("ideal needs a ring");
    auto impl = std::make_shared<Impl>();
    impl->ring = ring;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_ring(*ring)) throw RingMismatch("ideal generator from a different ring");
        if (!g.homogeneous_degree().has_value())
            throw PrecondFailed("ideal generator is not homogeneous: " + g.str());
        impl->gens.push_back(std::move(g));
    }
    Ideal i;
    i.impl_ = std::move(impl);
    return i;
}

const RingPtr& Ideal::ring() const { return impl_->ring; }
const std::vector<Polynomial>& Ideal::gens() const { return impl_->gens; }

const std::vector<Polynomial>& Ideal::reduced_gb() const {
    std::call_once(impl_->gb_flag, [this] {
        std::vector<ModVec> in;
        in.reserve(impl_->gens.size());
        for (const auto& g : impl_->gens) in.push_back(poly_to_mv(g));
        ModuleGB gb = module_groebner(std::move(in), ModuleOrder::top(impl_->ring, 1), {0});
        for (const auto& v : gb.basis) impl_->gb.push_back(mv_to_poly(impl_->ring, v));
        impl_->gb_mod = std::move(gb);
    });
    return impl_->gb;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    if (!f.ring()->same_ring(*impl_->ring)) throw RingMismatch("normal form in a different ring");
    reduced_gb();
    return mv_to_poly(impl_->ring, module_normal_form(poly_to_mv(f), *impl_->gb_mod));
}

bool Ideal::contains(const Ideal& other) const {
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::is_unit_ideal() const {
    const auto& gb = reduced_gb();
    return gb.size() == 1 && !gb.front().is_zero() && gb.front().lead_monomial().is_one();
}

int Ideal::grade() const {
    std::call_once(impl_->grade_flag, [this] {
        const int n = impl_->ring->nvars();
        const auto& gb = reduced_gb();
        if (gb.empty()) {
            impl_->grade = 0;
            return;
        }
        if (is_unit_ideal()) {
            impl_->grade = n; // improper; flagged by is_unit_ideal()
            return;
        }
        std::vector<std::vector<int>> supports;
        for (const auto& g : gb) {
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (g.lead_monomial().exp(v) > 0) s.push_back(v);
            supports.push_back(std::move(s));
        }
        impl_->grade = min_hitting_set(supports, n);
    });
    return impl_->grade;
}

const HilbertData& Ideal::hilbert() const {
    std::call_once(impl_->hilbert_flag, [this] {
        std::vector<Monomial> leads;
        for (const auto& g : reduced_gb()) leads.push_back(g.lead_monomial());
        int dim = impl_->ring->nvars() - grade();
        if (is_unit_ideal()) dim = -1;
        impl_->hilbert = HilbertData(hilbert_numerator(*impl_->ring, std::move(leads)),
                                     impl_->ring->weights(), dim);
    });
    return impl_->hilbert;
}

const std::vector<Polynomial>& Ideal::minimal_generators() const {
    std::call_once(impl_->mingen_flag, [this] {
        const RingPtr& ring = impl_->ring;
        const Field& f = ring->field();
        std::vector<Polynomial> sorted = impl_->gens;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
            return a.degree() < b.degree();
        });
        std::vector<Polynomial> chosen;
        std::map<int, std::vector<Polynomial>> by_degree;
        for (auto& g : sorted) by_degree[g.degree()].push_back(g);
        for (auto& [d, cands] : by_degree) {
            // row space of { m * g : g chosen, deg(m g) = d } over the
            // degree-d monomial basis
            std::vector<Monomial> mons = ring->monomials_of_degree(d);
            auto index_of = [&](const Monomial& m) {
                for (std::size_t i = 0; i < mons.size(); ++i)
                    if (mons[i] == m) return static_cast<int>(i);
                throw InternalError("monomial missing from degree basis");
            };
            std::vector<std::vector<Scalar>> rows;
            for (const auto& g : chosen) {
                int gd = g.degree();
                if (gd > d) continue;
                for (const auto& m : ring->monomials_of_degree(d - gd)) {
                    Polynomial prod = g.times_monomial(m, Scalar::from_int(f, 1));
                    std::vector<Scalar> row(mons.size(), Scalar::from_int(f, 0));
                    for (const auto& t : prod.terms()) row[index_of(t.mon)] = t.coeff;
                    rows.push_back(std::move(row));
                }
            }
            rref(f, rows);
            for (const auto& g : cands) {
                std::vector<Scalar> row(mons.size(), Scalar::from_int(f, 0));
                for (const auto& t : g.terms()) row[index_of(t.mon)] = t.coeff;
                // reduce against the current row space
                for (const auto& r : rows) {
                    int piv = -1;
                    for (std::size_t c = 0; c < r.size(); ++c)
                        if (!r[c].is_zero()) { piv = static_cast<int>(c); break; }
                    if (piv < 0 || row[piv].is_zero()) continue;
                    Scalar factor = row[piv];
                    for (std::size_t c = piv; c < r.size(); ++c)
                        row[c] = FieldOps::sub(f, row[c], FieldOps::mul(f, factor, r[c]));
                }
                bool zero = std::all_of(row.begin(), row.end(),
                                        [](const Scalar& s) { return s.is_zero(); });
                if (!zero) {
                    chosen.push_back(g);
                    std::vector<Scalar> grow(mons.size(), Scalar::from_int(f, 0));
                    for (const auto& t : g.terms()) grow[index_of(t.mon)] = t.coeff;
                    rows.push_back(std::move(grow));
                    rref(f, rows);
                }
            }
        }
        impl_->mingens = std::move(chosen);
    });
    return impl_->mingens;
}

bool Ideal::equals(const Ideal& other) const { return ideal_equals(*this, other); }

std::string Ideal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < impl_->gens.size(); ++i) {
        if (i) s += ", ";
        s += impl_->gens[i].str();
    }
    return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal::make(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Polynomial& f) {
    std::vector<Polynomial> gens = a.gens();
    gens.push_back(f);
    return Ideal::make(a.ring(), std::move(gens));
}

namespace {

// generators of (t*A + (1-t)*B) in the scratch ring; A, B ideals of the
// base ring, t the prepended elimination variable
std::vector<Polynomial> scratch_mix(const RingPtr& scratch, const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b) {
    Polynomial t = Polynomial::variable(scratch, 0);
    Polynomial one = Polynomial::constant(scratch, 1);
    std::vector<Polynomial> gens;
    for (const auto& g : a) gens.push_back(t * port_shift(g, scratch, 1));
    for (const auto& g : b) gens.push_back((one - t) * port_shift(g, scratch, 1));
    return gens;
}

// GB elements free of the elimination variable, ported back and split
// into homogeneous components
std::vector<Polynomial> eliminate_aux(const RingPtr& base, const RingPtr& scratch,
                                      const std::vector<Polynomial>& gens) {
    std::vector<ModVec> in;
    for (const auto& g : gens) {
        ModVec v;
        for (const auto& t : g.terms()) v.push_back({t.mon, 0, t.coeff});
        in.push_back(std::move(v));
    }
    ModuleGB gb = module_groebner(std::move(in), ModuleOrder::top(scratch, 1), {0});
    std::vector<Polynomial> out;
    for (const auto& v : gb.basis) {
        if (v.front().mon.exp(0) != 0) continue; // lead involves t => element does
        std::vector<Term> terms;
        for (const auto& t : v) terms.push_back({t.mon, t.coeff});
        Polynomial g = port_shift(Polynomial::from_terms(scratch, std::move(terms)), base, -1);
        // split into homogeneous components (the target ideal is
        // homogeneous, so each component belongs to it)
        std::map<int, std::vector<Term>> comps;
        for (const auto& t : g.terms()) comps[t.mon.degree()].push_back(t);
        for (auto& [d, ts] : comps) out.push_back(Polynomial::from_terms(base, std::move(ts)));
    }
    return out;
}

} // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_ring(*b.ring())) throw RingMismatch("intersection across rings");
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    RingPtr scratch = a.ring()->with_aux_var("t@");
    auto gens = eliminate_aux(a.ring(), scratch, scratch_mix(scratch, a.gens(), b.gens()));
    return Ideal::make(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& i, const Polynomial& f) {
    if (f.is_zero()) throw PrecondFailed("colon by the zero polynomial");
    if (!f.ring()->same_ring(*i.ring())) throw RingMismatch("colon across rings");
    if (!f.homogeneous_degree().has_value())
        throw PrecondFailed("colon by an inhomogeneous polynomial");
    if (f.lead_monomial().is_one()) return i; // unit
    if (i.is_zero_ideal()) return i;
    RingPtr scratch = i.ring()->with_aux_var("t@");
    auto mixed = scratch_mix(scratch, i.gens(), {f});
    auto inter = eliminate_aux(i.ring(), scratch, mixed); // gens of I cap (f)
    std::vector<Polynomial> quot;
    for (const auto& g : inter) quot.push_back(exact_divide(g, f));
    return Ideal::make(i.ring(), std::move(quot));
}

Ideal colon(const Ideal& i, const Ideal& j) {
    if (j.is_zero_ideal()) throw PrecondFailed("colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& f : j.gens()) {
        Ideal part = colon(i, f);
        acc = first ? part : ideal_intersect(acc, part);
        first = false;
    }
    return acc;
}

bool is_nonzerodivisor_mod(const Ideal& b, const Polynomial& f) {
    if (f.is_zero()) throw PrecondFailed("zerodivisor test for the zero element");
    return ideal_equals(colon(b, f), b);
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
    if (!a.ring()->same_ring(*b.ring())) throw RingMismatch("ideal comparison across rings");
    const auto& ga = a.reduced_gb();
    const auto& gb = b.reduced_gb();
    if (ga.size() != gb.size()) return false;
    for (std::size_t k = 0; k < ga.size(); ++k)
        if (ga[k] != gb[k]) return false;
    return true;
}

bool gb_spoly_check(const Ideal& i) {
    const auto& gb = i.reduced_gb();
    if (gb.empty()) return true;
    ModuleGB mgb(ModuleOrder::top(i.ring(), 1));
    for (const auto& g : gb) mgb.basis.push_back(poly_to_mv(g));
    for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b) {
            ModVec s = s_vector(mgb.ord, mgb.basis[a], mgb.basis[b]);
            if (!module_normal_form(std::move(s), mgb).empty()) return false;
        }
    return true;
}

} // namespace gorlink
