#include "gorlink/hilbert.hpp"

#include <algorithm>

#include "gorlink/errors.hpp"

namespace gorlink {

namespace {

using ZPoly = std::vector<std::int64_t>; // coefficients of a poly in t

ZPoly zp_one() { return {1}; }

// a += t^shift * b; the quotient-side pivot recursion
// N(I) = N(I + (x)) + t^w N(I : x) comes from the exact sequence
// 0 -> R/(I:x)(-w) -> R/I -> R/(I+(x)) -> 0.
void zp_add_shifted(ZPoly& a, const ZPoly& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void zp_mul(ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    a = std::move(r);
}

// keep only minimal generators (no mutual divisibility), sorted for
// determinism
std::vector<Monomial> minimalize_monomials(const PolyRing& ring, std::vector<Monomial> gens) {
    const int n = ring.nvars();
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return ring.cmp(a, b) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gens.size() && minimal; ++j)
            if (i != j && gens[i] != gens[j] && gens[i].divisible_by(gens[j], n)) minimal = false;
        if (minimal) out.push_back(gens[i]);
    }
    return out;
}

ZPoly numerator_rec(const PolyRing& ring, std::vector<Monomial> gens, int depth) {
    if (depth > 4096) throw InternalError("hilbert numerator recursion too deep");
    const int n = ring.nvars();
    gens = minimalize_monomials(ring, gens);
    if (gens.empty()) return zp_one();
    if (gens.front().is_one()) return {0};

    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
            if (!gens[i].coprime(gens[j], n)) pairwise_coprime = false;
    if (pairwise_coprime) {
        ZPoly r = zp_one();
        for (const auto& g : gens) {
            ZPoly factor(g.degree() + 1, 0);
            factor[0] = 1;
            factor[g.degree()] = -1;
            zp_mul(r, factor);
        }
        return r;
    }

    // pivot: the variable occurring in the most generators
    int best = -1, best_count = 0;
    for (int v = 0; v < n; ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exp(v) > 0) ++count;
        if (count > best_count) { best_count = count; best = v; }
    }
    Monomial x = ring.var_monomial(best);

    std::vector<Monomial> plus; // gens of I + (x)
    plus.push_back(x);
    for (const auto& g : gens)
        if (g.exp(best) == 0) plus.push_back(g);

    std::vector<Monomial> quot; // gens of I : x
    for (const auto& g : gens) quot.push_back(g.exp(best) > 0 ? g.div(x) : g);

    ZPoly r = numerator_rec(ring, std::move(plus), depth + 1);
    ZPoly q = numerator_rec(ring, std::move(quot), depth + 1);
    zp_add_shifted(r, q, ring.weights()[best]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace

std::vector<std::int64_t> hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens) {
    return numerator_rec(ring, std::move(gens), 0);
}

std::int64_t HilbertData::value(int j) const {
    if (j < 0) return 0;
    ZPoly c(static_cast<std::size_t>(j) + 1, 0);
    for (std::size_t i = 0; i < num_.size() && i <= static_cast<std::size_t>(j); ++i)
        c[i] = num_[i];
    for (int w : weights_)
        for (int i = w; i <= j; ++i) c[i] += c[i - w];
    return c[j];
}

std::vector<std::int64_t> HilbertData::h_vector() const {
    if (!artinian()) throw PrecondFailed("h-vector requested for a non-Artinian quotient");
    // an Artinian series is a polynomial of degree <= deg(numerator)
    std::vector<std::int64_t> h;
    for (int j = 0; j <= static_cast<int>(num_.size()); ++j) h.push_back(value(j));
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

} // namespace gorlink
