#include "gorlink/modvec.hpp"

#include <algorithm>

namespace gorlink {

ModuleOrder ModuleOrder::with_tag_block(const std::vector<Monomial>& tag_weights,
                                        const std::vector<int>& tag_ties) const {
    ModuleOrder o(ring_, rank_ + static_cast<int>(tag_weights.size()));
    o.split_ = rank_;
    for (int i = 0; i < rank_; ++i) {
        o.weights_[i] = weights_[i];
        o.ties_[i] = ties_[i];
    }
    for (std::size_t j = 0; j < tag_weights.size(); ++j) {
        o.weights_[rank_ + j] = tag_weights[j];
        o.ties_[rank_ + j] = tag_ties[j];
    }
    return o;
}

ModuleOrder ModuleOrder::schreyer(RingPtr ring, std::vector<Monomial> weights,
                                  std::vector<int> ties) {
    ModuleOrder o(std::move(ring), static_cast<int>(weights.size()));
    o.weights_ = std::move(weights);
    o.ties_ = std::move(ties);
    return o;
}

int ModuleOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    bool ta = is_tag(a.comp), tb = is_tag(b.comp);
    if (ta != tb) return ta ? -1 : 1; // main block beats tag block
    int c = ring_->cmp(a.mon.mul(weights_[a.comp]), b.mon.mul(weights_[b.comp]));
    if (c != 0) return c;
    if (ties_[a.comp] != ties_[b.comp]) return ties_[a.comp] < ties_[b.comp] ? 1 : -1;
    return 0;
}

ModVec mv_from_terms(const ModuleOrder& ord, std::vector<ModTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
    ModVec out;
    const Field& f = ord.ring()->field();
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!out.empty() && out.back().mon == t.mon && out.back().comp == t.comp) {
            out.back().coeff = FieldOps::add(f, out.back().coeff, t.coeff);
            if (out.back().coeff.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

ModVec mv_add(const ModuleOrder& ord, const ModVec& a, const ModVec& b) {
    const Field& f = ord.ring()->field();
    ModVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.cmp(a[i], b[j]);
        if (c > 0) {
            r.push_back(a[i++]);
        } else if (c < 0) {
            r.push_back(b[j++]);
        } else {
            Scalar s = FieldOps::add(f, a[i].coeff, b[j].coeff);
            if (!s.is_zero()) r.push_back({a[i].mon, a[i].comp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

ModVec mv_axpy(const ModuleOrder& ord, const ModVec& a, const Scalar& c, const Monomial& m,
               const ModVec& b) {
    const Field& f = ord.ring()->field();
    ModVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto scaled = [&](const ModTerm& t) -> ModTerm {
        return {t.mon.mul(m), t.comp, FieldOps::neg(f, FieldOps::mul(f, t.coeff, c))};
    };
    std::vector<ModTerm> bs;
    bs.reserve(b.size());
    for (const auto& t : b) bs.push_back(scaled(t));
    while (i < a.size() && j < bs.size()) {
        int cc = ord.cmp(a[i], bs[j]);
        if (cc > 0) {
            r.push_back(a[i++]);
        } else if (cc < 0) {
            r.push_back(bs[j++]);
        } else {
            Scalar s = FieldOps::add(f, a[i].coeff, bs[j].coeff);
            if (!s.is_zero()) r.push_back({a[i].mon, a[i].comp, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < bs.size(); ++j) r.push_back(bs[j]);
    return r;
}

ModVec mv_scale(const Field& f, const ModVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    ModVec r;
    r.reserve(a.size());
    for (const auto& t : a) r.push_back({t.mon, t.comp, FieldOps::mul(f, t.coeff, c)});
    return r;
}

ModVec mv_monic(const Field& f, const ModVec& a) {
    if (a.empty()) return a;
    return mv_scale(f, a, FieldOps::inv(f, a.front().coeff));
}

ModVec mv_neg(const Field& f, const ModVec& a) {
    ModVec r;
    r.reserve(a.size());
    for (const auto& t : a) r.push_back({t.mon, t.comp, FieldOps::neg(f, t.coeff)});
    return r;
}

bool mv_equal(const ModVec& a, const ModVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].mon != b[i].mon || a[i].comp != b[i].comp || a[i].coeff != b[i].coeff)
            return false;
    return true;
}

ModVec mv_slice(const ModVec& v, int lo, int hi) {
    ModVec r;
    for (const auto& t : v)
        if (t.comp >= lo && t.comp < hi) r.push_back({t.mon, t.comp - lo, t.coeff});
    return r;
}

} // namespace gorlink
