#ifndef GORLINK_MODVEC_HPP
#define GORLINK_MODVEC_HPP

#include <vector>

#include "gorlink/polynomial.hpp"

namespace gorlink {

/// One term of a free-module element: monomial * basis vector e_comp,
/// with a nonzero coefficient.
struct ModTerm {
    Monomial mon;
    int comp = 0;
    Scalar coeff;
};

/// Element of a free module R^rank, stored as terms sorted strictly
/// descending in a ModuleOrder.
using ModVec = std::vector<ModTerm>;

/// Monomial order on a free module. Components are split into a main
/// block [0, split) and a tag block [split, rank); any main-block term
/// beats any tag-block term (elimination). Within a block, terms
/// compare by the ring order on mon * weight[comp], ties broken by the
/// per-component tie index (smaller index wins). Trivial weights give
/// the term-over-position order; weights from the lead terms of a
/// previous basis give the Schreyer order.
class ModuleOrder {
public:
    ModuleOrder(RingPtr ring, int rank)
        : ring_(std::move(ring)), rank_(rank), split_(rank),
          weights_(rank, Monomial::one()), ties_(rank) {
        for (int i = 0; i < rank; ++i) ties_[i] = i;
    }

    static ModuleOrder top(RingPtr ring, int rank) { return ModuleOrder(std::move(ring), rank); }

    /// Appends a tag block of k components with the given Schreyer
    /// weights (and tie indices); existing components become the main
    /// (eliminating) block.
    ModuleOrder with_tag_block(const std::vector<Monomial>& tag_weights,
                               const std::vector<int>& tag_ties) const;

    /// All-main order with explicit Schreyer weights.
    static ModuleOrder schreyer(RingPtr ring, std::vector<Monomial> weights, std::vector<int> ties);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    int split() const { return split_; }
    bool is_tag(int comp) const { return comp >= split_; }
    const Monomial& weight(int comp) const { return weights_[comp]; }
    int tie(int comp) const { return ties_[comp]; }

    int cmp(const ModTerm& a, const ModTerm& b) const;

private:
    RingPtr ring_;
    int rank_;
    int split_;
    std::vector<Monomial> weights_;
    std::vector<int> ties_;
};

ModVec mv_from_terms(const ModuleOrder& ord, std::vector<ModTerm> terms);
ModVec mv_add(const ModuleOrder& ord, const ModVec& a, const ModVec& b);
/// a - c * m * b
ModVec mv_axpy(const ModuleOrder& ord, const ModVec& a, const Scalar& c, const Monomial& m,
               const ModVec& b);
ModVec mv_scale(const Field& f, const ModVec& a, const Scalar& c);
ModVec mv_monic(const Field& f, const ModVec& a);
ModVec mv_neg(const Field& f, const ModVec& a);
bool mv_equal(const ModVec& a, const ModVec& b);

/// Restrict to components in [lo, hi), renumbering them to start at 0.
ModVec mv_slice(const ModVec& v, int lo, int hi);

} // namespace gorlink

#endif
