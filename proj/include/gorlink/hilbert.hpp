#ifndef GORLINK_HILBERT_HPP
#define GORLINK_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "gorlink/ring.hpp"

namespace gorlink {

/// Hilbert series data of a graded quotient R/I: the numerator N(t) of
/// the series N(t) / prod_i (1 - t^{w_i}), plus the Krull dimension of
/// the quotient (for the Artinian h-vector).
class HilbertData {
public:
    HilbertData() = default;
    HilbertData(std::vector<std::int64_t> numerator, std::vector<int> weights, int dim)
        : num_(std::move(numerator)), weights_(std::move(weights)), dim_(dim) {}

    const std::vector<std::int64_t>& numerator() const { return num_; }
    int dimension() const { return dim_; }
    bool artinian() const { return dim_ == 0; }

    /// Hilbert function value h(j) = dim_k [R/I]_j; zero for j < 0.
    std::int64_t value(int j) const;

    /// Values 1, h(1), ..., up to the last nonzero entry. Only valid
    /// for Artinian quotients.
    std::vector<std::int64_t> h_vector() const;

private:
    std::vector<std::int64_t> num_;
    std::vector<int> weights_;
    int dim_ = -1;
};

/// Numerator of the Hilbert series of R/(monomial ideal), computed by
/// the pivot recursion N(I) = N(I + (x)) - t^w N(I : x).
std::vector<std::int64_t> hilbert_numerator(const PolyRing& ring, std::vector<Monomial> gens);

} // namespace gorlink

#endif
