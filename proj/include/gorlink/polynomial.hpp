#ifndef GORLINK_POLYNOMIAL_HPP
#define GORLINK_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorlink/ring.hpp"

namespace gorlink {

struct Term {
    Monomial mon;
    Scalar coeff;
};

/// Sparse multivariate polynomial: nonzero terms sorted strictly
/// descending in the ring order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Builds canonical form from an arbitrary term list (merges
    /// duplicates, drops zeros, sorts).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, std::int64_t c);
    static Polynomial scalar(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, int var, int power = 1);
    static Polynomial monomial_poly(RingPtr ring, const Monomial& m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    const Term& lead() const;
    const Monomial& lead_monomial() const { return lead().mon; }
    const Scalar& lead_coeff() const { return lead().coeff; }

    /// Common weighted degree of all terms, or nullopt for inhomogeneous
    /// or zero input. Use is_zero() to distinguish the zero case.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    /// Weighted degree of the highest-degree term; -1 for zero.
    int degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;

    Polynomial scaled(const Scalar& c) const;
    Polynomial monic() const;
    Polynomial times_monomial(const Monomial& m, const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// p - c * m * q, the reduction workhorse.
Polynomial axpy(const Polynomial& p, const Scalar& c, const Monomial& m, const Polynomial& q);

/// Exact division p / q; throws PrecondFailed if not exact.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

/// Port a polynomial into a ring with identical field whose variables
/// contain this ring's variables at offset `shift` (used for the
/// auxiliary elimination variable).
Polynomial port_shift(const Polynomial& p, const RingPtr& target, int shift);

} // namespace gorlink

#endif
