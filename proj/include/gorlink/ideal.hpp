#ifndef GORLINK_IDEAL_HPP
#define GORLINK_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gorlink/hilbert.hpp"
#include "gorlink/polynomial.hpp"

namespace gorlink {

/// A homogeneous ideal with write-once caches for the reduced Groebner
/// basis, grade, Hilbert data and minimal generators. Immutable after
/// construction; copies share the caches. Safe for concurrent readers
/// (the cache fills are single-flight and idempotent).
class Ideal {
public:
    Ideal() = default;

    /// Zero generators are dropped; inhomogeneous generators are
    /// rejected.
    static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
    static Ideal zero(RingPtr ring) { return make(std::move(ring), {}); }

    const RingPtr& ring() const;
    const std::vector<Polynomial>& gens() const;

    /// Reduced Groebner basis w.r.t. the ring order: auto-reduced,
    /// monic, sorted ascending by lead term. {} for the zero ideal,
    /// {1} for the unit ideal.
    const std::vector<Polynomial>& reduced_gb() const;

    /// Remainder of multivariate division by the reduced GB.
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    bool contains(const Ideal& other) const;

    bool is_zero_ideal() const { return reduced_gb().empty(); }
    bool is_unit_ideal() const;

    /// Codimension; n for the unit ideal (flagged convention), 0 for
    /// the zero ideal.
    int grade() const;

    const HilbertData& hilbert() const;

    /// Minimal homogeneous generators (degreewise linear-algebra trim
    /// of the stored generators).
    const std::vector<Polynomial>& minimal_generators() const;
    int min_num_gens() const { return static_cast<int>(minimal_generators().size()); }

    bool equals(const Ideal& other) const;

    std::string str() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Polynomial& f);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Ideal quotient I : (f) via the single auxiliary-variable
/// intersection trick.
Ideal colon(const Ideal& i, const Polynomial& f);

/// I : J = intersection of I : (f) over the generators f of J.
Ideal colon(const Ideal& i, const Ideal& j);

/// True iff colon(b, (f)) = b.
bool is_nonzerodivisor_mod(const Ideal& b, const Polynomial& f);

bool ideal_equals(const Ideal& a, const Ideal& b);

/// Exhaustive S-polynomial check: every S-polynomial of the reduced GB
/// reduces to zero against it.
bool gb_spoly_check(const Ideal& i);

} // namespace gorlink

#endif
