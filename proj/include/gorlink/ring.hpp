#ifndef GORLINK_RING_HPP
#define GORLINK_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gorlink/field.hpp"

namespace gorlink {

/// Monomial order tag. Elimination blocks compare the total degree of
/// the first `block` variables first, then fall back to grevlex on the
/// whole exponent vector; this makes the first block an elimination
/// block.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, ElimBlock };
    Kind kind = Kind::Grevlex;
    int block = 0;

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elim_block(int k) { return {Kind::ElimBlock, k}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    std::string describe() const;
};

constexpr int kMaxVars = 24;

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Exponent vector with cached weighted degree. A Monomial belongs to
/// a ring implicitly (length and weights come from there).
class Monomial {
public:
    Monomial() : deg_(0) { exp_.fill(0); }

    static Monomial one() { return Monomial(); }

    std::uint16_t exp(int i) const { return exp_[i]; }
    std::int32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0 && total() == 0; }

    Monomial mul(const Monomial& o) const;
    /// Exact division; requires divisibility.
    Monomial div(const Monomial& o) const;
    bool divisible_by(const Monomial& o, int nvars) const;
    static Monomial lcm(const Monomial& a, const Monomial& b, const PolyRing& ring);
    static Monomial gcd(const Monomial& a, const Monomial& b, const PolyRing& ring);
    bool coprime(const Monomial& o, int nvars) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    friend class PolyRing;
    std::int32_t total() const;

    std::array<std::uint16_t, kMaxVars> exp_;
    std::int32_t deg_;
};

/// A graded polynomial ring over an exact field: named variables with
/// positive integer degree weights and a monomial order.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(Field field, std::vector<std::string> names,
                        std::vector<int> weights = {},
                        MonomialOrder order = MonomialOrder::grevlex());

    const Field& field() const { return field_; }
    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& var_name(int i) const { return names_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    const MonomialOrder& order() const { return order_; }
    bool standard_graded() const;

    /// -1 if unknown.
    int var_index(const std::string& name) const;

    Monomial monomial(const std::vector<int>& exps) const;
    Monomial var_monomial(int i, int power = 1) const;

    /// Strict order comparison: negative if a < b, 0 if equal,
    /// positive if a > b.
    int cmp(const Monomial& a, const Monomial& b) const;

    std::string monomial_str(const Monomial& m) const;

    /// All monomials of the given weighted degree, sorted descending in
    /// the ring order.
    std::vector<Monomial> monomials_of_degree(int d) const;

    /// Structural identity: same field, variables, weights, and order.
    bool same_ring(const PolyRing& o) const;

    /// Scratch ring with one auxiliary variable prepended and an
    /// elimination-block order on it (used for colon/intersection).
    RingPtr with_aux_var(const std::string& aux_name) const;

private:
    PolyRing(Field f, std::vector<std::string> n, std::vector<int> w, MonomialOrder o)
        : field_(f), names_(std::move(n)), weights_(std::move(w)), order_(o) {}

    Field field_;
    std::vector<std::string> names_;
    std::vector<int> weights_;
    MonomialOrder order_;
};

} // namespace gorlink

#endif
