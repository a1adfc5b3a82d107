#ifndef GORLINK_FIELD_HPP
#define GORLINK_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "gorlink/errors.hpp"

namespace gorlink {

/// Coefficient field descriptor: the rationals, or a prime field F_p
/// with p < 2^31.
struct Field {
    enum class Kind { Rational, Prime };

    Kind kind = Kind::Rational;
    std::int64_t p = 0;

    static Field rational() { return Field{Kind::Rational, 0}; }
    static Field prime(std::int64_t p);

    bool is_rational() const { return kind == Kind::Rational; }
    bool is_prime() const { return kind == Kind::Prime; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;
};

/// An exact field element. Rationals are stored as reduced fractions
/// with positive denominator (GMP canonical form); prime-field values
/// as least nonnegative residues. A Scalar does not know its field;
/// all arithmetic goes through the Field.
class Scalar {
public:
    Scalar() : v_(std::int64_t{0}) {}

    static Scalar from_int(const Field& f, std::int64_t n);
    static Scalar from_string(const Field& f, const std::string& s);

    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    std::int64_t residue() const { return std::get<std::int64_t>(v_); }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str(const Field& f) const;

private:
    friend struct FieldOps;
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(std::int64_t r) : v_(r) {}

    std::variant<std::int64_t, mpq_class> v_;
};

/// Arithmetic on scalars of a fixed field.
struct FieldOps {
    static Scalar add(const Field& f, const Scalar& a, const Scalar& b);
    static Scalar sub(const Field& f, const Scalar& a, const Scalar& b);
    static Scalar mul(const Field& f, const Scalar& a, const Scalar& b);
    static Scalar div(const Field& f, const Scalar& a, const Scalar& b);
    static Scalar neg(const Field& f, const Scalar& a);
    static Scalar inv(const Field& f, const Scalar& a);

    /// Reduce a rational scalar mod p. Fails if the denominator is
    /// divisible by p.
    static Scalar reduce_mod(const Scalar& rational, const Field& fp);
};

bool is_prime_int(std::int64_t n);

} // namespace gorlink

#endif
