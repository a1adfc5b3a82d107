#include "gorlink/field.hpp"

namespace gorlink {

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime_int(p))
        throw PrecondFailed("field characteristic must be a prime < 2^31, got " + std::to_string(p));
    return Field{Kind::Prime, p};
}

std::string Field::describe() const {
    return is_rational() ? "rational" : "gf " + std::to_string(p);
}

namespace {

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (r != 1) throw PrecondFailed("division by zero divisor in F_p");
    return mod_norm(t, p);
}

} // namespace

Scalar Scalar::from_int(const Field& f, std::int64_t n) {
    if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
    return Scalar(mod_norm(n, f.p));
}

Scalar Scalar::from_string(const Field& f, const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    if (f.is_rational()) return Scalar(std::move(q));
    // reduce n/d mod p
    return FieldOps::reduce_mod(Scalar(std::move(q)), f);
}

bool Scalar::is_zero() const {
    if (std::holds_alternative<std::int64_t>(v_)) return std::get<std::int64_t>(v_) == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (std::holds_alternative<std::int64_t>(v_)) return std::get<std::int64_t>(v_) == 1;
    return std::get<mpq_class>(v_) == 1;
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (std::holds_alternative<std::int64_t>(v_))
        return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
    return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

std::string Scalar::str(const Field& f) const {
    if (f.is_rational()) return rat().get_str();
    // symmetric representative for readability
    std::int64_t r = residue();
    if (r > f.p / 2) r -= f.p;
    return std::to_string(r);
}

Scalar FieldOps::add(const Field& f, const Scalar& a, const Scalar& b) {
    if (f.is_rational()) return Scalar(mpq_class(a.rat() + b.rat()));
    return Scalar(mod_norm(a.residue() + b.residue(), f.p));
}

Scalar FieldOps::sub(const Field& f, const Scalar& a, const Scalar& b) {
    if (f.is_rational()) return Scalar(mpq_class(a.rat() - b.rat()));
    return Scalar(mod_norm(a.residue() - b.residue(), f.p));
}

Scalar FieldOps::mul(const Field& f, const Scalar& a, const Scalar& b) {
    if (f.is_rational()) return Scalar(mpq_class(a.rat() * b.rat()));
    return Scalar(mod_norm(a.residue() * b.residue(), f.p));
}

Scalar FieldOps::div(const Field& f, const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw PrecondFailed("scalar division by zero");
    if (f.is_rational()) return Scalar(mpq_class(a.rat() / b.rat()));
    return Scalar(mod_norm(a.residue() * mod_inv(b.residue(), f.p), f.p));
}

Scalar FieldOps::neg(const Field& f, const Scalar& a) {
    if (f.is_rational()) return Scalar(mpq_class(-a.rat()));
    return Scalar(mod_norm(-a.residue(), f.p));
}

Scalar FieldOps::inv(const Field& f, const Scalar& a) {
    if (a.is_zero()) throw PrecondFailed("inverse of zero");
    if (f.is_rational()) return Scalar(mpq_class(1 / a.rat()));
    return Scalar(mod_inv(a.residue(), f.p));
}

Scalar FieldOps::reduce_mod(const Scalar& rational, const Field& fp) {
    const mpq_class& q = rational.rat();
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class p(static_cast<long>(fp.p));
    mpz_class nr = num % p, dr = den % p;
    std::int64_t n = mod_norm(nr.get_si(), fp.p);
    std::int64_t d = mod_norm(dr.get_si(), fp.p);
    if (d == 0) throw PrecondFailed("denominator divisible by field characteristic");
    return Scalar(mod_norm(n * mod_inv(d, fp.p), fp.p));
}

} // namespace gorlink
