#include "gorlink/polynomial.hpp"

#include <algorithm>
#include <map>

namespace gorlink {

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(ring);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ring->cmp(a.mon, b.mon) > 0;
    });
    const Field& f = ring->field();
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coeff = FieldOps::add(f, p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
    return scalar(ring, Scalar::from_int(ring->field(), c));
}

Polynomial Polynomial::scalar(RingPtr ring, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var, int power) {
    Polynomial p(ring);
    p.terms_.push_back({ring->var_monomial(var, power), Scalar::from_int(ring->field(), 1)});
    return p;
}

Polynomial Polynomial::monomial_poly(RingPtr ring, const Monomial& m, const Scalar& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

const Term& Polynomial::lead() const {
    if (is_zero()) throw PrecondFailed("lead term of the zero polynomial");
    return terms_.front();
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    int d = terms_.front().mon.degree();
    for (const auto& t : terms_)
        if (t.mon.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::degree() const {
    if (is_zero()) return -1;
    int d = terms_.front().mon.degree();
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mon.degree()));
    return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_ring(*o.ring_))
        throw RingMismatch("polynomial operands live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const Field& f = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->cmp(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = FieldOps::add(f, terms_[i].coeff, o.terms_[j].coeff);
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, FieldOps::neg(ring_->field(), t.coeff)});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    const Field& f = ring_->field();
    // accumulate via a tree keyed by the ring order
    auto cmp = [this](const Monomial& a, const Monomial& b) { return ring_->cmp(a, b) > 0; };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mon.mul(b.mon);
            Scalar c = FieldOps::mul(f, a.coeff, b.coeff);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, std::move(c));
            } else {
                it->second = FieldOps::add(f, it->second, c);
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, FieldOps::mul(ring_->field(), t.coeff, c)});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(FieldOps::inv(ring_->field(), lead_coeff()));
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mon.mul(m), FieldOps::mul(ring_->field(), t.coeff, c)});
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    const Field& f = ring_->field();
    std::string s;
    for (const auto& t : terms_) {
        std::string c = t.coeff.str(f);
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        bool unit_coeff = (c == "1");
        if (t.mon.is_one()) {
            s += c;
        } else if (unit_coeff) {
            s += ring_->monomial_str(t.mon);
        } else {
            s += c + "*" + ring_->monomial_str(t.mon);
        }
    }
    return s;
}

Polynomial axpy(const Polynomial& p, const Scalar& c, const Monomial& m, const Polynomial& q) {
    return p - q.times_monomial(m, c);
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw PrecondFailed("division by zero polynomial");
    const RingPtr& ring = p.ring();
    const Field& f = ring->field();
    Polynomial rem = p;
    std::vector<Term> quot;
    const int n = ring->nvars();
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!lt.mon.divisible_by(q.lead_monomial(), n))
            throw PrecondFailed("polynomial division is not exact");
        Monomial m = lt.mon.div(q.lead_monomial());
        Scalar c = FieldOps::div(f, lt.coeff, q.lead_coeff());
        quot.push_back({m, c});
        rem = axpy(rem, c, m, q);
    }
    return Polynomial::from_terms(ring, std::move(quot));
}

Polynomial port_shift(const Polynomial& p, const RingPtr& target, int shift) {
    const int n = p.ring()->nvars();
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<int> e(target->nvars(), 0);
        for (int i = 0; i < n; ++i) {
            int j = i + shift;
            if (j < 0 || j >= target->nvars()) {
                if (t.mon.exp(i) != 0)
                    throw PrecondFailed("polynomial involves a variable absent from the target ring");
                continue;
            }
            e[j] = t.mon.exp(i);
        }
        terms.push_back({target->monomial(e), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

} // namespace gorlink
