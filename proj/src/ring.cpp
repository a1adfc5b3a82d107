#include "gorlink/ring.hpp"

#include <algorithm>
#include <set>

namespace gorlink {

std::string MonomialOrder::describe() const {
    switch (kind) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::ElimBlock: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
}

std::int32_t Monomial::total() const {
    std::int32_t t = 0;
    for (auto e : exp_) t += e;
    return t;
}

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
    r.deg_ = deg_ - o.deg_;
    return r;
}

bool Monomial::divisible_by(const Monomial& o, int nvars) const {
    for (int i = 0; i < nvars; ++i)
        if (exp_[i] < o.exp_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, const PolyRing& ring) {
    std::vector<int> e(ring.nvars());
    for (int i = 0; i < ring.nvars(); ++i) e[i] = std::max(a.exp_[i], b.exp_[i]);
    return ring.monomial(e);
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b, const PolyRing& ring) {
    std::vector<int> e(ring.nvars());
    for (int i = 0; i < ring.nvars(); ++i) e[i] = std::min(a.exp_[i], b.exp_[i]);
    return ring.monomial(e);
}

bool Monomial::coprime(const Monomial& o, int nvars) const {
    for (int i = 0; i < nvars; ++i)
        if (exp_[i] > 0 && o.exp_[i] > 0) return false;
    return true;
}

RingPtr PolyRing::make(Field field, std::vector<std::string> names,
                       std::vector<int> weights, MonomialOrder order) {
    if (names.empty() || static_cast<int>(names.size()) > kMaxVars)
        throw PrecondFailed("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw PrecondFailed("duplicate variable names");
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) throw PrecondFailed("weight count differs from variable count");
    for (int w : weights)
        if (w < 1) throw PrecondFailed("degree weights must be >= 1");
    if (order.kind == MonomialOrder::Kind::ElimBlock &&
        (order.block < 1 || order.block >= static_cast<int>(names.size())))
        throw PrecondFailed("elimination block out of range");
    return RingPtr(new PolyRing(field, std::move(names), std::move(weights), order));
}

bool PolyRing::standard_graded() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

bool PolyRing::same_ring(const PolyRing& o) const {
    if (this == &o) return true;
    return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_ &&
           order_ == o.order_;
}

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

Monomial PolyRing::monomial(const std::vector<int>& exps) const {
    if (static_cast<int>(exps.size()) != nvars())
        throw PrecondFailed("exponent vector length mismatch");
    Monomial m;
    std::int32_t d = 0;
    for (int i = 0; i < nvars(); ++i) {
        if (exps[i] < 0 || exps[i] > 0xFFFF) throw PrecondFailed("exponent out of range");
        m.exp_[i] = static_cast<std::uint16_t>(exps[i]);
        d += weights_[i] * exps[i];
    }
    m.deg_ = d;
    return m;
}

Monomial PolyRing::var_monomial(int i, int power) const {
    Monomial m;
    m.exp_[i] = static_cast<std::uint16_t>(power);
    m.deg_ = weights_[i] * power;
    return m;
}

namespace {

// grevlex on exponents [lo, hi): higher degree wins; on equal degree the
// smaller exponent in the *last* differing variable wins.
int grevlex_cmp(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

} // namespace

int PolyRing::cmp(const Monomial& a, const Monomial& b) const {
    const int n = nvars();
    switch (order_.kind) {
        case MonomialOrder::Kind::Grevlex: {
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            return grevlex_cmp(a, b, 0, n);
        }
        case MonomialOrder::Kind::Lex: {
            for (int i = 0; i < n; ++i)
                if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
            return 0;
        }
        case MonomialOrder::Kind::ElimBlock: {
            std::int32_t da = 0, db = 0;
            for (int i = 0; i < order_.block; ++i) {
                da += weights_[i] * a.exp(i);
                db += weights_[i] * b.exp(i);
            }
            if (da != db) return da < db ? -1 : 1;
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            return grevlex_cmp(a, b, 0, n);
        }
    }
    return 0;
}

std::string PolyRing::monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += names_[i];
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> e(nvars(), 0);
    // depth-first enumeration over weighted degree
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars() - 1) {
            if (rem % weights_[var] == 0) {
                e[var] = rem / weights_[var];
                out.push_back(monomial(e));
                e[var] = 0;
            }
            return;
        }
        for (int k = 0; k * weights_[var] <= rem; ++k) {
            e[var] = k;
            self(self, var + 1, rem - k * weights_[var]);
        }
        e[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
        return cmp(a, b) > 0;
    });
    return out;
}

RingPtr PolyRing::with_aux_var(const std::string& aux_name) const {
    std::vector<std::string> names;
    names.reserve(names_.size() + 1);
    names.push_back(aux_name);
    names.insert(names.end(), names_.begin(), names_.end());
    std::vector<int> w;
    w.reserve(weights_.size() + 1);
    w.push_back(1);
    w.insert(w.end(), weights_.begin(), weights_.end());
    return make(field_, std::move(names), std::move(w), MonomialOrder::elim_block(1));
}

} // namespace gorlink
