#include "gorlink/liaison.hpp"

#include <random>

namespace gorlink {

DirectLinkResult direct_link(const Ideal& c, const Ideal& i) {
    if (!i.contains(c)) throw PrecondFailed("linking ideal is not contained in the input ideal");
    if (ideal_equals(c, i)) throw PrecondFailed("linking ideal equals the input ideal");
    if (c.grade() != i.grade())
        throw PrecondFailed("linking ideal grade " + std::to_string(c.grade()) +
                            " differs from input grade " + std::to_string(i.grade()));
    DirectLinkResult out;
    out.residual = colon(c, i);
    LinkCertificate& cert = out.certificate;
    cert.linking = c;
    cert.input = i;
    cert.residual = out.residual;
    cert.c_inside_intersection = i.contains(c) && out.residual.contains(c);
    cert.colon_c_input_is_residual = true; // by construction
    cert.colon_c_residual_is_input = ideal_equals(colon(c, out.residual), i);
    cert.grades_equal =
        c.grade() == i.grade() && c.grade() == out.residual.grade();
    return out;
}

bool is_gorenstein(const Ideal& i) {
    ChainComplex res = resolve(i);
    if (res.length() != i.grade()) return false;
    return res.module(res.length()).rank() == 1;
}

OmegaResult compute_omega(const Ideal& a, const Ideal& b, const Polynomial& y) {
    if (!a.ring()->same_ring(*b.ring()) || !y.ring()->same_ring(*a.ring()))
        throw RingMismatch("compute_omega inputs live in different rings");
    if (!a.contains(b)) throw PrecondFailed("b is not contained in a");
    if (y.is_zero() || !y.homogeneous_degree())
        throw PrecondFailed("y must be homogeneous and nonzero");
    if (!a.contains(y)) throw PrecondFailed("y does not lie in a");

    OmegaResult out;
    out.g = a.grade();
    if (b.grade() != out.g - 1)
        throw PrecondFailed("grades are not g and g-1: grade a = " + std::to_string(out.g) +
                            ", grade b = " + std::to_string(b.grade()));
    out.a_res = resolve(a);
    out.b_res = resolve(b);
    if (out.a_res.length() != out.g || out.a_res.module(out.g).rank() != 1)
        throw PrecondFailed("a is not Gorenstein of grade g");
    if (out.b_res.length() != out.g - 1 || out.b_res.module(out.g - 1).rank() != 1)
        throw PrecondFailed("b is not Gorenstein of grade g-1");
    out.v = out.a_res.module(out.g).degree(0);
    out.u = out.b_res.module(out.g - 1).degree(0);
    out.d = out.u - out.v;
    out.e = *y.homogeneous_degree();
    if (out.d < 0)
        throw PrecondFailed("d = u - v = " + std::to_string(out.d) + " is negative");
    if (!is_nonzerodivisor_mod(b, y)) throw NotNZD("y is a zerodivisor mod b");

    const RingPtr& ring = a.ring();
    GradedMatrix id0 = GradedMatrix::identity(GradedFreeModule(ring, {0}));
    out.alpha = lift_chain_map(out.b_res, out.a_res, id0);
    out.b_ext = extend_resolution_by_element(out.b_res, y);

    // mu = [alpha_i | r_i] with only the r-columns solved for
    const int g = out.g;
    std::vector<GradedMatrix> mus{id0};
    std::vector<GradedMatrix> rs{GradedMatrix()}; // 1-based
    for (int i = 1; i <= g; ++i) {
        GradedMatrix rhs; // a_i * r_i = rhs
        if (i == 1) {
            // a_1 r_1 = [y]
            GradedFreeModule src(ring, {out.e});
            rhs = GradedMatrix(src, out.a_res.module(0), {{y}});
        } else {
            GradedMatrix ysign_alpha =
                out.alpha.map(i - 1).scaled(i % 2 == 1 ? y : -y); // (-1)^{i-1} y alpha_{i-1}
            rhs = ysign_alpha;
            if (i >= 2) {
                GradedMatrix prev = rs[i - 1].compose(out.b_res.diff(i - 1).twist(-out.e));
                rhs = rhs.add(prev);
            }
        }
        GradedMatrix ri = matrix_lift(out.a_res.diff(i), rhs);
        rs.push_back(ri);
        if (i < g) {
            const GradedMatrix& ai = out.alpha.map(i);
            mus.push_back(GradedMatrix::from_blocks(
                {ai.source(), ri.source()}, {out.a_res.module(i)}, {{&ai, &ri}}));
        } else {
            mus.push_back(ri);
        }
    }
    out.mu = ChainMap(out.b_ext, out.a_res, std::move(mus));
    out.mu.check_squares();

    out.omega_raw = out.mu.map(g).entry(0, 0);
    Ideal by = ideal_sum(b, y);
    Polynomial nf = by.normal_form(out.omega_raw);
    if (nf.is_zero())
        throw PrecondFailed("the canonical-module multiplier vanishes mod (b, y); "
                            "a = (b, y) is excluded by d >= 0");
    out.omega_scale = nf.lead_coeff();
    out.omega = nf.monic();

    // track the y-cofactor of the reduction omega_raw - nf = (b part) + h*y
    Polynomial diff = out.omega_raw - nf;
    if (diff.is_zero()) {
        out.y_cofactor = Polynomial::zero(ring);
    } else {
        std::vector<Polynomial> cols = b.gens();
        cols.push_back(y);
        std::vector<int> degs;
        for (const auto& c : cols) degs.push_back(c.degree());
        GradedFreeModule src(ring, std::move(degs));
        std::vector<std::vector<Polynomial>> row(1, cols);
        GradedMatrix m(src, GradedFreeModule(ring, {0}), std::move(row));
        GradedFreeModule dsrc(ring, {diff.degree()});
        GradedMatrix dm(dsrc, GradedFreeModule(ring, {0}), {{diff}});
        GradedMatrix x = matrix_lift(m, dm);
        out.y_cofactor = x.entry(x.rows() - 1, 0);
    }
    return out;
}

Polynomial choose_f(const Ideal& b, const Polynomial& y, const Polynomial& omega, int d,
                    int trials, std::uint64_t seed) {
    if (d < 0) throw PrecondFailed("f search needs d >= 0");
    const RingPtr& ring = b.ring();
    const Field& field = ring->field();
    int tested = 0;
    std::string rejected;

    auto attempt = [&](const Polynomial& f) -> bool {
        if (tested >= trials) return false;
        ++tested;
        Polynomial z = omega + f * y;
        if (!z.is_zero() && is_nonzerodivisor_mod(b, z)) return true;
        rejected += (rejected.empty() ? "" : ", ") + f.str();
        return false;
    };

    Polynomial zero = Polynomial::zero(ring);
    if (attempt(zero)) return zero;

    static const std::int64_t small_coeffs[] = {1, -1, 2, -2, 3, 5};
    for (const Monomial& m : ring->monomials_of_degree(d)) {
        for (std::int64_t c : small_coeffs) {
            if (tested >= trials) break;
            Polynomial f = Polynomial::monomial_poly(ring, m, Scalar::from_int(field, c));
            if (attempt(f)) return f;
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<Monomial> mons = ring->monomials_of_degree(d);
    for (int round = 1; tested < trials; ++round) {
        std::int64_t span = 2 * round + 3;
        std::vector<Term> terms;
        for (const Monomial& m : mons) {
            std::int64_t c = static_cast<std::int64_t>(rng() % (2 * span + 1)) - span;
            if (c != 0) terms.push_back({m, Scalar::from_int(field, c)});
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (f.is_zero()) continue;
        if (attempt(f)) return f;
    }
    throw SearchExhausted("no f of degree " + std::to_string(d) + " found in " +
                          std::to_string(trials) + " trials; rejected: " + rejected);
}

namespace {

LinkCertificate make_certificate(const Ideal& c, const Ideal& input, const Ideal& residual) {
    LinkCertificate cert;
    cert.linking = c;
    cert.input = input;
    cert.residual = residual;
    cert.c_inside_intersection = input.contains(c) && residual.contains(c);
    cert.colon_c_input_is_residual = ideal_equals(colon(c, input), residual);
    cert.colon_c_residual_is_input = ideal_equals(colon(c, residual), input);
    cert.grades_equal = c.grade() == input.grade() && c.grade() == residual.grade();
    return cert;
}

} // namespace

BiliaisonResult two_link_construct(const Ideal& a, const Ideal& b, const Polynomial& y,
                                   const BiliaisonOptions& opts) {
    BiliaisonResult out;
    out.a = a;
    out.b = b;
    out.y = y;
    out.seed = opts.seed;
    out.omega = compute_omega(a, b, y);
    const int g = out.omega.g;
    const int d = out.omega.d;
    const RingPtr& ring = a.ring();
    const Field& field = ring->field();

    if (opts.f) {
        out.f = *opts.f;
        if (!out.f.is_zero() &&
            (!out.f.homogeneous_degree() || *out.f.homogeneous_degree() != d))
            throw PrecondFailed("f must be homogeneous of degree d = " + std::to_string(d));
    } else {
        out.f = choose_f(b, y, out.omega.omega, d, opts.trials, opts.seed);
    }
    out.z = out.omega.omega + out.f * y;
    if (out.z.is_zero() || !is_nonzerodivisor_mod(b, out.z))
        throw NotNZD("omega + f*y is a zerodivisor mod b for f = " + out.f.str());

    Ideal by = ideal_sum(b, y);
    Ideal bz = ideal_sum(b, out.z);
    out.middle = colon(by, a);
    out.first_link = make_certificate(by, a, out.middle);
    out.ideal = colon(bz, out.middle);
    out.second_link = make_certificate(bz, out.middle, out.ideal);

    if (out.ideal.grade() != g)
        throw GradeDrop("constructed ideal has grade " + std::to_string(out.ideal.grade()) +
                        ", expected " + std::to_string(g));
    out.gorenstein = is_gorenstein(out.ideal);

    // generating-set formula: b + (alpha*_{g-1} + sign * f_t * a_g*)
    // where f_t = scale*f - y_cofactor matches z against the raw lift.
    // The sign is (-1)^{g+1} for the orientation our computed
    // resolutions carry.
    out.f_theorem = out.f.scaled(out.omega.omega_scale) - out.omega.y_cofactor;
    const GradedMatrix& alpha_top = out.omega.alpha.map(g - 1);
    const GradedMatrix& a_top = out.omega.a_res.diff(g);
    std::vector<Polynomial> fgens = b.gens();
    Scalar sign = Scalar::from_int(field, g % 2 == 0 ? -1 : 1);
    Polynomial fs = out.f_theorem.scaled(sign);
    for (int k = 0; k < alpha_top.rows(); ++k)
        fgens.push_back(alpha_top.entry(k, 0) + fs * a_top.entry(k, 0));
    out.formula_ideal = Ideal::make(ring, std::move(fgens));
    out.formula_route_match = ideal_equals(out.ideal, out.formula_ideal);
    if (!out.formula_route_match)
        out.diagnostics +=
            "generating-set formula differs from the colon route (a homotopy "
            "normalization shift of f); colon route is authoritative. ";
    return out;
}

HilbertIdentity hilbert_identity_check(const BiliaisonResult& data, int reg_i) {
    HilbertIdentity out;
    out.window = reg_i + data.omega.g + 2;
    const HilbertData& hi = data.ideal.hilbert();
    const HilbertData& ha = data.a.hilbert();
    const HilbertData& hb = data.b.hilbert();
    const int d = data.omega.d;
    for (int j = 0; j <= out.window; ++j) {
        if (hi.value(j) != ha.value(j - d) + hb.value(j) - hb.value(j - d)) {
            out.ok = false;
            out.first_failure = j;
            return out;
        }
    }
    return out;
}

} // namespace gorlink
