#include <doctest.h>

#include "gorlink/kustin_miller.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {
RingPtr ring2(Field f = Field::prime(32003)) { return PolyRing::make(f, {"x", "y"}); }
RingPtr ring3(Field f = Field::prime(32003)) { return PolyRing::make(f, {"x", "y", "z"}); }
} // namespace

TEST_CASE("beta for the grade-2 pair (x^2) in (x, y)") {
    RingPtr R = ring2();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    ChainComplex A = resolve(Ideal::make(R, {P("x"), P("y")}));
    ChainComplex B = resolve(Ideal::make(R, {P("x^2")}));
    int d = 2 - 2; // u - v
    std::vector<GradedMatrix> beta = compute_beta(A, B, d);
    // beta_2 is multiplication by (-1)^{g+1} = -1
    CHECK(beta[2].entry(0, 0) == Polynomial::constant(R, -1));
    // Eq (6): beta_1 a_2 = b_1 beta_2
    GradedMatrix lhs = beta[1].compose(A.diff(2));
    GradedMatrix rhs = B.diff(1).twist(d).compose(beta[2]);
    CHECK(lhs.sub(rhs).is_zero());
    // the defining relation on the entries
    const GradedMatrix& a2 = A.diff(2);
    Polynomial combo = beta[1].entry(0, 0) * a2.entry(0, 0) + beta[1].entry(0, 1) * a2.entry(1, 0);
    CHECK(combo == -P("x^2"));
}

TEST_CASE("beta_g sign for grade 3") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    ChainComplex A = resolve(Ideal::make(R, {P("x"), P("y"), P("z")}));
    ChainComplex B = resolve(Ideal::make(R, {P("x^2"), P("y^2")}));
    std::vector<GradedMatrix> beta = compute_beta(A, B, 1);
    CHECK(beta[3].entry(0, 0) == Polynomial::constant(R, 1)); // (-1)^{g+1}, g = 3
}

TEST_CASE("homotopy h vanishes for the grade-2 pair") {
    RingPtr R = ring2();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    ChainComplex A = resolve(Ideal::make(R, {P("x"), P("y")}));
    ChainComplex B = resolve(Ideal::make(R, {P("x^2")}));
    GradedMatrix id0 = GradedMatrix::identity(GradedFreeModule(R, {0}));
    ChainMap alpha = lift_chain_map(B, A, id0);
    std::vector<GradedMatrix> beta = compute_beta(A, B, 0);
    std::vector<GradedMatrix> h = compute_h(A, B, alpha, beta, 0);
    CHECK(h[0].is_zero());
    // Eq (8) at i = 1 reads beta_1 alpha_1 = b_1 h_1; with h = 0 the
    // composite must vanish
    CHECK(beta[1].compose(alpha.map(1)).sub(B.diff(1).compose(h[1])).is_zero());
}

TEST_CASE("full assembly on the quadric pair") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y"), P("z")});
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    BiliaisonOptions opts;
    opts.f = P("5*z");
    BiliaisonResult r = two_link_construct(a, b, P("z^2"), opts);
    KMData k = km_build(r);

    CHECK(km_identities_hold(k));
    // ranks (5; 5; 1): F1 = B1 + A1(-1), F2 = A2(-1) + B1(-1), F3 = B2(-1)
    REQUIRE(k.assembled.length() == 3);
    CHECK(k.assembled.module(1).rank() == 5);
    CHECK(k.assembled.module(2).rank() == 5);
    CHECK(k.assembled.module(3).rank() == 1);
    CHECK(k.assembled.module(3).degrees() == std::vector<int>({5}));

    CHECK(verify_resolution(k.assembled, r.ideal).ok);
    CHECK(minimality_check(k));
    BettiTable t = betti(k.assembled);
    CHECK(t == betti(resolve(r.ideal)));
    CHECK(t.ideal_ranks() == std::vector<std::int64_t>({5, 5, 1}));
    CHECK(gorenstein_symmetry(t, 3));
    CHECK(regularity(t) == 3); // socle degree 2 plus one
}

TEST_CASE("grade-2 assembly collapses to the koszul resolution") {
    RingPtr R = ring2();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y")});
    Ideal b = Ideal::make(R, {P("x^3")});
    BiliaisonResult r = two_link_construct(a, b, P("y"), {});
    KMData k = km_build(r);
    // g = 2: the top cancellation eats B_1(d), leaving A_1(-d) <- B_1(-d)
    REQUIRE(k.assembled.length() == 2);
    CHECK(k.assembled.module(1).rank() == 2);
    CHECK(k.assembled.module(2).rank() == 1);
    CHECK(verify_resolution(k.assembled, r.ideal).ok);
    CHECK(minimality_check(k));
    CHECK(betti(k.assembled) == betti(resolve(r.ideal)));
}

TEST_CASE("unit f produces a non-minimal but exact assembly") {
    RingPtr R = ring2();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y")});
    Ideal b = Ideal::make(R, {P("x^2")});
    // d = 0; f = 0 is rejected (omega = x is a zerodivisor mod x^2), so
    // the search lands on a unit scalar
    BiliaisonResult r = two_link_construct(a, b, P("y"), {});
    CHECK(r.f.degree() == 0);
    KMData k = km_build(r);
    CHECK_FALSE(minimality_check(k));
    CHECK(verify_resolution(k.assembled, r.ideal).ok);
    ChainComplex m = minimalize(k.assembled);
    CHECK(betti(m) == betti(resolve(r.ideal)));
}

TEST_CASE("biliaison certificate") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y"), P("z")});
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    BiliaisonOptions opts;
    opts.f = P("5*z");
    BiliaisonResult r = two_link_construct(a, b, P("z^2"), opts);
    BiliaisonCertificate cert = biliaison_certificate(r, 2);
    CHECK(cert.b_inside);
    CHECK(cert.grade_step);
    CHECK(cert.hilbert_shift);
    CHECK(cert.all());
    // a deliberately wrong shift breaks the Hilbert comparison
    BiliaisonResult wrong = r;
    wrong.omega.d += 1;
    CHECK_FALSE(biliaison_certificate(wrong, 2).hilbert_shift);
}

TEST_CASE("parity necessary condition") {
    CHECK_FALSE(parity_necessary_condition(3, 2)); // odd difference
    CHECK(parity_necessary_condition(2, 2));       // equal: d = 0 allowed
    CHECK(parity_necessary_condition(4, 2));
    CHECK_FALSE(parity_necessary_condition(2, 4)); // negative difference
}

TEST_CASE("hilbert additivity along the biliaison sequence") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y"), P("z")});
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    BiliaisonOptions opts;
    opts.f = P("5*z");
    BiliaisonResult r = two_link_construct(a, b, P("z^2"), opts);
    // h_{R/b}(j) = h_{R/I}(j) + h_{a/b}(j - d)
    for (int j = 0; j <= 8; ++j) {
        std::int64_t lhs = b.hilbert().value(j);
        std::int64_t rhs = r.ideal.hilbert().value(j) +
                           (b.hilbert().value(j - 1) - a.hilbert().value(j - 1));
        CHECK(lhs == rhs);
    }
}
