#include <doctest.h>

#include "gorlink/liaison.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {
RingPtr ring3(Field f = Field::prime(32003)) { return PolyRing::make(f, {"x", "y", "z"}); }

struct Ex33 {
    RingPtr R;
    Ideal a, b;
    Polynomial yel;
    Ex33() : R(ring3()) {
        auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
        a = Ideal::make(R, {P("x"), P("y"), P("z")});
        b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
        yel = P("z^2");
    }
    Polynomial P(const std::string& s) const { return parse_polynomial(R, s); }
};
} // namespace

TEST_CASE("direct link with certificate") {
    Ex33 e;
    Ideal c = ideal_sum(e.b, e.yel);
    DirectLinkResult r = direct_link(c, e.a);
    Ideal expected = Ideal::make(
        e.R, {e.P("x^2 - z^2"), e.P("y^2 - z^2"), e.P("z^2"), e.P("x*y*z")});
    CHECK(ideal_equals(r.residual, expected));
    CHECK(r.certificate.valid());
    // residual gains at most one minimal generator
    CHECK(r.residual.min_num_gens() <= c.min_num_gens() + 1);
    // linking back recovers the input
    CHECK(ideal_equals(direct_link(c, r.residual).residual, e.a));
    // self-link is rejected
    CHECK_THROWS_AS(direct_link(c, c), PrecondFailed);
}

TEST_CASE("is_gorenstein") {
    Ex33 e;
    CHECK(is_gorenstein(e.a)); // complete intersection
    CHECK(is_gorenstein(e.b));
    // (x,y) cap (z,w): CM of codimension 2 with type 2
    RingPtr R4 = PolyRing::make(Field::prime(32003), {"x", "y", "z", "w"});
    auto P4 = [&](const std::string& s) { return parse_polynomial(R4, s); };
    Ideal nt = Ideal::make(R4, {P4("x*z"), P4("x*w"), P4("y*z"), P4("y*w")});
    CHECK_FALSE(is_gorenstein(nt));
    Ideal i = Ideal::make(e.R, {e.P("x^2 - z^2"), e.P("y^2 - z^2"), e.P("x*z"), e.P("y*z"),
                                e.P("x*y + 5*z^2")});
    CHECK(is_gorenstein(i));
}

TEST_CASE("compute_omega on the two small complete intersections") {
    Ex33 e;
    OmegaResult om = compute_omega(e.a, e.b, e.yel);
    CHECK(om.g == 3);
    CHECK(om.u == 4);
    CHECK(om.v == 3);
    CHECK(om.d == 1);
    CHECK(om.e == 2);
    CHECK(om.omega == e.P("x*y*z"));
    CHECK(om.omega_scale.is_one());
    // omega generates the residual together with (b, y)
    Ideal j = colon(ideal_sum(e.b, e.yel), e.a);
    CHECK(ideal_equals(ideal_sum(ideal_sum(e.b, e.yel), om.omega), j));
}

TEST_CASE("compute_omega rejects d < 0") {
    RingPtr R = PolyRing::make(Field::prime(32003), {"x", "y"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y")});
    Ideal b = Ideal::make(R, {P("x^2")});
    // u = 2, v = 2 would be fine, but with y the element of degree 1,
    // u = 2 and v = 2 gives d = 0; use (x^2) with y-element y on
    // a = (x, y): u = 2, v = 2 -> d = 0 fine. The negative case is
    // b = (x^2) with a = (x, y) resolved by degrees (1,1): v = 2; to
    // force d < 0 take b of top twist 2 against a of top twist 3:
    RingPtr R3 = PolyRing::make(Field::prime(32003), {"x", "y", "z"});
    auto P3 = [&](const std::string& s) { return parse_polynomial(R3, s); };
    Ideal a3 = Ideal::make(R3, {P3("x"), P3("y"), P3("z")}); // v = 3
    Ideal b3 = Ideal::make(R3, {P3("x"), P3("y")});          // u = 2
    CHECK_THROWS_AS(compute_omega(a3, b3, P3("z")), PrecondFailed);
    (void)a;
    (void)b;
}

TEST_CASE("compute_omega derived case b = (x^3) in a = (x, y)") {
    RingPtr R = PolyRing::make(Field::prime(32003), {"x", "y"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal a = Ideal::make(R, {P("x"), P("y")});
    Ideal b = Ideal::make(R, {P("x^3")});
    Polynomial yel = P("y^2");
    OmegaResult om = compute_omega(a, b, yel);
    CHECK(om.u == 3);
    CHECK(om.v == 2);
    CHECK(om.d == 1);
    // brute-force colon oracle: (x^3, y^2) : (x, y) = (x^3, y^2, x^2 y)
    Ideal j = colon(ideal_sum(b, yel), a);
    CHECK(ideal_equals(j, Ideal::make(R, {P("x^3"), P("y^2"), P("x^2*y")})));
    CHECK(om.omega == P("x^2*y"));
    CHECK(ideal_equals(ideal_sum(ideal_sum(b, yel), om.omega), j));
}

TEST_CASE("compute_omega validates hypotheses") {
    Ex33 e;
    CHECK_THROWS_AS(compute_omega(e.a, e.b, e.P("x*y*z + z^3")), NotNZD);
    CHECK_THROWS_AS(compute_omega(e.a, e.b, Polynomial::zero(e.R)), PrecondFailed);
    // grade step must be exactly one
    Ideal small = Ideal::make(e.R, {e.P("x")});
    CHECK_THROWS_AS(compute_omega(e.a, small, e.P("y")), PrecondFailed);
    // y must lie in a
    RingPtr R2 = PolyRing::make(Field::prime(32003), {"x", "y", "z"});
    auto P2 = [&](const std::string& s) { return parse_polynomial(R2, s); };
    Ideal a2 = Ideal::make(R2, {P2("x^2"), P2("y"), P2("z")});
    Ideal b2 = Ideal::make(R2, {P2("y"), P2("z")});
    CHECK_THROWS_AS(compute_omega(a2, b2, P2("x")), PrecondFailed);
}

TEST_CASE("choose_f accepts and rejects the right candidates") {
    Ex33 e;
    OmegaResult om = compute_omega(e.a, e.b, e.yel);
    // the two candidates named by the construction
    CHECK(is_nonzerodivisor_mod(e.b, om.omega + e.P("5*z") * e.yel));
    CHECK_FALSE(is_nonzerodivisor_mod(e.b, om.omega + e.P("z") * e.yel));
    // the search is deterministic
    Polynomial f1 = choose_f(e.b, e.yel, om.omega, om.d, 200, 42);
    Polynomial f2 = choose_f(e.b, e.yel, om.omega, om.d, 200, 42);
    CHECK(f1 == f2);
    CHECK(is_nonzerodivisor_mod(e.b, om.omega + f1 * e.yel));
}

TEST_CASE("choose_f tries zero first when legal") {
    RingPtr R = PolyRing::make(Field::prime(32003), {"x", "y"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    // d = 0 with omega itself regular: b = (x^2 + y^2), omega = x
    Ideal b = Ideal::make(R, {P("x^2 + y^2")});
    Polynomial f = choose_f(b, P("y"), P("x"), 0, 50, 1);
    CHECK(f.is_zero());
    // and a case where zero is rejected: b = (x^2), omega = x
    Ideal b2 = Ideal::make(R, {P("x^2")});
    Polynomial f2 = choose_f(b2, P("y"), P("x"), 0, 50, 1);
    CHECK_FALSE(f2.is_zero());
    CHECK(is_nonzerodivisor_mod(b2, P("x") + f2 * P("y")));
}

TEST_CASE("choose_f exhausts honestly") {
    RingPtr R = PolyRing::make(Field::prime(3), {"x"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    // b = (x^2): no f of degree 0 makes x + f*x regular mod x^2
    Ideal b = Ideal::make(R, {P("x^2")});
    CHECK_THROWS_AS(choose_f(b, P("x"), P("x"), 0, 10, 1), SearchExhausted);
}

TEST_CASE("two_link_construct on the quadric pair") {
    Ex33 e;
    BiliaisonOptions opts;
    opts.f = e.P("5*z");
    BiliaisonResult r = two_link_construct(e.a, e.b, e.yel, opts);
    Ideal expected = Ideal::make(e.R, {e.P("x^2 - z^2"), e.P("y^2 - z^2"), e.P("x*z"),
                                       e.P("y*z"), e.P("x*y + 5*z^2")});
    CHECK(ideal_equals(r.ideal, expected));
    CHECK(r.first_link.valid());
    CHECK(r.second_link.valid());
    CHECK(r.gorenstein);
    CHECK(r.formula_route_match);
    CHECK(r.ideal.grade() == 3);
    // the linking ideals are Gorenstein complete-intersection extensions
    CHECK(is_gorenstein(ideal_sum(e.b, e.yel)));
    CHECK(is_gorenstein(ideal_sum(e.b, r.z)));
    // symmetry of the first link: (b,y) : ((b,y) : a) = a
    Ideal by = ideal_sum(e.b, e.yel);
    CHECK(ideal_equals(colon(by, r.middle), e.a));
    // a rejected f propagates as NotNZD
    BiliaisonOptions bad;
    bad.f = e.P("z");
    CHECK_THROWS_AS(two_link_construct(e.a, e.b, e.yel, bad), NotNZD);
}

TEST_CASE("hilbert identity on the quadric pair") {
    Ex33 e;
    BiliaisonOptions opts;
    opts.f = e.P("5*z");
    BiliaisonResult r = two_link_construct(e.a, e.b, e.yel, opts);
    CHECK(r.ideal.hilbert().h_vector() == std::vector<std::int64_t>({1, 3, 1}));
    HilbertIdentity h = hilbert_identity_check(r, 3);
    CHECK(h.ok);
    // hand arithmetic: h(j) = h_{R/a}(j-1) + h_{R/b}(j) - h_{R/b}(j-1)
    const HilbertData& hi = r.ideal.hilbert();
    CHECK(hi.value(0) == 1);
    CHECK(hi.value(1) == 3);
    CHECK(hi.value(2) == 1);
    CHECK(hi.value(3) == 0);
}
