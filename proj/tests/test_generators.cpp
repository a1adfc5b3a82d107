#include <doctest.h>

#include "gorlink/generators.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {
const Field kF = Field::prime(32003);
}

TEST_CASE("monomial complete intersection family, g = 3") {
    CIFamilyResult r = gen_ci_family(kF, {2, 2}, {1, 1, 1});
    CHECK(r.matches_expected);
    CHECK(r.c.str() == "x1*x2");
    CHECK(r.run.omega.d == 1);
    CHECK(r.run.gorenstein);
    // I = (x1^2, x2^2, f x1, f x2, x1 x2 + f x3)
    CHECK(r.run.ideal.min_num_gens() == 5);
}

TEST_CASE("monomial family, g = 2 with d = 1") {
    CIFamilyResult r = gen_ci_family(kF, {3}, {1, 1});
    CHECK(r.matches_expected);
    CHECK(r.run.omega.d == 1);
    CHECK(is_gorenstein(r.run.ideal));
    HilbertIdentity h = hilbert_identity_check(r.run, regularity(betti(resolve(r.run.ideal))));
    CHECK(h.ok);
}

TEST_CASE("monomial family gates bad exponents") {
    CHECK_THROWS_AS(gen_ci_family(kF, {1}, {2, 1}), PrecondFailed);   // m < n
    CHECK_THROWS_AS(gen_ci_family(kF, {2}, {1, 3}), PrecondFailed);   // d < 0
    CHECK_THROWS_AS(gen_ci_family(kF, {2, 2}, {1, 1}), PrecondFailed); // length mismatch
}

TEST_CASE("sally ideals") {
    SallyResult r = gen_sally(kF, 3, {1, 1});
    CHECK(r.matches_expected);
    CHECK(r.middle_matches);
    RingPtr R = r.run.a.ring();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal expected = Ideal::make(R, {P("x1*x2"), P("x1*x3"), P("x2*x3"),
                                     P("x1^2 - x3^2"), P("x2^2 - x3^2")});
    CHECK(ideal_equals(r.run.ideal, expected));
    CHECK(r.run.z == P("x2^2 - x3^2"));
    CHECK(r.run.ideal.hilbert().h_vector() == std::vector<std::int64_t>({1, 3, 1}));
}

TEST_CASE("sally middle residual identity for n = 4") {
    SallyResult r = gen_sally(kF, 4, {3, 7, 2});
    CHECK(r.middle_matches);
    CHECK(r.matches_expected);
    CHECK(r.run.ideal.hilbert().h_vector() == std::vector<std::int64_t>({1, 4, 1}));
    CHECK_THROWS_AS(gen_sally(kF, 4, {1, 0, 2}), PrecondFailed); // zero unit
}

TEST_CASE("generic minors base case n = 2") {
    GenericMinorsResult r = gen_generic_minors(kF, 2);
    CHECK_FALSE(r.linkage_ran);
    CHECK(r.target.grade() == 4);
    CHECK(r.target.min_num_gens() == 4); // the four entries
}

TEST_CASE("generic minors n = 3 reproduces the submaximal minors") {
    GenericMinorsResult r = gen_generic_minors(kF, 3);
    REQUIRE(r.linkage_ran);
    CHECK(r.matches_target);
    CHECK(r.sylvester_ok);
    CHECK(r.b.grade() == 3);
    CHECK(is_gorenstein(r.b));
    CHECK(r.b.min_num_gens() == 5);
    CHECK(r.a.grade() == 4);
    CHECK(r.run.omega.d == 1);
    // z is the complementary minor M_{1,1}
    RingPtr R = r.ring;
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(r.z == P("x22*x33 - x23*x32"));
    CHECK(r.y == P("x22"));
}

TEST_CASE("extrasymmetric family at lambda = 1") {
    ExtrasymmetricResult r = gen_extrasymmetric(kF, 1);
    CHECK(r.matches_expected);
    CHECK(r.pfaffian_match);
    CHECK(r.run.omega.d == 0);
    CHECK(r.a.min_num_gens() == 9);
    CHECK(r.b.grade() == 3);
    // f = 1: the construction is a non-minimal unprojection
    CHECK(r.run.f == Polynomial::constant(r.ring, 1));
    RingPtr R = r.ring;
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    // spot check: the printed generator a^2 + cx - by + az at lambda 1
    CHECK(r.run.ideal.contains(P("a^2 + c*x - b*y + a*z")));
    CHECK_THROWS_AS(gen_extrasymmetric(kF, 0), PrecondFailed);
}

TEST_CASE("apolar annihilator of a pure power") {
    RingPtr R = PolyRing::make(kF, {"x1", "x2", "x3", "x4", "x5"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal ann = apolar_annihilator(P("x1^3"), 4);
    Ideal expected = Ideal::make(R, {P("x2"), P("x3"), P("x4"), P("x5"), P("x1^4")});
    CHECK(ideal_equals(ann, expected));
    CHECK(ann.hilbert().h_vector() == std::vector<std::int64_t>({1, 1, 1, 1}));
}

TEST_CASE("apolar annihilator of a squarefree monomial") {
    RingPtr R = PolyRing::make(kF, {"x1", "x2", "x3", "x4", "x5"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal ann = apolar_annihilator(P("x1*x2*x3"), 4);
    Ideal expected = Ideal::make(R, {P("x4"), P("x5"), P("x1^2"), P("x2^2"), P("x3^2")});
    CHECK(ideal_equals(ann, expected));
    CHECK(ann.hilbert().h_vector() == std::vector<std::int64_t>({1, 3, 3, 1}));
    CHECK_THROWS_AS(apolar_annihilator(Polynomial::zero(R), 3), PrecondFailed);
}

TEST_CASE("apolar annihilator is an annihilator") {
    // every generator contracts the form to zero
    RingPtr R = PolyRing::make(kF, {"x1", "x2", "x3", "x4", "x5"});
    Polynomial form = random_dense_form(R, 3, 17);
    Ideal ann = apolar_annihilator(form, 4);
    auto contract = [&](const Monomial& g, const Polynomial& F) {
        std::vector<Term> out;
        for (const auto& t : F.terms())
            if (t.mon.divisible_by(g, R->nvars())) out.push_back({t.mon.div(g), t.coeff});
        return Polynomial::from_terms(R, std::move(out));
    };
    for (const auto& gen : ann.gens()) {
        if (gen.degree() > 3) continue;
        Polynomial acc = Polynomial::zero(R);
        for (const auto& t : gen.terms())
            acc = acc + contract(t.mon, form).scaled(t.coeff);
        CHECK(acc.is_zero());
    }
    CHECK(ann.hilbert().h_vector() == std::vector<std::int64_t>({1, 5, 5, 1}));
}

TEST_CASE("extract_f recovers the linking element") {
    RingPtr R = PolyRing::make(kF, {"x", "y", "z"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    Polynomial yel = P("z^2");
    OmegaResult om = compute_omega(Ideal::make(R, {P("x"), P("y"), P("z")}), b, yel);
    Polynomial f = extract_f(b, yel, om.omega, P("x*y*z + 5*z^3"));
    CHECK(f == P("5*z"));
    // a target inside (b, y) is rejected
    CHECK_THROWS_AS(extract_f(b, yel, om.omega, P("z^4")), PrecondFailed);
}
