#include <doctest.h>

#include "gorlink/groebner.hpp"
#include "gorlink/ideal.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {

RingPtr ring3(Field f = Field::prime(32003)) { return PolyRing::make(f, {"x", "y", "z"}); }

// test-only oracle: textbook Buchberger without any pair criteria,
// followed by interreduction through the engine's normal form
std::vector<Polynomial> naive_buchberger(const RingPtr& ring, std::vector<Polynomial> gens) {
    ModuleOrder ord = ModuleOrder::top(ring, 1);
    auto to_mv = [](const Polynomial& p) {
        ModVec v;
        for (const auto& t : p.terms()) v.push_back({t.mon, 0, t.coeff});
        return v;
    };
    std::vector<ModVec> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(mv_monic(ring->field(), to_mv(g)));
    bool grew = true;
    while (grew) {
        grew = false;
        ModuleGB gb(ord);
        gb.basis = basis;
        for (std::size_t i = 0; i < basis.size() && !grew; ++i)
            for (std::size_t j = i + 1; j < basis.size() && !grew; ++j) {
                ModVec s = s_vector(ord, basis[i], basis[j]);
                ModVec nf = module_normal_form(std::move(s), gb);
                if (!nf.empty()) {
                    basis.push_back(mv_monic(ring->field(), nf));
                    grew = true;
                }
            }
    }
    // reduce to a canonical generating set by round-tripping through Ideal
    std::vector<Polynomial> polys;
    for (const auto& v : basis) {
        std::vector<Term> terms;
        for (const auto& t : v) terms.push_back({t.mon, t.coeff});
        polys.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return polys;
}

} // namespace

TEST_CASE("buchberger basics") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal principal = Ideal::make(R, {P("x")});
    CHECK(principal.reduced_gb() == std::vector<Polynomial>{P("x")});

    // coprime lead terms: already a GB
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    CHECK(b.reduced_gb().size() == 2);
    CHECK(gb_spoly_check(b));

    // zero ideal and unit ideal conventions
    CHECK(Ideal::zero(R).reduced_gb().empty());
    Ideal unit = Ideal::make(R, {P("x"), P("x + 1") - P("x")});
    CHECK(unit.is_unit_ideal());
    CHECK(unit.reduced_gb().size() == 1);
    CHECK(unit.reduced_gb()[0] == Polynomial::constant(R, 1));
}

TEST_CASE("buchberger agrees with the criteria-free oracle") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    std::vector<std::vector<Polynomial>> cases = {
        {P("x*y - z^2"), P("x^2 - y*z")},
        {P("x^2 - z^2"), P("y^2 - z^2"), P("x*y*z + z^3")},
        {P("x^2 + y^2 + z^2"), P("x*y + z^2"), P("y*z")},
    };
    for (auto& gens : cases) {
        Ideal fast = Ideal::make(R, gens);
        Ideal slow = Ideal::make(R, naive_buchberger(R, gens));
        CHECK(ideal_equals(fast, slow));
        CHECK(gb_spoly_check(fast));
    }
}

TEST_CASE("spair saturation adds the expected element") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal i = Ideal::make(R, {P("x*y - z^2"), P("x^2 - y*z")});
    // the S-pair contributes a new degree-3 element
    CHECK(i.reduced_gb().size() > 2);
    CHECK(i.contains(P("y^2*z - x*z^2")));
}

TEST_CASE("normal form") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal x = Ideal::make(R, {P("x")});
    CHECK(x.normal_form(P("x^2")).is_zero());
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    CHECK(b.normal_form(P("x*y")) == P("x*y"));
    Ideal p = Ideal::make(R, {P("x^2 - z^2")});
    CHECK(p.normal_form(P("x^3")) == P("x*z^2"));
    // idempotence
    for (const char* s : {"x^3 + y^3", "x^2*y^2*z^2", "x^5 - z^5"}) {
        Polynomial n = b.normal_form(P(s));
        CHECK(b.normal_form(n) == n);
    }
}

TEST_CASE("ideal equality") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(ideal_equals(Ideal::make(R, {P("x"), P("y")}), Ideal::make(R, {P("y"), P("x")})));
    CHECK_FALSE(ideal_equals(Ideal::make(R, {P("x")}), Ideal::make(R, {P("x^2")})));
}

TEST_CASE("colon ideals") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal x2 = Ideal::make(R, {P("x^2")});
    CHECK(ideal_equals(colon(x2, P("x")), Ideal::make(R, {P("x")})));

    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    // a zero divisor mod b gives a strictly larger colon
    Ideal q = colon(b, P("x*y*z + z^3"));
    CHECK(q.contains(b));
    CHECK_FALSE(ideal_equals(q, b));

    // the first link of the two-link construction
    Ideal c = ideal_sum(b, P("z^2"));
    Ideal j = colon(c, Ideal::make(R, {P("x"), P("y"), P("z")}));
    Ideal expected = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2"), P("z^2"), P("x*y*z")});
    CHECK(ideal_equals(j, expected));

    CHECK_THROWS_AS(colon(b, Polynomial::zero(R)), PrecondFailed);
}

TEST_CASE("colon invariants") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal i = Ideal::make(R, {P("x^2"), P("x*y")});
    Ideal j = Ideal::make(R, {P("x"), P("z")});
    CHECK(colon(i, j).contains(i));
    // colon by the unit ideal returns I
    Ideal unit = Ideal::make(R, {Polynomial::constant(R, 1)});
    CHECK(ideal_equals(colon(i, unit), i));
    // J inside I forces the unit colon
    Ideal big = Ideal::make(R, {P("x"), P("y")});
    CHECK(colon(big, Ideal::make(R, {P("x*y")})).is_unit_ideal());
}

TEST_CASE("nonzerodivisor test") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal b = Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")});
    CHECK(is_nonzerodivisor_mod(b, P("z^2")));
    CHECK_FALSE(is_nonzerodivisor_mod(b, P("x*y*z + z^3")));
    CHECK(is_nonzerodivisor_mod(b, Polynomial::constant(R, 1)));
    CHECK_THROWS_AS(is_nonzerodivisor_mod(b, Polynomial::zero(R)), PrecondFailed);
}

TEST_CASE("grade computation") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(Ideal::make(R, {P("x"), P("y"), P("z")}).grade() == 3);
    CHECK(Ideal::make(R, {P("x^2 - z^2"), P("y^2 - z^2")}).grade() == 2);
    Ideal i = Ideal::make(
        R, {P("x^2 - z^2"), P("y^2 - z^2"), P("x*z"), P("y*z"), P("x*y + 5*z^2")});
    CHECK(i.grade() == 3); // Artinian
    CHECK(Ideal::zero(R).grade() == 0);
    CHECK(Ideal::make(R, {Polynomial::constant(R, 2)}).grade() == 3);
}

TEST_CASE("minimal generators") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Ideal i = Ideal::make(R, {P("x"), P("x^2"), P("y"), P("x*y + y^2")});
    CHECK(i.min_num_gens() == 2);
}
