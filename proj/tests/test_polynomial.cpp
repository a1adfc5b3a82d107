#include <doctest.h>

#include <algorithm>
#include <random>

#include "gorlink/parser.hpp"
#include "gorlink/polynomial.hpp"

using namespace gorlink;

namespace {
RingPtr ring3(Field f = Field::prime(32003)) { return PolyRing::make(f, {"x", "y", "z"}); }
} // namespace

TEST_CASE("ring arithmetic examples") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    CHECK(P("x - z") * P("x + z") == P("x^2 - z^2"));
    // hand expansion
    CHECK(P("x^2 - z^2") * P("y^2 - z^2") == P("x^2*y^2 - x^2*z^2 - y^2*z^2 + z^4"));
    RingPtr other = PolyRing::make(Field::prime(32003), {"u", "v", "w"});
    CHECK_THROWS_AS(P("x") + Polynomial::variable(other, 0), RingMismatch);
}

TEST_CASE("product of homogeneous inputs adds degrees") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    Polynomial p = P("x^2 - z^2");
    Polynomial q = P("x*y + 5*z^2");
    Polynomial prod = p * q;
    REQUIRE(prod.homogeneous_degree().has_value());
    CHECK(*prod.homogeneous_degree() == 4);
}

TEST_CASE("homogeneity detection") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(*P("x^2 - z^2").homogeneous_degree() == 2);
    CHECK_FALSE(P("x + y^2").homogeneous_degree().has_value());
    // zero reports absent-with-zero flag: is_zero distinguishes it
    Polynomial zero = Polynomial::zero(R);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.homogeneous_degree().has_value());
    CHECK(zero.is_homogeneous());
}

TEST_CASE("canonical form is independent of term order") {
    RingPtr R = ring3();
    std::mt19937_64 rng(11);
    const Field& f = R->field();
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        for (int t = 0; t < 12; ++t) {
            std::vector<int> e = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                                  static_cast<int>(rng() % 4)};
            terms.push_back({R->monomial(e), Scalar::from_int(f, static_cast<int>(rng() % 7) - 3)});
        }
        Polynomial p = Polynomial::from_terms(R, terms);
        std::shuffle(terms.begin(), terms.end(), rng);
        Polynomial q = Polynomial::from_terms(R, terms);
        CHECK(p == q);
    }
}

TEST_CASE("weighted degrees thread through") {
    RingPtr R = PolyRing::make(Field::rational(), {"x", "y"}, {1, 2});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(*P("x^2 + y").homogeneous_degree() == 2);
    CHECK(*P("x^2*y + y^2").homogeneous_degree() == 4);
}

TEST_CASE("render parse round trip") {
    RingPtr R = ring3(Field::rational());
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    for (const char* s : {"x^2 - z^2", "x*y + 5*z^2", "x^3 - 2*x*y*z + z^3", "0", "-x + y"}) {
        Polynomial p = P(s);
        CHECK(parse_polynomial(R, p.str()) == p);
    }
}

TEST_CASE("exact division") {
    RingPtr R = ring3();
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    CHECK(exact_divide(P("x^2 - z^2"), P("x - z")) == P("x + z"));
    CHECK_THROWS_AS(exact_divide(P("x^2 + y"), P("z")), PrecondFailed);
}
