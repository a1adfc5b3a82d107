#include <doctest.h>

#include <random>

#include "gorlink/linalg.hpp"
#include "gorlink/parser.hpp"

using namespace gorlink;

namespace {
PolyMatrix generic_skew(const RingPtr& ring, int n, int var0 = 0) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial::zero(ring)));
    int v = var0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m[i][j] = Polynomial::variable(ring, v);
            m[j][i] = -m[i][j];
            ++v;
        }
    return m;
}
} // namespace

TEST_CASE("determinant basics") {
    RingPtr R = PolyRing::make(Field::rational(), {"x", "y", "z", "w"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    PolyMatrix id3(3, std::vector<Polynomial>(3, Polynomial::zero(R)));
    for (int i = 0; i < 3; ++i) id3[i][i] = Polynomial::constant(R, 1);
    CHECK(determinant(id3) == Polynomial::constant(R, 1));
    PolyMatrix m{{P("x"), P("y")}, {P("z"), P("w")}};
    CHECK(determinant(m) == P("x*w - y*z"));
    CHECK_THROWS_AS(determinant(PolyMatrix{{P("x"), P("y")}}), PrecondFailed);
}

TEST_CASE("minor of a generic 3x3 matrix") {
    std::vector<std::string> names;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    RingPtr R = PolyRing::make(Field::rational(), names);
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    // delete row 1, column 1
    PolyMatrix m{{P("x22"), P("x23")}, {P("x32"), P("x33")}};
    CHECK(determinant(m) == P("x22*x33 - x23*x32"));
}

TEST_CASE("pfaffian basics") {
    RingPtr R = PolyRing::make(Field::rational(), {"a"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    PolyMatrix m{{Polynomial::zero(R), P("a")}, {P("-a"), Polynomial::zero(R)}};
    CHECK(pfaffian(m, {0, 1}) == P("a"));
    CHECK_THROWS_AS(pfaffian(m, {0}), PrecondFailed);
    PolyMatrix notskew{{P("a"), P("a")}, {P("-a"), Polynomial::zero(R)}};
    CHECK_THROWS_AS(pfaffian(notskew, {0, 1}), PrecondFailed);
}

TEST_CASE("generic 4x4 pfaffian identity") {
    RingPtr R = PolyRing::make(Field::rational(), {"m12", "m13", "m14", "m23", "m24", "m34"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    PolyMatrix m = generic_skew(R, 4);
    CHECK(pfaffian(m) == P("m12*m34 - m13*m24 + m14*m23"));
}

TEST_CASE("extrasymmetric submatrix pfaffian") {
    // N = [[B, A], [-A, lB]] on rows {1,2,4,5} gives b^2 - ad + l x^2
    // up to sign, here with the unit l = 2
    RingPtr R = PolyRing::make(Field::prime(32003), {"a", "b", "c", "d", "e", "f", "x", "y", "z"});
    auto P = [&](const std::string& s) { return parse_polynomial(R, s); };
    auto lp = [&](const Polynomial& p) { return p.scaled(Scalar::from_int(R->field(), 2)); };
    Polynomial A[3][3] = {{P("a"), P("b"), P("c")}, {P("b"), P("d"), P("e")}, {P("c"), P("e"), P("f")}};
    Polynomial B[3][3] = {{P("0"), P("x"), P("y")}, {P("-x"), P("0"), P("z")}, {P("-y"), P("-z"), P("0")}};
    PolyMatrix n(6, std::vector<Polynomial>(6));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            n[i][j] = B[i][j];
            n[i][j + 3] = A[i][j];
            n[i + 3][j] = -A[i][j];
            n[i + 3][j + 3] = lp(B[i][j]);
        }
    Polynomial pf = pfaffian(n, {0, 1, 3, 4});
    Polynomial want = P("b^2 - a*d + 2*x^2");
    CHECK((pf == want || pf == -want));
}

TEST_CASE("pfaffian squared is the determinant") {
    for (int n : {2, 4, 6}) {
        std::vector<std::string> names;
        for (int k = 0; k < n * (n - 1) / 2; ++k) names.push_back("t" + std::to_string(k));
        RingPtr R = PolyRing::make(Field::prime(32003), names);
        PolyMatrix m = generic_skew(R, n);
        Polynomial pf = pfaffian(m);
        CHECK(pf * pf == determinant(m));
    }
    // odd size: pfaffian of odd principal submatrix is zero by parity
}

TEST_CASE("kernel basis over the scalar field") {
    Field f = Field::prime(7);
    auto s = [&](int v) { return Scalar::from_int(f, v); };
    // rank-1 matrix [[1,2,3],[2,4,6]] has a 2-dimensional kernel
    std::vector<std::vector<Scalar>> m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}};
    auto basis = kernel_basis(f, m, 3);
    CHECK(basis.size() == 2);
}
