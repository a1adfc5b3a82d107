#include <doctest.h>

#include <random>

#include "gorlink/field.hpp"

using namespace gorlink;

TEST_CASE("rational arithmetic is exact and canonical") {
    Field q = Field::rational();
    Scalar a = Scalar::from_string(q, "2/4");
    Scalar b = Scalar::from_string(q, "1/2");
    CHECK(a == b);
    Scalar c = FieldOps::add(q, a, b);
    CHECK(c == Scalar::from_int(q, 1));
    CHECK(FieldOps::mul(q, a, Scalar::from_int(q, 4)) == Scalar::from_int(q, 2));
    CHECK(FieldOps::div(q, Scalar::from_int(q, 1), Scalar::from_int(q, -3)) ==
          Scalar::from_string(q, "-1/3"));
    CHECK_THROWS_AS(FieldOps::inv(q, Scalar::from_int(q, 0)), PrecondFailed);
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(32003);
    Scalar a = Scalar::from_int(f, -1);
    CHECK(a.residue() == 32002);
    CHECK(FieldOps::mul(f, a, a) == Scalar::from_int(f, 1));
    Scalar inv5 = FieldOps::inv(f, Scalar::from_int(f, 5));
    CHECK(FieldOps::mul(f, inv5, Scalar::from_int(f, 5)).is_one());
    CHECK_THROWS_AS(Field::prime(32004), PrecondFailed);
    CHECK_THROWS_AS(Field::prime(1), PrecondFailed);
}

TEST_CASE("reduction mod p agrees with rational arithmetic") {
    Field q = Field::rational();
    Field f = Field::prime(32003);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t na = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t nb = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t da = 1 + static_cast<std::int64_t>(rng() % 50);
        std::int64_t db = 1 + static_cast<std::int64_t>(rng() % 50);
        Scalar a = Scalar::from_string(q, std::to_string(na) + "/" + std::to_string(da));
        Scalar b = Scalar::from_string(q, std::to_string(nb) + "/" + std::to_string(db));
        Scalar sum_q = FieldOps::reduce_mod(FieldOps::add(q, a, b), f);
        Scalar sum_f = FieldOps::add(f, FieldOps::reduce_mod(a, f), FieldOps::reduce_mod(b, f));
        CHECK(sum_q == sum_f);
        Scalar prod_q = FieldOps::reduce_mod(FieldOps::mul(q, a, b), f);
        Scalar prod_f = FieldOps::mul(f, FieldOps::reduce_mod(a, f), FieldOps::reduce_mod(b, f));
        CHECK(prod_q == prod_f);
    }
}
