#include <doctest.h>

#include "oracle.hpp"
#include "quadric/error.hpp"

using namespace quadric;
using oracle::q;

TEST_SUITE("chern") {
  TEST_CASE("from_rnd recovers chi") {
    CHECK(KClass::from_rnd(4, {q(-1, 4), q(-1, 4)}, q(9, 16)) == KClass(4, -1, -1, 0));
    CHECK(KClass::from_rnd(1, {0, 0}, 0) == KClass(1, 0, 0, 1));
    CHECK_THROWS_AS(KClass::from_rnd(2, {q(1, 4), 0}, q(1, 2)), Error);
    try {
      KClass::from_rnd(2, {q(1, 4), 0}, q(1, 2));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotIntegral);
    }
    try {
      KClass::from_rnd(0, {0, 0}, 0);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPositiveRank);
    }
  }

  TEST_CASE("slope and discriminant") {
    KClass v(4, -1, -1, 0);
    CHECK(v.slope() == Slope{q(-1, 4), q(-1, 4)});
    CHECK(v.discriminant() == q(9, 16));
    CHECK(v.discriminant() == oracle::discriminant(v));
    CHECK(KClass(2, 0, -1, 0).discriminant() == q(1, 2));
    CHECK(v.ch2() == -2);
    CHECK_THROWS_AS(KClass(0, 1, 0, 0).slope(), Error);
  }

  TEST_CASE("euler_hom examples") {
    KClass e3(3, -1, -1, 0);
    CHECK(euler_hom(e3, e3) == 1);
    CHECK(euler_hom(KClass(2, 0, -1, 0), KClass(2, -1, 0, 0)) == -1);
    CHECK(euler_hom(KClass(1, 0, 0, 1), KClass(1, 0, 0, 1)) == 1);
    for (long p = -3; p <= 3; ++p)
      for (long s = -3; s <= 3; ++s)
        CHECK(euler_hom(oracle::line_bundle(p, 1), oracle::line_bundle(s, -2)) == oracle::chi_line(p, 1, s, -2));
  }

  TEST_CASE("euler_tensor examples") {
    KClass o(1, 0, 0, 1);
    CHECK(euler_tensor(o, KClass(4, -1, -1, 0)) == 0);
    CHECK(euler_tensor(o, o) == 1);
    CHECK(euler_tensor(KClass(1, -1, -1, 0), o) == 0);
  }

  TEST_CASE("twist dual serre") {
    CHECK(twist(KClass(4, -1, -1, 0), -1, -1) == KClass(4, -5, -5, -2));
    CHECK(twist(KClass(4, -1, -1, 0), 0, 0) == KClass(4, -1, -1, 0));
    CHECK(twist(KClass(1, 0, 0, 1), 1, 1) == KClass(1, 1, 1, 4));
    for (long p = -4; p <= 4; ++p)
      for (long s = -4; s <= 4; ++s) CHECK(twist(KClass(1, 0, 0, 1), p, s) == oracle::line_bundle(p, s));
    CHECK(dual(KClass(1, 0, 0, 1)) == KClass(1, 0, 0, 1));
    CHECK(dual(KClass(3, -1, -1, 0)) == KClass(3, 1, 1, 4));
    CHECK(serre_twist(KClass(1, 0, 0, 1)) == KClass(1, -2, -2, 1));
  }

  TEST_CASE("expected_dim and primitivity") {
    CHECK(expected_dim(KClass(4, -1, -1, 0)) == 3);
    CHECK(expected_dim(KClass(2, 0, -1, 0)) == 1);
    CHECK(expected_dim(KClass(1, 0, 0, 1)) == 0);
    CHECK(is_primitive(KClass(4, -1, -1, 0)));
    CHECK_FALSE(is_primitive(KClass(6, -2, -2, 0)));
    CHECK(is_primitive(KClass(1, 0, 0, 1)));
    CHECK_THROWS_AS(is_primitive(KClass()), Error);
  }

  TEST_CASE("format_slope drops zero terms") {
    CHECK(format_slope({0, q(-1, 2)}) == "-1/2F");
    CHECK(format_slope({q(-1, 2), 0}) == "-1/2E");
    CHECK(format_slope({q(-1, 4), q(-1, 4)}) == "-1/4E-1/4F");
    CHECK(format_slope({q(1, 3), q(2, 3)}) == "1/3E+2/3F");
    CHECK(format_slope({0, 0}) == "0");
  }
}
