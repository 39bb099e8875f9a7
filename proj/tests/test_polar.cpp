#include <doctest.h>

#include "oracle.hpp"
#include "quadric/polar.hpp"

using namespace quadric;
using oracle::q;

TEST_SUITE("polar") {
  TEST_CASE("mu as an eps polynomial") {
    CHECK(mu(KClass(4, -1, -1, 0)) == EpsRational{q(-1, 2), q(-1, 4)});
    CHECK(mu(KClass(1, 0, 0, 1)) == EpsRational{0, 0});
    CHECK(mu(KClass(2, 0, -1, 0)) == EpsRational{q(-1, 2), 0});
  }

  TEST_CASE("order follows the eps sign") {
    EpsRational x{0, 1}, y{0, -1};
    CHECK(compare(x, y, EpsSign::Positive) == std::strong_ordering::greater);
    CHECK(compare(x, y, EpsSign::Negative) == std::strong_ordering::less);
    CHECK(sign(EpsRational{q(1, 3), -100}, EpsSign::Positive) == 1);
    CHECK(abs(EpsRational{0, -2}, EpsSign::Positive) == EpsRational{0, 2});
  }

  TEST_CASE("reduced Hilbert polynomial comparison") {
    KClass u(2, 0, -1, 0), v(2, -1, 0, 0);
    CHECK(cmp_reduced_hilbert(u, v, EpsSign::Positive) == std::strong_ordering::greater);
    CHECK(cmp_reduced_hilbert(u, v, EpsSign::Negative) == std::strong_ordering::less);
    CHECK(cmp_reduced_hilbert(u, u, EpsSign::Positive) == std::strong_ordering::equal);
    CHECK(cmp_reduced_hilbert(KClass(1, 0, 0, 1), KClass(1, 0, 0, 0), EpsSign::Positive) ==
          std::strong_ordering::greater);
  }

  TEST_CASE("dlp window") {
    CHECK(in_dlp_window({q(-1, 4), q(-1, 4)}, {0, 0}, EpsSign::Positive));
    CHECK(in_dlp_window({1, 1}, {1, 1}, EpsSign::Positive));
    CHECK_FALSE(in_dlp_window({3, 0}, {0, 0}, EpsSign::Positive));
    // d = (2, 0): degree 2 + 2 eps, outside for eps > 0 and inside for eps < 0
    CHECK_FALSE(in_dlp_window({2, 0}, {0, 0}, EpsSign::Positive));
    CHECK(in_dlp_window({2, 0}, {0, 0}, EpsSign::Negative));
    CHECK(in_dlp_window({0, 2}, {0, 0}, EpsSign::Positive));
  }

  TEST_CASE("walls") {
    auto w = walls(2, 1, q(1, 2), 2);
    REQUIRE(w.size() == 3);
    CHECK(w[0].m == q(1, 2));
    CHECK(w[1].m == 1);
    CHECK(w[2].m == 2);
    CHECK((w[0].x == 2 && w[0].y == -1));
    CHECK(walls(2, 1, q(9, 10), q(99, 100)).empty());
    CHECK(generic_m(2, 1) == q(3, 2));
    CHECK(generic_m(2, q(9, 16)) == q(3, 2));
    CHECK(walls(2, 1, generic_m(2, 1), generic_m(2, 1)).empty());
  }

  TEST_CASE("walls against brute force") {
    // xi = xE + yF with 0 < -xi^2 = -2xy <= r^4 Delta / 2
    for (long r = 2; r <= 4; ++r)
      for (long dn = 1; dn <= 8; ++dn) {
        Rational delta = q(dn, 4);
        Rational bound = Rational(r * r * r * r) * delta / 2;
        std::vector<Rational> expect;
        for (long x = 1; x <= 200; ++x)
          for (long y = -200; y < 0; ++y) {
            if (Rational(-2 * x * y) > bound) continue;
            Integer g = gcd(Integer(x), Integer(-y));
            if (g != 1) continue;
            Rational m = q(-y, x);
            if (m >= q(1, 3) && m <= 3) expect.push_back(m);
          }
        std::sort(expect.begin(), expect.end());
        auto got = walls(r, delta, q(1, 3), 3);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].m == expect[i]);
      }
  }
}
