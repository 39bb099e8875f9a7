#include "quadric/polar.hpp"

#include <algorithm>

#include "quadric/error.hpp"

namespace quadric {

int sign(const EpsRational& x, EpsSign s) {
  if (int c = sgn(x.c0); c != 0) return c;
  return sgn(x.c1) * static_cast<int>(s);
}

std::strong_ordering compare(const EpsRational& x, const EpsRational& y, EpsSign s) { return sign(x - y, s) <=> 0; }

EpsRational abs(const EpsRational& x, EpsSign s) { return sign(x, s) < 0 ? -x : x; }

// (eE + fF).(E + (1 + eps)F) = e + f + e*eps
EpsRational degree(const Slope& d) { return {d.e + d.f, d.e}; }

EpsRational mu(const KClass& v) { return degree(v.slope()); }

std::strong_ordering cmp_reduced_hilbert(const KClass& u, const KClass& v, EpsSign s) {
  if (auto c = compare(mu(u), mu(v), s); c != 0) return c;
  return cmp(ratio(u.chi(), u.rank()), ratio(v.chi(), v.rank())) <=> 0;
}

bool in_dlp_window(const Slope& nu, const Slope& nu_e, EpsSign s) {
  EpsRational d = abs(degree(nu - nu_e), s);
  return compare(d, EpsRational{2, 1}, s) <= 0;
}

namespace {

void check_type(const Integer& r, const Rational& delta) {
  if (r <= 0) throw Error(ErrorCode::NotPositiveRank, "wall type rank " + r.get_str());
  if (delta <= 0) throw Error(ErrorCode::BadInterval, "wall type needs Delta > 0, got " + to_string(delta));
}

// Walls need xi^2 = 2xy >= -r^4 Delta / 2, i.e. x|y| <= floor(r^4 Delta / 4).
Integer product_bound(const Integer& r, const Rational& delta) {
  Rational n = r * r * r * r * delta / 4;
  return floor(n);
}

}  // namespace

std::vector<Wall> walls(const Integer& r, const Rational& delta, const Rational& lo, const Rational& hi) {
  check_type(r, delta);
  if (lo > hi) throw Error(ErrorCode::BadInterval, "[" + to_string(lo) + ", " + to_string(hi) + "]");
  std::vector<Wall> out;
  Integer n = product_bound(r, delta);
  for (Integer x = 1; x <= n; ++x) {
    // m = |y|/x in [lo, hi] with x|y| <= n
    Integer ymin = ceil(lo * x);
    if (ymin < 1) ymin = 1;
    Integer ymax = floor(hi * x);
    Integer cap = n / x;
    if (ymax > cap) ymax = cap;
    if (ymin > cap) {
      if (lo > 0) break;  // lo*x grows and n/x shrinks
      continue;
    }
    for (Integer y = ymin; y <= ymax; ++y) {
      if (gcd(x, y) != 1) continue;
      out.push_back({x, -y, ratio(y, x)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Wall& p, const Wall& q) { return p.m < q.m; });
  return out;
}

Rational generic_m(const Integer& r, const Rational& delta) {
  check_type(r, delta);
  // The wall values above 1 closest to 1 are (x+1)/x with x(x+1) <= n.
  Integer n = product_bound(r, delta);
  Integer x = sqrt(n);
  while (x > 0 && x * (x + 1) > n) --x;
  Rational upper = x > 0 ? ratio(x + 1, x) : Rational(2);
  if (upper > 2) upper = 2;
  return (Rational(1) + upper) / 2;
}

}  // namespace quadric
