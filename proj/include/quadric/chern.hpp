#pragma once

#include <compare>
#include <string>

#include "quadric/arith.hpp"

namespace quadric {

// A point e*E + f*F of NS(X) tensored with Q, with E, F the two rulings of P1 x P1.
struct Slope {
  Rational e;
  Rational f;

  friend Slope operator+(const Slope& x, const Slope& y) { return {x.e + y.e, x.f + y.f}; }
  friend Slope operator-(const Slope& x, const Slope& y) { return {x.e - y.e, x.f - y.f}; }
  friend Slope operator-(const Slope& x) { return {-x.e, -x.f}; }
  friend bool operator==(const Slope& x, const Slope& y) { return x.e == y.e && x.f == y.f; }
};

// Intersection form: (aE + bF).(cE + dF) = ad + bc.
Rational intersect(const Slope& x, const Slope& y);

// P(x) = chi(O(x)) extended to rational classes: (e + 1)(f + 1).
Rational hilbert_p(const Slope& x);

// "aE+bF" with zero terms dropped, e.g. "-1/2F".
std::string format_slope(const Slope& nu);

// Class in K(P1 x P1) ~ Z^4 recorded as (rank, c1 = aE + bF, chi).
class KClass {
 public:
  KClass() = default;
  KClass(Integer r, Integer a, Integer b, Integer chi);

  // Class with given rank, slope and discriminant. Throws NotIntegral or NotPositiveRank.
  static KClass from_rnd(const Integer& r, const Slope& nu, const Rational& delta);
  static KClass line_bundle(const Integer& p, const Integer& q);

  const Integer& rank() const { return r_; }
  const Integer& c1_e() const { return a_; }
  const Integer& c1_f() const { return b_; }
  const Integer& chi() const { return chi_; }

  Integer ch2() const;
  bool is_zero() const { return r_ == 0 && a_ == 0 && b_ == 0 && chi_ == 0; }

  // Throw ZeroRank when r = 0.
  Slope slope() const;
  Rational discriminant() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass x, const KClass& y) { return x += y; }
  friend KClass operator-(KClass x, const KClass& y) { return x -= y; }
  friend KClass operator-(const KClass& x) { return KClass(-x.r_, -x.a_, -x.b_, -x.chi_); }
  friend KClass operator*(const Integer& n, const KClass& x) { return KClass(n * x.r_, n * x.a_, n * x.b_, n * x.chi_); }

  friend bool operator==(const KClass& x, const KClass& y) {
    return x.r_ == y.r_ && x.a_ == y.a_ && x.b_ == y.b_ && x.chi_ == y.chi_;
  }
  // Lexicographic on (r, a, b, chi).
  friend std::strong_ordering operator<=>(const KClass& x, const KClass& y);

  std::string str() const;  // "(r,a,b,chi)"

 private:
  Integer r_ = 0;
  Integer a_ = 0;
  Integer b_ = 0;
  Integer chi_ = 0;
};

// chi(u, v) = sum (-1)^i ext^i(u, v).
Integer euler_hom(const KClass& u, const KClass& v);
// chi(u (x) v).
Integer euler_tensor(const KClass& u, const KClass& v);

KClass twist(const KClass& v, const Integer& p, const Integer& q);
KClass dual(const KClass& v);
// v (x) K_X with K_X = O(-2,-2).
KClass serre_twist(const KClass& v);

// r^2 (2 Delta - 1) + 1. Throws ZeroRank.
Integer expected_dim(const KClass& v);

// gcd of (r, a, b, chi); zero only for the zero class.
Integer content(const KClass& v);
// Throws ZeroClass for v = 0.
bool is_primitive(const KClass& v);

}  // namespace quadric
