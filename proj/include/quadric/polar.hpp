#pragma once

#include <compare>
#include <vector>

#include "quadric/chern.hpp"

namespace quadric {

// Sign of the infinitesimal eps in the polarization H_m = E + mF, m = 1 + eps.
enum class EpsSign : int { Positive = 1, Negative = -1 };

// c0 + c1 * eps, ordered lexicographically once the sign of eps is fixed.
struct EpsRational {
  Rational c0;
  Rational c1;

  friend EpsRational operator+(const EpsRational& x, const EpsRational& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
  friend EpsRational operator-(const EpsRational& x, const EpsRational& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
  friend EpsRational operator-(const EpsRational& x) { return {-x.c0, -x.c1}; }
  friend bool operator==(const EpsRational& x, const EpsRational& y) { return x.c0 == y.c0 && x.c1 == y.c1; }
};

int sign(const EpsRational& x, EpsSign s);
std::strong_ordering compare(const EpsRational& x, const EpsRational& y, EpsSign s);
EpsRational abs(const EpsRational& x, EpsSign s);

// d . H_m for a slope difference d.
EpsRational degree(const Slope& d);

// mu_{H_m}(v) = c1(v) . H_m / r(v).
EpsRational mu(const KClass& v);

// Compares the H_m reduced Hilbert polynomials of two positive rank classes.
std::strong_ordering cmp_reduced_hilbert(const KClass& u, const KClass& v, EpsSign s);

// |(nu - nuE) . H_m| <= -K_X . H_m / 2 = 2 + eps.
bool in_dlp_window(const Slope& nu, const Slope& nu_e, EpsSign s);

struct Wall {
  Integer x;  // xi = xE + yF, primitive, x > 0 > y
  Integer y;
  Rational m;  // -y/x
};

// Walls of type (r, Delta) with value m in [lo, hi], sorted by m, one primitive xi per value.
std::vector<Wall> walls(const Integer& r, const Rational& delta, const Rational& lo, const Rational& hi);

// A value of m in (1, 2] on no wall of type (r, Delta).
Rational generic_m(const Integer& r, const Rational& delta);

}  // namespace quadric
