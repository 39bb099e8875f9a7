#include "quadric/chern.hpp"

#include "quadric/error.hpp"

namespace quadric {

Rational intersect(const Slope& x, const Slope& y) { return x.e * y.f + x.f * y.e; }

Rational hilbert_p(const Slope& x) { return (x.e + 1) * (x.f + 1); }

std::string format_slope(const Slope& nu) {
  if (nu.e == 0 && nu.f == 0) return "0";
  std::string out;
  if (nu.e != 0) out = to_string(nu.e) + "E";
  if (nu.f != 0) out += (nu.f > 0 && !out.empty() ? "+" : "") + to_string(nu.f) + "F";
  return out;
}

KClass::KClass(Integer r, Integer a, Integer b, Integer chi)
    : r_(std::move(r)), a_(std::move(a)), b_(std::move(b)), chi_(std::move(chi)) {}

KClass KClass::from_rnd(const Integer& r, const Slope& nu, const Rational& delta) {
  if (r <= 0) throw Error(ErrorCode::NotPositiveRank, "rank " + r.get_str());
  Rational a = r * nu.e;
  Rational b = r * nu.f;
  Rational chi = r * (hilbert_p(nu) - delta);
  if (!is_integer(a) || !is_integer(b) || !is_integer(chi))
    throw Error(ErrorCode::NotIntegral, "(r, nu, Delta) = (" + r.get_str() + ", " + format_slope(nu) + ", " +
                                            to_string(delta) + ") has no integral class");
  return KClass(r, a.get_num(), b.get_num(), chi.get_num());
}

KClass KClass::line_bundle(const Integer& p, const Integer& q) { return KClass(1, p, q, (p + 1) * (q + 1)); }

// td(X) = 1 + (E + F) + pt, so chi = r + (a + b) + ch2.
Integer KClass::ch2() const { return chi_ - r_ - a_ - b_; }

Slope KClass::slope() const {
  if (r_ == 0) throw Error(ErrorCode::ZeroRank, "slope of rank zero class " + str());
  return {ratio(a_, r_), ratio(b_, r_)};
}

Rational KClass::discriminant() const {
  Slope nu = slope();
  return hilbert_p(nu) - ratio(chi_, r_);
}

KClass& KClass::operator+=(const KClass& o) {
  r_ += o.r_;
  a_ += o.a_;
  b_ += o.b_;
  chi_ += o.chi_;
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  r_ -= o.r_;
  a_ -= o.a_;
  b_ -= o.b_;
  chi_ -= o.chi_;
  return *this;
}

std::strong_ordering operator<=>(const KClass& x, const KClass& y) {
  auto c = [](const Integer& p, const Integer& q) { return cmp(p, q) <=> 0; };
  if (auto o = c(x.r_, y.r_); o != 0) return o;
  if (auto o = c(x.a_, y.a_); o != 0) return o;
  if (auto o = c(x.b_, y.b_); o != 0) return o;
  return c(x.chi_, y.chi_);
}

std::string KClass::str() const {
  return "(" + r_.get_str() + "," + a_.get_str() + "," + b_.get_str() + "," + chi_.get_str() + ")";
}

namespace {

// chi of a class given by (rank, c1, ch2) with c1 = aE + bF.
Integer chi_of(const Integer& r, const Integer& a, const Integer& b, const Integer& ch2) { return r + a + b + ch2; }

}  // namespace

Integer euler_hom(const KClass& u, const KClass& v) {
  // u^dual (x) v
  Integer r = u.rank() * v.rank();
  Integer a = u.rank() * v.c1_e() - v.rank() * u.c1_e();
  Integer b = u.rank() * v.c1_f() - v.rank() * u.c1_f();
  Integer c1c1 = u.c1_e() * v.c1_f() + u.c1_f() * v.c1_e();
  Integer ch2 = u.rank() * v.ch2() + v.rank() * u.ch2() - c1c1;
  return chi_of(r, a, b, ch2);
}

Integer euler_tensor(const KClass& u, const KClass& v) { return euler_hom(dual(u), v); }

KClass twist(const KClass& v, const Integer& p, const Integer& q) {
  const Integer& r = v.rank();
  Integer a = v.c1_e() + r * p;
  Integer b = v.c1_f() + r * q;
  Integer ch2 = v.ch2() + v.c1_e() * q + v.c1_f() * p + r * p * q;
  return KClass(r, a, b, chi_of(r, a, b, ch2));
}

KClass dual(const KClass& v) {
  Integer a = -v.c1_e();
  Integer b = -v.c1_f();
  return KClass(v.rank(), a, b, chi_of(v.rank(), a, b, v.ch2()));
}

KClass serre_twist(const KClass& v) { return twist(v, -2, -2); }

Integer expected_dim(const KClass& v) {
  if (v.rank() == 0) throw Error(ErrorCode::ZeroRank, "expected dimension of " + v.str());
  Rational d = v.rank() * v.rank() * (2 * v.discriminant() - 1) + 1;
  return d.get_num();
}

Integer content(const KClass& v) {
  Integer g = gcd(v.rank(), v.c1_e());
  g = gcd(g, v.c1_f());
  g = gcd(g, v.chi());
  return g;
}

bool is_primitive(const KClass& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroClass, "the zero class has no primitive part");
  return content(v) == 1;
}

}  // namespace quadric
