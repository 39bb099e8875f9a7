#include "quadric/arith.hpp"

#include <cctype>
#include <climits>

#include "quadric/error.hpp"

namespace quadric {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer digits_to_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  return Integer(t, 10);
}

}  // namespace

Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_signed_digits(s)) throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return digits_to_integer(s);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto bad = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'"); };
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_signed_digits(num) || !is_signed_digits(den)) throw bad();
    Integer d = digits_to_integer(den);
    if (d == 0) throw bad();
    Rational q(digits_to_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw bad();
    for (char c : whole)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    Rational q(w * scale + f, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!is_signed_digits(s)) throw bad();
  return Rational(digits_to_integer(s));
}

std::string to_string(const Rational& x) { return x.get_str(10); }
std::string to_string(const Integer& x) { return x.get_str(10); }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::ParseError, "integer out of machine range: " + x.get_str());
  return x.get_si();
}

}  // namespace quadric
