#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadric {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms. Throws ParseError for d = 0.
Rational ratio(const Integer& n, const Integer& d);

// Accepts "p", "p/q" and plain decimals such as "-0.25". Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// Canonical text: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);

// Non-negative representative of a mod m, m > 0.
Integer mod(const Integer& a, const Integer& m);

long to_long(const Integer& x);

}  // namespace quadric
