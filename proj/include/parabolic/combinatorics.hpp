#pragma once

// Exact integer/rational types and the counting primitives used by every formula.

#include <gmpxx.h>

#include <string>

namespace parabolic {

using Integer = mpz_class;
using Rational = mpq_class;

// n! for n >= 0. Throws std::invalid_argument for negative n.
Integer factorial(int n);

// C(n, j) for n >= 0; zero when j < 0 or j > n.
Integer binomial(int n, int j);

// Generalized binomial r(r-1)...(r-j+1)/j! with rational top, j >= 0.
Rational binomial(const Rational& r, int j);

// Reduced "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p/q", integers and decimals with optional exponent ("1e-9", "0.25").
Rational parse_rational(const std::string& text);

}  // namespace parabolic
