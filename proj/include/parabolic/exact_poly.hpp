#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parabolic/combinatorics.hpp"

namespace parabolic {

class ExactPoly {
 public:
  // degree() of the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  ExactPoly() = default;
  ExactPoly(std::initializer_list<Rational> coeffs);
  explicit ExactPoly(std::vector<Rational> coeffs);
  static ExactPoly monomial(Rational c, int degree);

  int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  Rational leading() const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;

  ExactPoly derivative() const;
  // p(-x)
  ExactPoly negated_argument() const;
  // x^shift * p(x)
  ExactPoly shifted(int shift) const;

  ExactPoly& operator+=(const ExactPoly& rhs);
  ExactPoly& operator-=(const ExactPoly& rhs);
  ExactPoly& operator*=(const Rational& c);

  friend ExactPoly operator+(ExactPoly lhs, const ExactPoly& rhs) { return lhs += rhs; }
  friend ExactPoly operator-(ExactPoly lhs, const ExactPoly& rhs) { return lhs -= rhs; }
  friend ExactPoly operator-(ExactPoly p) { return p *= Rational(-1); }
  friend ExactPoly operator*(const ExactPoly& lhs, const ExactPoly& rhs);
  friend ExactPoly operator*(ExactPoly p, const Rational& c) { return p *= c; }
  friend ExactPoly operator*(const Rational& c, ExactPoly p) { return p *= c; }

  bool operator==(const ExactPoly&) const = default;

  // e.g. "1 - 4*x + 2*x^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline ExactPoly scale(const ExactPoly& p, const Rational& c) { return p * c; }
inline Rational evaluate(const ExactPoly& p, const Rational& x) { return p(x); }

// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& num, const ExactPoly& den);

}  // namespace parabolic
