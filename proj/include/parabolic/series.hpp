#pragma once

/**
 * @file series.hpp
 * @brief Generating functions for parabolic-coset avoidance and their exact coefficients.
 */

#include <vector>

#include "parabolic/exact_poly.hpp"

namespace parabolic {

/// Coefficients c_0..c_N of a power series truncated after x^N.
struct SeriesPrefix {
  std::vector<Rational> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
  bool operator==(const SeriesPrefix&) const = default;
};

/// numerator / denominator, expandable at 0 when the denominator's constant term is nonzero.
/// No common factors are cancelled.
struct RationalGF {
  ExactPoly numerator;
  ExactPoly denominator;

  bool operator==(const RationalGF&) const = default;
};

// F(x) R_{l,m}(-x) = N(x) with N the polynomial
//   sum_{r<lambda} x^r r! sum_{j<=r} (-1)^j C(l,j) C(m,j) / C(r,j)
//   + (-1)^lambda x^lambda lambda! sum_{r<mu-lambda} x^r r! C(mu-r-1, lambda).
// The result does not depend on the coset shift a.  Throws unless l, m >= 1.
RationalGF main_theorem_gf(int l, int m);

// c_0..c_N from the recurrence d_0 c_n = n_n - sum_{j>=1} d_j c_{n-j}.
// Throws std::domain_error when the denominator vanishes at 0.
SeriesPrefix gf_coefficients(const RationalGF& gf, int N);

// Product of two series truncated at order N.
SeriesPrefix multiply_truncated(const SeriesPrefix& lhs, const SeriesPrefix& rhs, int N);

// The series s with s(0) = 1 and s^2 = p mod x^(N+1), via sum_j C(1/2, j) (p-1)^j.
// Throws std::invalid_argument unless p(0) == 1.
SeriesPrefix sqrt_series(const ExactPoly& p, int N);

// Coefficients through x^N of
//   sum_{r=1}^{k-2} x^r r! + (k-3)!/2 x^(k-4) (1 - (k-1)x - sqrt(1 - 2(k-1)x + (k-3)^2 x^2)),
// the closed form for avoiding P_{1,1,k-2}.  For k = 3 the factor x^-1 is applied as
// formal division by x; the bracket always starts at x^2, so this is exact.
// No low-order correction is made: compare with counts to see where they agree.
SeriesPrefix bdpp_coefficients(int k, int N);

}  // namespace parabolic
