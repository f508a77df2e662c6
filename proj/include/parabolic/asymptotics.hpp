#pragma once

// Growth rate of f_{l,m}(n): the largest root of L_lambda^{mu-lambda}, isolated
// by bisection on exact Sturm counts, and the dominant-pole constant.

#include <vector>

#include "parabolic/exact_poly.hpp"

namespace parabolic {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// p, p', then negated remainders; p must be nonzero.
std::vector<ExactPoly> sturm_sequence(const ExactPoly& p);
// Number of distinct real roots of p in (lo, hi].
int count_roots(const std::vector<ExactPoly>& sturm, const Rational& lo, const Rational& hi);

// Upper bound k - 2 + sqrt(1 + 4(l-1)(m-1)) on the growth rate.
double il_bound(int l, int m);

// Interval of width <= tol holding the largest root of L_lam^alpha, searched in
// (0, ceil(il_bound) + 1].  Throws std::invalid_argument for lam < 1 or tol <= 0.
RationalInterval max_laguerre_root(int lam, int alpha, const Rational& tol);

struct AsymptoticEstimate {
  double gamma;
  double c;
  RationalInterval gamma_interval;
  double il_bound;
  // R_{lambda,mu}(-x) changes sign (or vanishes) between 1/hi and 1/lo.
  bool denominator_sign_change;
};

// f(n) ~ c gamma^n.  With F = N/D and r = 1/gamma the smallest positive root of D,
// c = -N(r) / (r D'(r)).
AsymptoticEstimate growth_estimate(int l, int m, const Rational& tol);

}  // namespace parabolic
