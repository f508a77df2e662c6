#include "parabolic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parabolic/series.hpp"
#include "parabolic/special_polys.hpp"

namespace parabolic {

namespace {

int sign_changes(const std::vector<ExactPoly>& sturm, const Rational& x) {
  int changes = 0;
  int previous = 0;
  for (const auto& p : sturm) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

std::vector<ExactPoly> sturm_sequence(const ExactPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
  std::vector<ExactPoly> seq{p};
  ExactPoly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).second;
  }
  return seq;
}

int count_roots(const std::vector<ExactPoly>& sturm, const Rational& lo, const Rational& hi) {
  return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

double il_bound(int l, int m) {
  if (l < 1 || m < 1) throw std::invalid_argument("il_bound: need l, m >= 1");
  return (l + m - 2) + std::sqrt(1.0 + 4.0 * (l - 1) * (m - 1));
}

RationalInterval max_laguerre_root(int lam, int alpha, const Rational& tol) {
  if (lam < 1) throw std::invalid_argument("max_laguerre_root: degree 0 has no root");
  if (alpha < 0) throw std::invalid_argument("max_laguerre_root: need alpha >= 0");
  if (sgn(tol) <= 0) throw std::invalid_argument("max_laguerre_root: tolerance must be positive");

  const ExactPoly p = laguerre_poly(lam, alpha);
  if (lam == 1) {
    const Rational root = -p.coeff(0) / p.coeff(1);
    return {root, root};
  }

  const auto sturm = sturm_sequence(p);
  Rational lo = 0;
  Rational hi = static_cast<long>(std::ceil(il_bound(lam, lam + alpha))) + 1;
  if (count_roots(sturm, lo, hi) != lam)
    throw std::runtime_error("max_laguerre_root: not all roots lie in the initial bracket");

  // Invariant: the largest root lies in (lo, hi].
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    const bool above = count_roots(sturm, mid, hi) > 0;
    if (!above && sgn(p(mid)) == 0) return {mid, mid};
    if (above) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

AsymptoticEstimate growth_estimate(int l, int m, const Rational& tol) {
  const int lambda = std::min(l, m);
  const int mu = std::max(l, m);
  const RationalInterval gamma = max_laguerre_root(lambda, mu - lambda, tol);
  const RationalGF gf = main_theorem_gf(l, m);
  const ExactPoly& den = gf.denominator;

  const Rational r_near = 1 / gamma.hi;
  const Rational r_far = 1 / gamma.lo;
  const bool sign_change = sgn(den(r_near)) * sgn(den(r_far)) <= 0;

  const Rational r = 1 / gamma.midpoint();
  const Rational slope = den.derivative()(r);
  if (std::abs(slope.get_d()) == 0.0) throw std::runtime_error("growth_estimate: dominant pole is not simple");
  const Rational c = -gf.numerator(r) / (r * slope);

  return {gamma.midpoint().get_d(), c.get_d(), gamma, il_bound(l, m), sign_change};
}

}  // namespace parabolic
