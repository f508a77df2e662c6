#include "parabolic/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parabolic/special_polys.hpp"

namespace parabolic {

RationalGF main_theorem_gf(int l, int m) {
  if (l < 1 || m < 1)
    throw std::invalid_argument("main_theorem_gf: need l, m >= 1, got (" + std::to_string(l) + ", " +
                                std::to_string(m) + ")");
  const int lambda = std::min(l, m);
  const int mu = std::max(l, m);

  std::vector<Rational> num(static_cast<std::size_t>(mu));
  for (int r = 0; r < lambda; ++r) {
    Rational inner = 0;
    for (int j = 0; j <= r; ++j) {
      Rational term(binomial(l, j) * binomial(m, j), binomial(r, j));
      term.canonicalize();
      inner += j % 2 ? Rational(-term) : term;
    }
    num[r] = inner * factorial(r);
  }
  const Integer sign_lambda_fact = (lambda % 2 ? -1 : 1) * factorial(lambda);
  for (int r = 0; r < mu - lambda; ++r) num[lambda + r] = sign_lambda_fact * factorial(r) * binomial(mu - r - 1, lambda);

  return {ExactPoly(std::move(num)), rook_poly(lambda, mu).negated_argument()};
}

SeriesPrefix gf_coefficients(const RationalGF& gf, int N) {
  if (N < 0) throw std::invalid_argument("gf_coefficients: negative order");
  const Rational d0 = gf.denominator.coeff(0);
  if (sgn(d0) == 0) throw std::domain_error("gf_coefficients: denominator vanishes at 0, no power series");
  const int dd = gf.denominator.degree();
  SeriesPrefix out;
  out.coeffs.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    Rational c = gf.numerator.coeff(n);
    for (int j = 1; j <= std::min(n, dd); ++j) c -= gf.denominator.coeff(j) * out.coeffs[n - j];
    out.coeffs.push_back(c / d0);
  }
  return out;
}

SeriesPrefix multiply_truncated(const SeriesPrefix& lhs, const SeriesPrefix& rhs, int N) {
  SeriesPrefix out;
  out.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  for (int i = 0; i <= std::min(N, lhs.order()); ++i) {
    if (sgn(lhs.coeffs[i]) == 0) continue;
    for (int j = 0; j <= std::min(N - i, rhs.order()); ++j) out.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
  }
  return out;
}

SeriesPrefix sqrt_series(const ExactPoly& p, int N) {
  if (N < 0) throw std::invalid_argument("sqrt_series: negative order");
  if (p.coeff(0) != 1) throw std::invalid_argument("sqrt_series: constant term must be 1, got " + to_string(p.coeff(0)));

  SeriesPrefix u;
  u.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  for (int i = 1; i <= std::min(N, p.degree()); ++i) u.coeffs[i] = p.coeff(i);

  SeriesPrefix out;
  out.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  SeriesPrefix u_power;
  u_power.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  u_power.coeffs[0] = 1;
  const Rational half(1, 2);
  // u has no constant term, so u^j contributes nothing below x^j.
  for (int j = 0; j <= N; ++j) {
    const Rational weight = binomial(half, j);
    for (int i = j; i <= N; ++i) out.coeffs[i] += weight * u_power.coeffs[i];
    u_power = multiply_truncated(u_power, u, N);
  }
  return out;
}

SeriesPrefix bdpp_coefficients(int k, int N) {
  if (k < 3) throw std::invalid_argument("bdpp_coefficients: need k >= 3, got " + std::to_string(k));
  if (N < 0) throw std::invalid_argument("bdpp_coefficients: negative order");

  const int shift = k - 4;
  const int inner_order = N - shift;  // highest bracket coefficient that lands at or below x^N
  SeriesPrefix out;
  out.coeffs.assign(static_cast<std::size_t>(N) + 1, Rational(0));
  for (int r = 1; r <= std::min(k - 2, N); ++r) out.coeffs[r] = factorial(r);
  if (inner_order < 0) return out;

  const ExactPoly radicand{Rational(1), Rational(-2 * (k - 1)), Rational((k - 3) * (k - 3))};
  const SeriesPrefix root = sqrt_series(radicand, inner_order);
  std::vector<Rational> bracket(static_cast<std::size_t>(inner_order) + 1);
  for (int i = 0; i <= inner_order; ++i) {
    Rational linear = i == 0 ? Rational(1) : i == 1 ? Rational(-(k - 1)) : Rational(0);
    bracket[i] = linear - root.coeffs[i];
  }
  // bracket = O(x^2): its x^0 and x^1 terms cancel identically.
  const Rational prefactor = Rational(factorial(k - 3)) / 2;
  for (int i = 0; i <= inner_order; ++i) {
    const int n = i + shift;
    if (n < 0) {
      if (sgn(bracket[i]) != 0) throw std::logic_error("bdpp_coefficients: nonzero coefficient at negative order");
      continue;
    }
    out.coeffs[n] += prefactor * bracket[i];
  }
  return out;
}

}  // namespace parabolic
