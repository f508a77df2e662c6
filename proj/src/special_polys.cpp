#include "parabolic/special_polys.hpp"

#include <stdexcept>
#include <string>

namespace parabolic {

ExactPoly rook_poly(int s, int t) {
  if (s < 0 || t < 0)
    throw std::invalid_argument("rook_poly: negative board size (" + std::to_string(s) + ", " + std::to_string(t) + ")");
  const int small = s < t ? s : t;
  std::vector<Rational> coeffs;
  for (int j = 0; j <= small; ++j) coeffs.emplace_back(factorial(j) * binomial(s, j) * binomial(t, j));
  return ExactPoly(std::move(coeffs));
}

ExactPoly laguerre_poly(int n, int alpha) {
  if (n < 0) throw std::invalid_argument("laguerre_poly: negative degree");
  if (alpha < -n) throw std::invalid_argument("laguerre_poly: alpha below -n");
  std::vector<Rational> coeffs;
  for (int i = 0; i <= n; ++i) {
    Rational c(binomial(n + alpha, n - i), factorial(i));
    c.canonicalize();
    coeffs.push_back(i % 2 ? Rational(-c) : c);
  }
  return ExactPoly(std::move(coeffs));
}

ExactPoly reciprocal_laguerre(int n, int alpha, const Rational& c) {
  const ExactPoly lag = laguerre_poly(n, alpha);
  const Integer nf = factorial(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  Rational c_power = 1;
  for (int i = 0; i <= n; ++i) {
    coeffs[n - i] = lag.coeff(i) * nf * c_power;
    c_power *= c;
  }
  return ExactPoly(std::move(coeffs));
}

bool check_rook_laguerre(int s, int t) {
  if (s < 0 || s > t)
    throw std::invalid_argument("check_rook_laguerre: need 0 <= s <= t, got (" + std::to_string(s) + ", " +
                                std::to_string(t) + ")");
  return rook_poly(s, t) == reciprocal_laguerre(s, t - s, Rational(-1));
}

}  // namespace parabolic
