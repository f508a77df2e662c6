#include <cmath>

#include "doctest.h"
#include "parabolic/asymptotics.hpp"
#include "parabolic/counting.hpp"
#include "parabolic/series.hpp"
#include "parabolic/special_polys.hpp"

using namespace parabolic;

namespace {

const Rational kTol(1, 1000000000);

double ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q.get_d();
}

}  // namespace

TEST_CASE("Sturm counts") {
  // (x-1)(x-2)(x-3)
  const ExactPoly p = ExactPoly{-1, 1} * ExactPoly{-2, 1} * ExactPoly{-3, 1};
  const auto seq = sturm_sequence(p);
  CHECK(count_roots(seq, Rational(0), Rational(10)) == 3);
  CHECK(count_roots(seq, Rational(3, 2), Rational(10)) == 2);
  CHECK(count_roots(seq, Rational(1), Rational(2)) == 1);
  CHECK(count_roots(seq, Rational(4), Rational(10)) == 0);
}

TEST_CASE("largest Laguerre root") {
  for (int k = 2; k <= 8; ++k) {
    const auto root = max_laguerre_root(1, k - 2, kTol);
    CHECK(root.lo == k - 1);
    CHECK(root.hi == k - 1);
  }
  const auto r20 = max_laguerre_root(2, 0, kTol);
  CHECK(r20.width() <= kTol);
  CHECK(r20.lo.get_d() <= 2 + std::sqrt(2.0) + 1e-12);
  CHECK(r20.hi.get_d() >= 2 + std::sqrt(2.0) - 1e-12);
  const auto r21 = max_laguerre_root(2, 1, kTol);
  CHECK(std::abs(r21.midpoint().get_d() - (3 + std::sqrt(3.0))) < 1e-9);
  CHECK_THROWS_AS(max_laguerre_root(0, 1, kTol), std::invalid_argument);
  CHECK_THROWS_AS(max_laguerre_root(2, 1, Rational(0)), std::invalid_argument);
}

TEST_CASE("upper bound") {
  CHECK(il_bound(2, 2) == doctest::Approx(2 + std::sqrt(5.0)));
  for (int m = 1; m <= 8; ++m) CHECK(il_bound(1, m) == doctest::Approx(m));
  CHECK(il_bound(3, 3) == doctest::Approx(4 + std::sqrt(17.0)));
  for (int l = 1; l <= 8; ++l)
    for (int m = 1; m <= 8; ++m) {
      const int lambda = std::min(l, m), mu = std::max(l, m);
      CHECK(max_laguerre_root(lambda, mu - lambda, kTol).midpoint().get_d() <= il_bound(l, m) + 1e-9);
    }
}

TEST_CASE("denominator roots are reciprocal Laguerre roots") {
  for (int l = 1; l <= 6; ++l)
    for (int m = 1; m <= 6; ++m) {
      const auto est = growth_estimate(l, m, kTol);
      CHECK(est.denominator_sign_change);
      // No root of the denominator is closer to 0 than 1/gamma; an exact
      // (degree-one) interval puts the root itself at 1/hi.
      const ExactPoly den = main_theorem_gf(l, m).denominator;
      const auto seq = sturm_sequence(den);
      const Rational near = 1 / est.gamma_interval.hi;
      CHECK(count_roots(seq, Rational(0), near) == (sgn(den(near)) == 0 ? 1 : 0));
    }
}

TEST_CASE("growth estimates") {
  const auto e13 = growth_estimate(1, 3, kTol);
  CHECK(e13.gamma == doctest::Approx(3.0));
  CHECK(e13.c == doctest::Approx(2.0 / 9.0));
  const auto e11 = growth_estimate(1, 1, kTol);
  CHECK(e11.gamma == doctest::Approx(1.0));
  CHECK(e11.c == doctest::Approx(1.0));
  const auto e22 = growth_estimate(2, 2, kTol);
  CHECK(std::abs(e22.gamma - (2 + std::sqrt(2.0))) < 1e-9);
  CHECK(e22.gamma <= e22.il_bound);
}

TEST_CASE("successive ratios approach the growth rate") {
  for (auto [l, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto f = f_fast_sequence(l, m, 40);
    const auto est = growth_estimate(l, m, kTol);
    CHECK(std::abs(ratio(f[40], f[39]) - est.gamma) < 1e-3);
  }
  const auto est = growth_estimate(2, 2, kTol);
  const double predicted = est.c * std::pow(est.gamma, 40);
  CHECK(std::abs(f_fast(2, 2, 40).get_d() - predicted) / predicted < 1e-3);
}
