#include "doctest.h"
#include "oracles.hpp"
#include "parabolic/special_polys.hpp"

using namespace parabolic;

TEST_CASE("rook polynomial values") {
  CHECK(rook_poly(1, 3) == ExactPoly{1, 3});
  CHECK(rook_poly(2, 2) == ExactPoly{1, 4, 2});
  CHECK(rook_poly(0, 5) == ExactPoly{1});
  CHECK_THROWS_AS(rook_poly(-1, 2), std::invalid_argument);
}

TEST_CASE("rook polynomial is symmetric in the board sides") {
  for (int s = 0; s <= 8; ++s)
    for (int t = 0; t <= 8; ++t) CHECK(rook_poly(s, t) == rook_poly(t, s));
}

TEST_CASE("rook coefficients count non-attacking placements") {
  for (int s = 0; s <= 5; ++s)
    for (int t = 0; t <= 5; ++t) {
      const ExactPoly r = rook_poly(s, t);
      for (int j = 0; j <= std::min(s, t) + 1; ++j) {
        CAPTURE(s);
        CAPTURE(t);
        CAPTURE(j);
        CHECK(r.coeff(j) == Rational(static_cast<unsigned long>(oracle::rook_placements(s, t, j))));
      }
    }
}

TEST_CASE("Laguerre polynomial values") {
  for (int alpha = 0; alpha <= 5; ++alpha) CHECK(laguerre_poly(1, alpha) == ExactPoly{1 + alpha, -1});
  CHECK(laguerre_poly(2, 0) == ExactPoly{1, -2, Rational(1, 2)});
  CHECK(laguerre_poly(0, 7) == ExactPoly{1});
  CHECK(laguerre_poly(2, 1) == ExactPoly{3, -3, Rational(1, 2)});
  for (int n = 0; n <= 8; ++n) {
    Rational lead(n % 2 ? -1 : 1);
    lead /= factorial(n);
    CHECK(laguerre_poly(n, 3).leading() == lead);
  }
}

TEST_CASE("three-term Laguerre recurrence") {
  for (int alpha = 0; alpha <= 6; ++alpha)
    for (int n = 1; n <= 8; ++n) {
      const ExactPoly lhs = laguerre_poly(n + 1, alpha) * Rational(n + 1);
      const ExactPoly rhs = ExactPoly{2 * n + 1 + alpha, -1} * laguerre_poly(n, alpha) -
                            laguerre_poly(n - 1, alpha) * Rational(n + alpha);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rook polynomials are reversed Laguerre polynomials") {
  CHECK(check_rook_laguerre(1, 3));
  CHECK(check_rook_laguerre(2, 2));
  CHECK(check_rook_laguerre(0, 0));
  for (int t = 0; t <= 8; ++t)
    for (int s = 0; s <= t; ++s) CHECK(check_rook_laguerre(s, t));
  CHECK_THROWS_AS(check_rook_laguerre(3, 2), std::invalid_argument);
}
