#pragma once

/**
 * @file special_polys.hpp
 * @brief Rook polynomials of rectangular boards and generalized Laguerre polynomials.
 *
 * Laguerre polynomials come from the explicit sum
 *
 *     L_n^a(x) = sum_{i=0}^{n} (-1)^i C(n+a, n-i) x^i / i!
 *
 * rather than from the Rodrigues form (1/n!) e^x x^-a D^n (e^-x x^(n+a)).
 * The two agree by Leibniz' rule: D^n (e^-x u) = e^-x sum_i C(n,i) (-1)^i D^(n-i) u
 * with u = x^(n+a), and D^(n-i) u = (n+a)!/(a+i)! x^(a+i).  Written out for small n:
 *
 *     n = 0:  1
 *     n = 1:  D(e^-x x^(1+a)) = e^-x ((1+a) x^a - x^(1+a))          ->  (1+a) - x
 *     n = 2:  e^-x (u'' - 2u' + u) / 2                               ->  C(2+a,2) - (2+a) x + x^2/2
 *     n = 3:  e^-x (u''' - 3u'' + 3u' - u) / 6                       ->  C(3+a,3) - C(3+a,2) x + (3+a) x^2/2 - x^3/6
 *
 * which is the explicit sum term by term.  The three-term recurrence is
 * checked in the tests as an independent consistency check.
 */

#include "parabolic/exact_poly.hpp"

namespace parabolic {

// R_{s,t}(x) = sum_j j! C(s,j) C(t,j) x^j; symmetric in (s, t).  Negative sizes throw.
ExactPoly rook_poly(int s, int t);

// L_n^alpha for n >= 0 and alpha >= -n.
ExactPoly laguerre_poly(int n, int alpha);

// R_{s,t}(x) == s! x^s L_s^{t-s}(-1/x), compared coefficient by coefficient.
// Requires 0 <= s <= t (throws otherwise; callers swap).
bool check_rook_laguerre(int s, int t);

// x^n * n! * L_n^alpha(c / x) as a polynomial: the Laguerre coefficients
// reversed and scaled by n! c^i.  With c = -1 this is R_{n, n+alpha}(x).
ExactPoly reciprocal_laguerre(int n, int alpha, const Rational& c);

}  // namespace parabolic
