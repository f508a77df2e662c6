#include <chrono>

#include "doctest.h"
#include "parabolic/avoidance.hpp"
#include "parabolic/counting.hpp"

using namespace parabolic;

TEST_CASE("fast recurrence values") {
  CHECK(f_fast(1, 2, 5) == 16);
  CHECK(f_fast(2, 2, 4) == 20);
  CHECK(f_fast(2, 2, 6) == 232);
  CHECK(f_fast(1, 1, 7) == 1);
  CHECK(f_fast(2, 2, 0) == 1);
  CHECK_THROWS_AS(f_fast(0, 2, 3), std::invalid_argument);
}

TEST_CASE("fast recurrence agrees with brute force for every shift") {
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l < k; ++l) {
      const auto fast = f_fast_sequence(l, k - l, 9);
      for (int a = 0; a < k; ++a) {
        const PatternSet coset = parabolic_coset(AvoidanceClass(l, k - l, a));
        for (int n = 0; n <= 9; ++n) CHECK(fast[n] == count_avoiders(n, coset));
      }
    }
}

TEST_CASE("closed form for l = 1") {
  CHECK(corollary11(3, 5) == 16);
  CHECK(corollary11(4, 4) == 18);
  CHECK(corollary11(5, 3) == 6);
  for (int k = 2; k <= 6; ++k)
    for (int n = 0; n <= 20; ++n) CHECK(corollary11(k, n) == f_fast(1, k - 1, n));
}

TEST_CASE("g oracle") {
  const AvoidanceClass cls(2, 2, 0);
  CHECK(g_oracle({cls, 5, {3, 3}}) == 0);
  // a+1 <= i_j <= b with b = n - m + a = 2
  CHECK(g_oracle({cls, 4, {2, 1}}) == 0);
  CHECK(g_oracle({AvoidanceClass(2, 2, 1), 4, {2, 3}}) == 0);
  CHECK(g_oracle({cls, 6, {}}) == f_fast(2, 2, 6));
  CHECK_THROWS_AS(g_oracle({cls, 4, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(g_oracle({cls, 13, {}}), std::out_of_range);
  CHECK(g_oracle({AvoidanceClass(1, 1, 0), 13, {}}, 13) == 1);
}

TEST_CASE("box sums through the table equal sums of g over the box") {
  for (int a = 0; a <= 2; ++a) {
    const AvoidanceClass cls(2, 2, a);
    const int n = 6;
    AvoiderTable table(cls, n);
    const int b = cls.b(n);
    for (BoxKind kind : {BoxKind::A, BoxKind::B, BoxKind::C}) {
      const int lo = kind == BoxKind::C ? a : a + 1;
      const int hi = kind == BoxKind::B ? b + 1 : b;
      Integer by_g = 0;
      for (int i = lo; i <= hi; ++i)
        for (int j = lo; j <= hi; ++j) {
          if (i < 1 || j < 1 || i > n || j > n) continue;
          by_g += g_oracle({cls, n, {i, j}});
        }
      CHECK(table.box_sum(kind, 2) == by_g);
      CHECK(sum_oracle(kind, cls, n, 2) == by_g);
      CHECK(table.box_sum(kind, 0) == f_fast(2, 2, n));
    }
  }
}

TEST_CASE("boundary sums") {
  OracleCache cache;
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l < k; ++l)
      for (int a = 0; a <= k - l; ++a) {
        const AvoidanceClass cls(l, k - l, a);
        CHECK(sum_oracle(BoxKind::A, cls, 7, 0) == f_fast(l, k - l, 7));
        for (int d = 1; d <= l; ++d) {
          CHECK(cache.sum(BoxKind::A, cls, k, d) == boundary_value(cls, d));
          CHECK(verify_boundary(cls, d, cache));
        }
        for (int n = k; n <= 8; ++n) CHECK(cache.sum(BoxKind::A, cls, n, l) == 0);
      }
}

TEST_CASE("alternating-sum formula") {
  const AvoidanceClass cls(2, 2, 0);
  const auto f = f_fast_sequence(2, 2, 6);
  CHECK(theorem25_formula(cls, 5, 0, f) == f[5]);
  CHECK(theorem25_formula(cls, 5, 1, f) == f[5] - 2 * f[4]);
  CHECK(theorem25_formula(cls, 5, 2, f) == 0);
  CHECK(f[5] == 68);
  CHECK_THROWS_AS(theorem25_formula(cls, 7, 1, f), std::invalid_argument);
}

TEST_CASE("alternating-sum formula matches oracle box sums") {
  OracleCache cache;
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l < k; ++l)
      for (int a = 0; a <= k - l; ++a) {
        const AvoidanceClass cls(l, k - l, a);
        for (int n = k; n <= 8; ++n)
          for (int d = 0; d <= l; ++d) CHECK(verify_theorem25(cls, n, d, cache));
      }
}

TEST_CASE("shifts past m are rejected and covered by the mirrored class") {
  OracleCache cache;
  const AvoidanceClass wrapped(2, 1, 2);
  CHECK_THROWS_AS(verify_theorem25(wrapped, 4, 1, cache), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem23(wrapped, 5, 1, cache), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma24(wrapped, 4, 1, cache), std::invalid_argument);
  CHECK_THROWS_AS(verify_boundary(wrapped, 1, cache), std::invalid_argument);
  const AvoidanceClass mirror(1, 2, 1);
  for (int n = 0; n <= 8; ++n) CHECK(cache.f(wrapped, n) == cache.f(mirror, n));
  for (int n = 3; n <= 8; ++n) CHECK(verify_theorem25(mirror, n, 1, cache));
}

TEST_CASE("A recurrence on oracle values") {
  CHECK(verify_theorem23(AvoidanceClass(2, 2, 0), 5, 1));
  CHECK(verify_theorem23(AvoidanceClass(3, 2, 1), 6, 1));
  CHECK(verify_theorem23(AvoidanceClass(3, 2, 0), 6, 2));
  CHECK_THROWS_AS(verify_theorem23(AvoidanceClass(2, 2, 0), 4, 1), std::invalid_argument);
}

TEST_CASE("A, B, C identities on oracle values") {
  const auto r1 = verify_lemma24(AvoidanceClass(2, 2, 0), 4, 1);
  CHECK(r1);
  CHECK(r1.checks.size() == 3);
  CHECK(r1.checks[2].lhs == "0");
  const auto r2 = verify_lemma24(AvoidanceClass(2, 2, 2), 5, 2);
  CHECK(r2);
  CHECK(r2.checks[1].lhs == "0");
  CHECK(verify_lemma24(AvoidanceClass(2, 3, 1), 5, 1));
}

TEST_CASE("prefix vanishing and reduction") {
  OracleCache cache;
  for (int k = 2; k <= 4; ++k)
    for (int l = 1; l < k; ++l)
      for (int a = 0; a <= k - l; ++a)
        for (int n = k; n <= 7; ++n) {
          const auto report = verify_lemma22(AvoidanceClass(l, k - l, a), n, cache);
          CHECK(report);
          CHECK(!report.checks.empty());
        }
  CHECK_THROWS_AS(verify_lemma22(AvoidanceClass(2, 1, 2), 5, cache), std::invalid_argument);
}

TEST_CASE("alternating factorial sum reduction") {
  for (int k = 2; k <= 10; ++k)
    for (int l = 1; l < k; ++l)
      for (int d = 1; d <= l; ++d) CHECK(verify_boundary_reduction(l, k - l, d));
}

TEST_CASE("hypergeometric sum and its closed form") {
  CHECK(M_direct(1, 1, 2) == Rational(1, 2));
  CHECK(M_closed(1, 1, 2) == Rational(1, 2));
  CHECK(M_direct(1, 2, 2) == 0);
  CHECK(M_closed(1, 2, 2) == 0);
  CHECK(M_direct(2, 3, 2) == 1);
  CHECK(M_closed(2, 3, 2) == 1);
  CHECK_THROWS_AS(M_direct(3, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(M_closed(3, 2, 5), std::invalid_argument);
  for (int t = 1; t <= 8; ++t)
    for (int s = 1; s <= t; ++s)
      for (int n = s; n <= 2 * (s + t); ++n) CHECK(M_direct(s, t, n) == M_closed(s, t, n));
}

TEST_CASE("recurrence is fast at large n") {
  const auto start = std::chrono::steady_clock::now();
  const Integer big = f_fast(3, 3, 1000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 1.0);
  CHECK(big > 0);
  CHECK(big.get_str().size() > 500);
}
