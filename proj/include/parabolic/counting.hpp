#pragma once

/**
 * @file counting.hpp
 * @brief Exact values of f_{l,m}^a(n) and brute-force checks of the identities behind them.
 *
 * Notation: f(n) = |S_n(sigma^a P_{l,m})|, k = l + m, b = n - m + a, and
 * g_n(i_1..i_d) counts avoiders whose first d entries are i_1..i_d.  The box
 * sums add g_n over every index tuple in a cube:
 *
 *     A(n,d): [a+1, b]^d      B(n,d): [a+1, b+1]^d      C(n,d): [a, b]^d
 *
 * with A(n,0) = B(n,0) = C(n,0) = f(n).  Indices outside 1..n contribute 0.
 *
 * The oracles enumerate S_n(T) and refuse n above a ceiling (12 unless
 * overridden) instead of running for hours.
 */

#include <map>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "parabolic/combinatorics.hpp"
#include "parabolic/subgroup.hpp"

namespace parabolic {

inline constexpr int kBruteForceCeiling = 12;

// f_{l,m}(n) from f(r) = r! (r < k), f(k) = k! - l!m! and, for n > k,
//   sum_{j=0}^{l} (-1)^j j! C(m,j) C(l,j) f(n-j) = 0.
Integer f_fast(int l, int m, int n);
// f(0..N) in one pass.
std::vector<Integer> f_fast_sequence(int l, int m, int N);

// (k-2)! (k-1)^(n+2-k) for n >= k, n! below; k >= 2.
Integer corollary11(int k, int n);

struct PrefixSpec {
  AvoidanceClass cls;
  int n;
  std::vector<int> prefix;
};

enum class BoxKind { A, B, C };
char to_char(BoxKind kind);

/// All avoiders of sigma^a P_{l,m} in S_n, held in memory for repeated prefix queries.
class AvoiderTable {
 public:
  AvoiderTable(const AvoidanceClass& cls, int n, int ceiling = kBruteForceCeiling);

  const AvoidanceClass& cls() const noexcept { return cls_; }
  int n() const noexcept { return n_; }
  Integer f() const { return Integer(static_cast<unsigned long>(count_)); }

  // g_n(prefix); entries outside 1..n throw, repeated entries give 0.
  Integer g(std::span<const int> prefix) const;
  // Sum of g over [lo, hi]^d.
  Integer box_sum(int lo, int hi, int d) const;
  Integer box_sum(BoxKind kind, int d) const;

 private:
  AvoidanceClass cls_;
  int n_;
  std::size_t count_ = 0;
  std::vector<unsigned char> words_;  // count_ rows of n_ entries
};

/// AvoiderTables keyed by (l, m, a, n), built on first use.
class OracleCache {
 public:
  explicit OracleCache(int ceiling = kBruteForceCeiling) : ceiling_(ceiling) {}
  const AvoiderTable& table(const AvoidanceClass& cls, int n);
  Integer f(const AvoidanceClass& cls, int n) { return table(cls, n).f(); }
  Integer sum(BoxKind kind, const AvoidanceClass& cls, int n, int d);
  int ceiling() const noexcept { return ceiling_; }

 private:
  int ceiling_;
  std::map<std::tuple<int, int, int, int>, std::unique_ptr<AvoiderTable>> tables_;
};

Integer g_oracle(const PrefixSpec& spec, int ceiling = kBruteForceCeiling);
// Requires 0 <= d <= l.
Integer sum_oracle(BoxKind kind, const AvoidanceClass& cls, int n, int d, int ceiling = kBruteForceCeiling);

/// Box sums for one kind over n in [n_min, n_max], d in [0, l].
struct SumTable {
  BoxKind kind;
  AvoidanceClass cls;
  std::map<std::pair<int, int>, Integer> values;

  const Integer& at(int n, int d) const { return values.at({n, d}); }
};
SumTable build_sum_table(BoxKind kind, const AvoidanceClass& cls, int n_min, int n_max, OracleCache& cache);

// sum_{j=0}^{d} (-1)^j j! C(m,j) C(d,j) f(n-j), with f_values[i] = f(i).
// Throws std::invalid_argument when f(n-d)..f(n) are not all supplied.
Integer theorem25_formula(const AvoidanceClass& cls, int n, int d, std::span<const Integer> f_values);

// d! C(l,d) (k-d)! - l! m!, the value of A(k, d).
Integer boundary_value(const AvoidanceClass& cls, int d);

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds;
};

/// One or more evaluated identities; holds() only if every check does.
struct VerificationReport {
  std::vector<IdentityCheck> checks;

  bool holds() const;
  explicit operator bool() const { return holds(); }
  void add(std::string name, const Integer& lhs, const Integer& rhs);
  void add(std::string name, const Rational& lhs, const Rational& rhs);
  void append(const VerificationReport& other);
};

// g_n vanishing on repeats and on l-tuples inside [a+1,b], and the one-step
// reduction to g_{n-1} when one index leaves the box.  Every prefix of length
// <= l is tried.  Needs n >= k and a <= m.
VerificationReport verify_lemma22(const AvoidanceClass& cls, int n, OracleCache& cache);

// The box-sum verifiers below need a <= m and throw std::invalid_argument
// otherwise; for a > m check the mirrored class (m, l, k-a) instead.

// A(n,d+1) == A(n,d) - (m-d) A(n-1,d) - d A(n-1,d-1); n >= k+1, 1 <= d <= l-1.
VerificationReport verify_theorem23(const AvoidanceClass& cls, int n, int d, OracleCache& cache);
VerificationReport verify_theorem23(const AvoidanceClass& cls, int n, int d);

// The three box-sum identities linking A, B and C; n >= k, 1 <= d <= l.
VerificationReport verify_lemma24(const AvoidanceClass& cls, int n, int d, OracleCache& cache);
VerificationReport verify_lemma24(const AvoidanceClass& cls, int n, int d);

// Oracle A(n,d) against theorem25_formula fed with brute-force f; n >= k, 0 <= d <= l.
VerificationReport verify_theorem25(const AvoidanceClass& cls, int n, int d, OracleCache& cache);

// Oracle A(k,d) against boundary_value; 1 <= d <= l.
VerificationReport verify_boundary(const AvoidanceClass& cls, int d, OracleCache& cache);

// sum_{j=0}^{d} (-1)^j j! C(m,j) C(d,j) (k-j)! == d! C(l,d) (k-d)!, pure arithmetic.
VerificationReport verify_boundary_reduction(int l, int m, int d);

// sum_{i=0}^{s} (-1)^i C(s,i) C(t,i) / C(n,i); needs 1 <= s <= t and n >= s.
Rational M_direct(int s, int t, int n);
// The three-case closed form of the same sum.
Rational M_closed(int s, int t, int n);

}  // namespace parabolic
