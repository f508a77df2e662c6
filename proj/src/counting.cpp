#include "parabolic/counting.hpp"

#include <stdexcept>

namespace parabolic {

std::vector<Integer> f_fast_sequence(int l, int m, int N) {
  if (l < 1 || m < 1) throw std::invalid_argument("f_fast: need l, m >= 1");
  if (N < 0) throw std::invalid_argument("f_fast: negative n");
  const int k = l + m;
  // f(n) = sum_{j=1}^{l} weight[j] f(n-j) for n > k
  std::vector<Integer> weight(static_cast<std::size_t>(l) + 1);
  for (int j = 1; j <= l; ++j) {
    weight[j] = factorial(j) * binomial(m, j) * binomial(l, j);
    if (j % 2 == 0) weight[j] = -weight[j];
  }
  std::vector<Integer> f;
  f.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    if (n < k) {
      f.push_back(factorial(n));
    } else if (n == k) {
      f.push_back(factorial(k) - factorial(l) * factorial(m));
    } else {
      Integer next = 0;
      for (int j = 1; j <= l; ++j) next += weight[j] * f[n - j];
      f.push_back(std::move(next));
    }
  }
  return f;
}

Integer f_fast(int l, int m, int n) { return f_fast_sequence(l, m, n).back(); }

Integer corollary11(int k, int n) {
  if (k < 2) throw std::invalid_argument("corollary11: need k >= 2");
  if (n < 0) throw std::invalid_argument("corollary11: negative n");
  if (n < k) return factorial(n);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(n + 2 - k));
  return factorial(k - 2) * power;
}

char to_char(BoxKind kind) {
  switch (kind) {
    case BoxKind::A: return 'A';
    case BoxKind::B: return 'B';
    case BoxKind::C: return 'C';
  }
  return '?';
}

Integer theorem25_formula(const AvoidanceClass& cls, int n, int d, std::span<const Integer> f_values) {
  if (d < 0 || d > cls.l()) throw std::invalid_argument("theorem25_formula: d outside 0..l");
  if (n - d < 0 || static_cast<int>(f_values.size()) <= n)
    throw std::invalid_argument("theorem25_formula: f(" + std::to_string(n - d) + ")..f(" + std::to_string(n) +
                                ") not supplied");
  Integer total = 0;
  for (int j = 0; j <= d; ++j) {
    Integer term = factorial(j) * binomial(cls.m(), j) * binomial(d, j) * f_values[n - j];
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

Integer boundary_value(const AvoidanceClass& cls, int d) {
  return factorial(d) * binomial(cls.l(), d) * factorial(cls.k() - d) - factorial(cls.l()) * factorial(cls.m());
}

bool VerificationReport::holds() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

void VerificationReport::add(std::string name, const Integer& lhs, const Integer& rhs) {
  checks.push_back({std::move(name), lhs.get_str(), rhs.get_str(), lhs == rhs});
}

void VerificationReport::add(std::string name, const Rational& lhs, const Rational& rhs) {
  checks.push_back({std::move(name), to_string(lhs), to_string(rhs), lhs == rhs});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

VerificationReport verify_boundary_reduction(int l, int m, int d) {
  if (l < 1 || m < 1 || d < 1 || d > l) throw std::invalid_argument("verify_boundary_reduction: need 1 <= d <= l");
  const int k = l + m;
  Integer lhs = 0;
  for (int j = 0; j <= d; ++j) {
    Integer term = factorial(j) * binomial(m, j) * binomial(d, j) * factorial(k - j);
    if (j % 2) {
      lhs -= term;
    } else {
      lhs += term;
    }
  }
  VerificationReport report;
  report.add("alternating (k-j)! sum", lhs, factorial(d) * binomial(l, d) * factorial(k - d));
  return report;
}

namespace {

void check_m_args(int s, int t, int n) {
  if (s < 1 || s > t) throw std::invalid_argument("M: need 1 <= s <= t");
  if (n < s) throw std::invalid_argument("M: n < s makes C(n,i) vanish inside the sum");
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational M_direct(int s, int t, int n) {
  check_m_args(s, t, n);
  Rational total = 0;
  for (int i = 0; i <= s; ++i) {
    Rational term = ratio(binomial(s, i) * binomial(t, i), binomial(n, i));
    total += i % 2 ? Rational(-term) : term;
  }
  return total;
}

Rational M_closed(int s, int t, int n) {
  check_m_args(s, t, n);
  if (n >= s + t) return ratio(binomial(n - t, s), binomial(n, s));
  if (n >= t) return 0;
  Rational value = ratio(binomial(s + t - n - 1, s), binomial(n, s));
  return s % 2 ? Rational(-value) : value;
}

}  // namespace parabolic
