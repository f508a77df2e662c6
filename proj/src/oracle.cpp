#include <algorithm>
#include <stdexcept>
#include <string>

#include "parabolic/avoidance.hpp"
#include "parabolic/counting.hpp"

namespace parabolic {

namespace {

void check_ceiling(int n, int ceiling) {
  if (n > ceiling)
    throw std::out_of_range("brute force refused: n=" + std::to_string(n) + " exceeds ceiling " +
                            std::to_string(ceiling));
}

std::string tuple_string(std::span<const int> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

std::string case_name(const char* what, const AvoidanceClass& cls, int n, int d) {
  return std::string(what) + " l=" + std::to_string(cls.l()) + " m=" + std::to_string(cls.m()) +
         " a=" + std::to_string(cls.a()) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
}

// Odometer over [1, n]^d.
bool next_tuple(std::vector<int>& t, int n) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i] < n) {
      ++t[i];
      return true;
    }
    t[i] = 1;
  }
  return false;
}

}  // namespace

AvoiderTable::AvoiderTable(const AvoidanceClass& cls, int n, int ceiling) : cls_(cls), n_(n) {
  if (n < 0) throw std::invalid_argument("AvoiderTable: negative n");
  check_ceiling(n, ceiling);
  const PatternSet coset = parabolic_coset(cls);
  enumerate_avoiders(n, coset, [&](const Permutation& pi) {
    for (int v : pi.word()) words_.push_back(static_cast<unsigned char>(v));
    ++count_;
  });
}

Integer AvoiderTable::g(std::span<const int> prefix) const {
  if (static_cast<int>(prefix.size()) > n_) throw std::invalid_argument("g: prefix longer than n");
  for (int v : prefix)
    if (v < 1 || v > n_) throw std::invalid_argument("g: prefix entry " + std::to_string(v) + " outside 1.." +
                                                     std::to_string(n_));
  std::size_t hits = 0;
  for (std::size_t row = 0; row < count_; ++row) {
    const unsigned char* w = &words_[row * n_];
    hits += std::equal(prefix.begin(), prefix.end(), w, [](int p, unsigned char v) { return p == v; });
  }
  return Integer(static_cast<unsigned long>(hits));
}

Integer AvoiderTable::box_sum(int lo, int hi, int d) const {
  if (d < 0 || d > n_) throw std::invalid_argument("box_sum: d outside 0..n");
  lo = std::max(lo, 1);
  hi = std::min(hi, n_);
  // Each avoider whose first d entries lie in the box is counted once, by its own prefix.
  std::size_t hits = 0;
  for (std::size_t row = 0; row < count_; ++row) {
    const unsigned char* w = &words_[row * n_];
    hits += std::all_of(w, w + d, [&](unsigned char v) { return v >= lo && v <= hi; });
  }
  return Integer(static_cast<unsigned long>(hits));
}

Integer AvoiderTable::box_sum(BoxKind kind, int d) const {
  if (d < 0 || d > cls_.l()) throw std::invalid_argument("box_sum: d outside 0..l");
  const int a = cls_.a();
  const int b = cls_.b(n_);
  switch (kind) {
    case BoxKind::A: return box_sum(a + 1, b, d);
    case BoxKind::B: return box_sum(a + 1, b + 1, d);
    case BoxKind::C: return box_sum(a, b, d);
  }
  throw std::logic_error("box_sum: unknown kind");
}

const AvoiderTable& OracleCache::table(const AvoidanceClass& cls, int n) {
  auto key = std::make_tuple(cls.l(), cls.m(), cls.a(), n);
  auto it = tables_.find(key);
  if (it == tables_.end()) it = tables_.emplace(key, std::make_unique<AvoiderTable>(cls, n, ceiling_)).first;
  return *it->second;
}

Integer OracleCache::sum(BoxKind kind, const AvoidanceClass& cls, int n, int d) {
  return table(cls, n).box_sum(kind, d);
}

namespace {

// The box sums are only defined when {a+1,...,a+l} does not wrap past k; a
// class with a > m is the mirror of (m, l, k-a), which does satisfy this.
void require_unwrapped(const AvoidanceClass& cls, const char* who) {
  if (cls.a() > cls.m())
    throw std::invalid_argument(std::string(who) + ": need a <= m (use the mirrored class (m, l, k-a))");
}

}  // namespace

Integer g_oracle(const PrefixSpec& spec, int ceiling) {
  check_ceiling(spec.n, ceiling);
  return enumerate_avoiders(spec.n, parabolic_coset(spec.cls), spec.prefix, AvoiderVisitor{});
}

Integer sum_oracle(BoxKind kind, const AvoidanceClass& cls, int n, int d, int ceiling) {
  return AvoiderTable(cls, n, ceiling).box_sum(kind, d);
}

SumTable build_sum_table(BoxKind kind, const AvoidanceClass& cls, int n_min, int n_max, OracleCache& cache) {
  SumTable out{kind, cls, {}};
  for (int n = n_min; n <= n_max; ++n)
    for (int d = 0; d <= cls.l(); ++d) out.values[{n, d}] = cache.sum(kind, cls, n, d);
  return out;
}

VerificationReport verify_lemma22(const AvoidanceClass& cls, int n, OracleCache& cache) {
  if (n < cls.k()) throw std::invalid_argument("verify_lemma22: need n >= k");
  require_unwrapped(cls, "verify_lemma22");
  const AvoiderTable& here = cache.table(cls, n);
  const AvoiderTable& below = cache.table(cls, n - 1);
  const int a = cls.a();
  const int b = cls.b(n);
  auto in_box = [&](int v) { return v >= a + 1 && v <= b; };

  VerificationReport report;
  for (int d = 1; d <= cls.l(); ++d) {
    std::vector<int> t(static_cast<std::size_t>(d), 1);
    do {
      const std::string where = " n=" + std::to_string(n) + " prefix=" + tuple_string(t);
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        report.add("repeated entry vanishes" + where, here.g(t), Integer(0));
      if (d == cls.l() && std::all_of(t.begin(), t.end(), in_box))
        report.add("full box prefix vanishes" + where, here.g(t), Integer(0));

      for (int r = 0; r < d; ++r) {
        bool others_in_box = true;
        for (int j = 0; j < d; ++j) others_in_box &= j == r || in_box(t[j]);
        if (!others_in_box || in_box(t[r])) continue;
        std::vector<int> reduced;
        const bool low = t[r] <= a;
        for (int j = 0; j < d; ++j)
          if (j != r) reduced.push_back(low ? t[j] - 1 : t[j]);
        report.add(std::string(low ? "drop low entry" : "drop high entry") + where + " r=" + std::to_string(r + 1),
                   here.g(t), below.g(reduced));
      }
    } while (next_tuple(t, n));
  }
  return report;
}

VerificationReport verify_theorem23(const AvoidanceClass& cls, int n, int d, OracleCache& cache) {
  require_unwrapped(cls, "verify_theorem23");
  if (n < cls.k() + 1 || d < 1 || d > cls.l() - 1)
    throw std::invalid_argument("verify_theorem23: need n >= k+1 and 1 <= d <= l-1");
  auto A = [&](int nn, int dd) { return cache.sum(BoxKind::A, cls, nn, dd); };
  Integer rhs = A(n, d) - (cls.m() - d) * A(n - 1, d) - d * A(n - 1, d - 1);
  VerificationReport report;
  report.add(case_name("A recurrence", cls, n, d), A(n, d + 1), rhs);
  return report;
}

VerificationReport verify_theorem23(const AvoidanceClass& cls, int n, int d) {
  OracleCache cache;
  return verify_theorem23(cls, n, d, cache);
}

VerificationReport verify_lemma24(const AvoidanceClass& cls, int n, int d, OracleCache& cache) {
  require_unwrapped(cls, "verify_lemma24");
  if (n < cls.k() || d < 1 || d > cls.l()) throw std::invalid_argument("verify_lemma24: need n >= k and 1 <= d <= l");
  auto S = [&](BoxKind kind, int nn, int dd) { return cache.sum(kind, cls, nn, dd); };
  const int m = cls.m();
  const int a = cls.a();
  const BoxKind A = BoxKind::A, B = BoxKind::B, C = BoxKind::C;
  VerificationReport report;
  report.add(case_name("A step", cls, n, d), S(A, n, d),
             Integer(S(A, n, d - 1) - (m - a) * S(B, n - 1, d - 1) - a * S(C, n - 1, d - 1)));
  report.add(case_name("B shift", cls, n, d), Integer((m - a) * S(A, n, d)),
             Integer((m - a) * S(B, n, d) - (m - a) * d * S(B, n - 1, d - 1)));
  report.add(case_name("C shift", cls, n, d), Integer(a * S(A, n, d)),
             Integer(a * S(C, n, d) - a * d * S(C, n - 1, d - 1)));
  return report;
}

VerificationReport verify_lemma24(const AvoidanceClass& cls, int n, int d) {
  OracleCache cache;
  return verify_lemma24(cls, n, d, cache);
}

VerificationReport verify_theorem25(const AvoidanceClass& cls, int n, int d, OracleCache& cache) {
  require_unwrapped(cls, "verify_theorem25");
  if (n < cls.k() || d < 0 || d > cls.l()) throw std::invalid_argument("verify_theorem25: need n >= k and 0 <= d <= l");
  std::vector<Integer> f(static_cast<std::size_t>(n) + 1);
  for (int j = n - d; j <= n; ++j) f[j] = cache.f(cls, j);
  VerificationReport report;
  report.add(case_name("A alternating sum", cls, n, d), cache.sum(BoxKind::A, cls, n, d),
             theorem25_formula(cls, n, d, f));
  return report;
}

VerificationReport verify_boundary(const AvoidanceClass& cls, int d, OracleCache& cache) {
  require_unwrapped(cls, "verify_boundary");
  if (d < 1 || d > cls.l()) throw std::invalid_argument("verify_boundary: need 1 <= d <= l");
  VerificationReport report;
  report.add(case_name("A(k,d) closed form", cls, cls.k(), d), cache.sum(BoxKind::A, cls, cls.k(), d),
             boundary_value(cls, d));
  return report;
}

}  // namespace parabolic
