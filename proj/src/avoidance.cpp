#include "parabolic/avoidance.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace parabolic {

namespace {

// Lehmer-code rank of a sequence of distinct integers; equal ranks iff order-isomorphic.
std::uint64_t pattern_rank(std::span<const int> values) {
  const std::size_t k = values.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < k; ++j) smaller_after += values[j] < values[i];
    rank = rank * (k - i) + smaller_after;
  }
  return rank;
}

// Membership of order types in a pattern set, keyed by Lehmer rank.
class PatternIndex {
 public:
  explicit PatternIndex(const PatternSet& patterns) : k_(patterns.pattern_length()) {
    if (k_ > 20) throw std::invalid_argument("pattern length above 20 is not supported");
    dense_ = k_ <= 10;
    if (dense_) {
      std::uint64_t total = 1;
      for (int i = 2; i <= k_; ++i) total *= static_cast<std::uint64_t>(i);
      table_.assign(total, false);
    }
    for (const auto& p : patterns) {
      auto r = pattern_rank(p.word());
      if (dense_) {
        table_[r] = true;
      } else {
        sparse_.insert(r);
      }
    }
  }

  int k() const { return k_; }
  bool contains(std::span<const int> values) const {
    auto r = pattern_rank(values);
    return dense_ ? static_cast<bool>(table_[r]) : sparse_.contains(r);
  }

 private:
  int k_;
  bool dense_ = true;
  std::vector<bool> table_;
  std::unordered_set<std::uint64_t> sparse_;
};

// Depth-first search over prefixes; each new entry is checked only against
// occurrences that use it, earlier ones having been ruled out already.
class PrunedSearch {
 public:
  PrunedSearch(int n, const PatternIndex& index, const AvoiderVisitor* visit)
      : n_(n), index_(index), visit_(visit), word_(static_cast<std::size_t>(n)),
        used_(static_cast<std::size_t>(n) + 1, false), picked_(static_cast<std::size_t>(index.k())),
        values_(static_cast<std::size_t>(index.k())) {}

  // Returns false if the forced prefix already contains a pattern.
  bool seed(std::span<const int> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      word_[i] = prefix[i];
      used_[prefix[i]] = true;
      if (creates_occurrence(static_cast<int>(i))) return false;
    }
    depth_ = static_cast<int>(prefix.size());
    return true;
  }

  Integer run() {
    count_ = 0;
    extend(depth_);
    return count_;
  }

 private:
  void extend(int depth) {
    if (depth == n_) {
      ++count_;
      if (visit_ && *visit_) (*visit_)(Permutation(word_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v]) continue;
      word_[depth] = v;
      if (creates_occurrence(depth)) continue;
      used_[v] = true;
      extend(depth + 1);
      used_[v] = false;
    }
  }

  // Any occurrence ending at position last, i.e. using word_[last] as its final entry.
  bool creates_occurrence(int last) {
    const int k = index_.k();
    if (last + 1 < k) return false;
    const int choose = k - 1;
    picked_[choose] = last;
    for (int i = 0; i < choose; ++i) picked_[i] = i;
    while (true) {
      for (int i = 0; i < k; ++i) values_[i] = word_[picked_[i]];
      if (index_.contains(values_)) return true;
      int i = choose - 1;
      while (i >= 0 && picked_[i] == last - choose + i) --i;
      if (i < 0) return false;
      ++picked_[i];
      for (int j = i + 1; j < choose; ++j) picked_[j] = picked_[j - 1] + 1;
    }
  }

  int n_;
  const PatternIndex& index_;
  const AvoiderVisitor* visit_;
  std::vector<int> word_;
  std::vector<bool> used_;
  std::vector<int> picked_;
  std::vector<int> values_;
  int depth_ = 0;
  Integer count_;
};

void check_prefix(int n, std::span<const int> prefix) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiders: negative length");
  if (static_cast<int>(prefix.size()) > n)
    throw std::invalid_argument("enumerate_avoiders: prefix longer than n");
  for (int v : prefix)
    if (v < 1 || v > n)
      throw std::invalid_argument("enumerate_avoiders: prefix entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
}

bool has_repeat(std::span<const int> prefix) {
  std::vector<int> sorted(prefix.begin(), prefix.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

Integer exhaustive_scan(int n, const PatternSet& patterns, std::span<const int> prefix,
                        const AvoiderVisitor& visit) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[i] = i + 1;
  Integer count = 0;
  do {
    if (!std::equal(prefix.begin(), prefix.end(), word.begin())) continue;
    Permutation pi(word);
    if (!avoids_all(pi, patterns)) continue;
    ++count;
    if (visit) visit(pi);
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

}  // namespace

bool occurs(const Permutation& tau, const Permutation& pi) {
  const int k = tau.size();
  const int n = pi.size();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::vector<int> sub(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) sub[i] = pi.word()[idx[i]];
    if (is_order_isomorphic(sub, tau.word())) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool avoids_all(const Permutation& pi, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& tau) { return occurs(tau, pi); });
}

Integer count_avoiders(int n, const PatternSet& patterns, EnumerateOptions options) {
  return enumerate_avoiders(n, patterns, std::span<const int>{}, AvoiderVisitor{}, options);
}

Integer enumerate_avoiders(int n, const PatternSet& patterns, const AvoiderVisitor& visit,
                           EnumerateOptions options) {
  return enumerate_avoiders(n, patterns, std::span<const int>{}, visit, options);
}

Integer enumerate_avoiders(int n, const PatternSet& patterns, std::span<const int> prefix,
                           const AvoiderVisitor& visit, EnumerateOptions options) {
  check_prefix(n, prefix);
  if (has_repeat(prefix)) return 0;
  if (!options.prune) return exhaustive_scan(n, patterns, prefix, visit);

  const PatternIndex index(patterns);
  const bool split = !visit && options.workers > 1 && prefix.empty() && n > 1;
  if (!split) {
    PrunedSearch search(n, index, visit ? &visit : nullptr);
    if (!search.seed(prefix)) return 0;
    return search.run();
  }

  std::vector<std::future<Integer>> parts;
  for (unsigned w = 0; w < options.workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      Integer subtotal = 0;
      for (int first = 1 + static_cast<int>(w); first <= n; first += static_cast<int>(options.workers)) {
        const int head[] = {first};
        PrunedSearch search(n, index, nullptr);
        if (search.seed(head)) subtotal += search.run();
      }
      return subtotal;
    }));
  }
  Integer total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

}  // namespace parabolic
