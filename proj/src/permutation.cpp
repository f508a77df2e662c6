#include "parabolic/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace parabolic {

namespace {

std::invalid_argument bad(const std::string& what) { return std::invalid_argument("Permutation: " + what); }

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n) throw bad("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]) throw bad("repeated entry " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw bad("negative length");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw bad("s_" + std::to_string(i) + " undefined in S_" + std::to_string(n));
  auto p = identity(n);
  std::swap(p.word_[i - 1], p.word_[i]);
  return p;
}

Permutation Permutation::long_cycle(int n) {
  if (n < 1) throw bad("cycle needs n >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = (i + 1) % n + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("cannot parse '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    return Permutation(std::move(w));
  }
  int current = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = (current < 0 ? 0 : current * 10) + (c - '0');
    } else if (c == ' ' || c == ',' || c == '\t') {
      if (current >= 0) w.push_back(current);
      current = -1;
    } else {
      throw bad("cannot parse '" + std::string(text) + "'");
    }
  }
  if (current >= 0) w.push_back(current);
  return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw bad("composing permutations of different lengths");
  Permutation out;
  out.word_.resize(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) out.word_[i] = word_[rhs.word_[i] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.word_.resize(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) out.word_[word_[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

Permutation Permutation::pow(int exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  Permutation out = identity(size());
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

std::string Permutation::to_string(std::string_view separator) const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation reversal(const Permutation& pi) {
  std::vector<int> w(pi.word().rbegin(), pi.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int v : pi.word()) w.push_back(n + 1 - v);
  return Permutation(std::move(w));
}

bool is_order_isomorphic(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("is_order_isomorphic: lengths " + std::to_string(alpha.size()) + " and " +
                                std::to_string(beta.size()) + " differ");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (std::size_t j = i + 1; j < alpha.size(); ++j)
      if ((alpha[i] < alpha[j]) != (beta[i] < beta[j])) return false;
  return true;
}

PatternSet::PatternSet(int k, std::vector<Permutation> patterns) : k_(k), patterns_(std::move(patterns)) {
  if (k < 1) throw std::invalid_argument("PatternSet: pattern length must be >= 1");
  for (const auto& p : patterns_)
    if (p.size() != k)
      throw std::invalid_argument("PatternSet: member " + p.to_string() + " is not of length " + std::to_string(k));
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : PatternSet(patterns.empty() ? 0 : patterns.front().size(), std::move(patterns)) {}

bool PatternSet::contains(const Permutation& tau) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), tau);
}

PatternSet PatternSet::reversed() const {
  std::vector<Permutation> out;
  for (const auto& p : patterns_) out.push_back(reversal(p));
  return PatternSet(k_, std::move(out));
}

PatternSet PatternSet::complemented() const {
  std::vector<Permutation> out;
  for (const auto& p : patterns_) out.push_back(complement(p));
  return PatternSet(k_, std::move(out));
}

}  // namespace parabolic
