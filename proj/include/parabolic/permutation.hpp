#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of [n] in one-line notation, and finite pattern sets.
 *
 * Everything is 1-based: word()[i - 1] is the image of i.  Composition reads
 * right to left, (p * q)(i) = p(q(i)), so p * q applies q first.
 */

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parabolic {

class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless word is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  // s_i swaps i and i+1, 1 <= i < n.
  static Permutation simple_transposition(int n, int i);
  // The k-cycle (2,3,...,n,1).
  static Permutation long_cycle(int n);
  // "2 1 3", "2,1,3" or compact "213" (compact form only for n <= 9).
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> word() const noexcept { return word_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(int exponent) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string(std::string_view separator = " ") const;

 private:
  std::vector<int> word_;
};

Permutation reversal(const Permutation& pi);
Permutation complement(const Permutation& pi);

// Same relative order at every pair of positions.  Throws on length mismatch.
bool is_order_isomorphic(std::span<const int> alpha, std::span<const int> beta);

/// A set of forbidden patterns, all of one length k >= 1; kept sorted and deduplicated.
class PatternSet {
 public:
  PatternSet(int k, std::vector<Permutation> patterns);
  // Length taken from the members; throws when empty.
  explicit PatternSet(std::vector<Permutation> patterns);

  int pattern_length() const noexcept { return k_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  bool contains(const Permutation& tau) const;

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  // Image of every member under reversal / complement.
  PatternSet reversed() const;
  PatternSet complemented() const;

  bool operator==(const PatternSet&) const = default;

 private:
  int k_ = 0;
  std::vector<Permutation> patterns_;
};

}  // namespace parabolic
