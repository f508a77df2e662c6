#pragma once

// Parabolic subgroups of S_k and the cosets sigma^a P_{l,m} used as forbidden sets.

#include <span>

#include "parabolic/permutation.hpp"

namespace parabolic {

/// Identifies the coset sigma^a P_{l,m} of S_k, k = l + m, sigma = (2,3,...,k,1).
class AvoidanceClass {
 public:
  // Requires l >= 1, m >= 1, 0 <= a <= k-1; throws std::invalid_argument otherwise.
  AvoidanceClass(int l, int m, int a = 0);

  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  int a() const noexcept { return a_; }
  int k() const noexcept { return l_ + m_; }
  int lambda() const noexcept { return l_ < m_ ? l_ : m_; }
  int mu() const noexcept { return l_ < m_ ? m_ : l_; }
  // Upper end of the index box at length n: b = n - m + a.
  int b(int n) const noexcept { return n - m_ + a_; }

  bool operator==(const AvoidanceClass&) const = default;

 private:
  int l_;
  int m_;
  int a_;
};

// Breadth-first closure of the generators under composition; always contains the identity.
PatternSet subgroup_closure(int k, std::span<const Permutation> generators);

// Subgroup of S_k generated by every s_i except those at block boundaries:
// blocks {l, m} gives P_{l,m}; blocks {l1, l2, l3} gives P_{l1,l2,l3}.
PatternSet parabolic_subgroup(std::span<const int> blocks);
PatternSet parabolic_subgroup(int l, int m);

// {sigma^a * p : p in P_{l,m}}.
PatternSet parabolic_coset(const AvoidanceClass& cls);

}  // namespace parabolic
