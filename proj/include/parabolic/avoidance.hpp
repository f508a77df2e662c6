#pragma once

/**
 * @file avoidance.hpp
 * @brief Pattern occurrence, set avoidance, and exhaustive enumeration of S_n(T).
 *
 * enumerate_avoiders() grows permutations left to right and abandons a prefix
 * as soon as it contains an occurrence of some pattern; every extension of
 * such a prefix contains the same occurrence.  Setting prune = false switches
 * to a plain scan over all of S_n that tests each permutation with
 * avoids_all(), which is slow but shares no code with the pruned search.
 */

#include <functional>
#include <span>

#include "parabolic/combinatorics.hpp"
#include "parabolic/permutation.hpp"

namespace parabolic {

// Some subsequence of pi is order-isomorphic to tau.  False when tau is longer than pi.
bool occurs(const Permutation& tau, const Permutation& pi);

bool avoids_all(const Permutation& pi, const PatternSet& patterns);

struct EnumerateOptions {
  bool prune = true;
  // Counting without a visitor may split the search by first entry across
  // this many threads; the total does not depend on the split.
  unsigned workers = 1;
};

using AvoiderVisitor = std::function<void(const Permutation&)>;

// |S_n(T)|.  n = 0 counts the empty permutation.
Integer count_avoiders(int n, const PatternSet& patterns, EnumerateOptions options = {});

// Calls visit on each avoider exactly once, in lexicographic order; returns the count.
Integer enumerate_avoiders(int n, const PatternSet& patterns, const AvoiderVisitor& visit,
                           EnumerateOptions options = {});

// Avoiders whose first entries equal prefix.  Entries outside 1..n throw;
// a prefix with a repeated entry has no completions and yields 0.
Integer enumerate_avoiders(int n, const PatternSet& patterns, std::span<const int> prefix,
                           const AvoiderVisitor& visit, EnumerateOptions options = {});

}  // namespace parabolic
