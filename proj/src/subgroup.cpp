#include "parabolic/subgroup.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace parabolic {

AvoidanceClass::AvoidanceClass(int l, int m, int a) : l_(l), m_(m), a_(a) {
  if (l < 1 || m < 1 || a < 0 || a > l + m - 1) {
    throw std::invalid_argument("AvoidanceClass: need l,m >= 1 and 0 <= a <= l+m-1, got (l=" +
                                std::to_string(l) + ", m=" + std::to_string(m) + ", a=" + std::to_string(a) + ")");
  }
}

PatternSet subgroup_closure(int k, std::span<const Permutation> generators) {
  for (const auto& g : generators)
    if (g.size() != k) throw std::invalid_argument("subgroup_closure: generator " + g.to_string() + " not in S_" +
                                                   std::to_string(k));
  std::set<Permutation> seen{Permutation::identity(k)};
  std::deque<Permutation> frontier{Permutation::identity(k)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = current * g;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return PatternSet(k, std::vector<Permutation>(seen.begin(), seen.end()));
}

PatternSet parabolic_subgroup(std::span<const int> blocks) {
  int k = 0;
  for (int len : blocks) {
    if (len < 1) throw std::invalid_argument("parabolic_subgroup: block lengths must be positive");
    k += len;
  }
  if (k < 1) throw std::invalid_argument("parabolic_subgroup: no blocks");
  std::vector<bool> omitted(static_cast<std::size_t>(k), false);
  for (int boundary = 0, i = 0; i + 1 < static_cast<int>(blocks.size()); ++i) {
    boundary += blocks[i];
    omitted[boundary] = true;
  }
  std::vector<Permutation> generators;
  for (int i = 1; i < k; ++i)
    if (!omitted[i]) generators.push_back(Permutation::simple_transposition(k, i));
  return subgroup_closure(k, generators);
}

PatternSet parabolic_subgroup(int l, int m) {
  const int blocks[] = {l, m};
  return parabolic_subgroup(blocks);
}

PatternSet parabolic_coset(const AvoidanceClass& cls) {
  const PatternSet group = parabolic_subgroup(cls.l(), cls.m());
  const Permutation shift = Permutation::long_cycle(cls.k()).pow(cls.a());
  std::vector<Permutation> coset;
  coset.reserve(group.size());
  for (const auto& p : group) coset.push_back(shift * p);
  return PatternSet(cls.k(), std::move(coset));
}

}  // namespace parabolic
