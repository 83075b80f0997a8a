#include "cycle_span/profile.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cycle_span {

SpanProfile encode(const Permutation& p, std::size_t m) {
  return SpanProfile{restrict_to(p, m), following_distances(p, m), tail_sequence(p, m), p.size()};
}

void validate(const SpanProfile& profile) {
  const std::size_t n = profile.n;
  const std::size_t m = profile.m();
  if (m > n) throw std::invalid_argument("restricted permutation is larger than n");
  if (profile.distances.size() != m) {
    throw std::invalid_argument("expected " + std::to_string(m) + " distances, got " +
                                std::to_string(profile.distances.size()));
  }
  std::size_t total = 0;
  for (std::size_t d : profile.distances) {
    if (d < 1) throw std::invalid_argument("distances must be positive");
    total += d;
    if (total > n) throw std::invalid_argument("distances sum past n = " + std::to_string(n));
  }
  if (profile.tail.size() != n - m) {
    throw std::invalid_argument("tail must list the " + std::to_string(n - m) +
                                " elements of [m+1, n]");
  }
  std::vector<bool> seen(n - m, false);
  for (Element e : profile.tail) {
    if (e <= m || e > n || seen[e - m - 1]) {
      throw std::invalid_argument("tail is not a permutation of [m+1, n]");
    }
    seen[e - m - 1] = true;
  }
}

Permutation decode(const SpanProfile& profile) {
  validate(profile);
  const std::size_t total =
      std::accumulate(profile.distances.begin(), profile.distances.end(), std::size_t{0});
  const std::size_t disjoint = profile.n - total;

  // Rebuild the parenthesis-free canonical representation, then parse it.
  std::vector<Element> sequence(profile.tail.begin(),
                                profile.tail.begin() + static_cast<std::ptrdiff_t>(disjoint));
  auto next = profile.tail.begin() + static_cast<std::ptrdiff_t>(disjoint);
  for (Element j : cycle_decomposition(profile.restricted).concatenated()) {
    sequence.push_back(j);
    const std::size_t gap = profile.distances[j - 1] - 1;
    sequence.insert(sequence.end(), next, next + static_cast<std::ptrdiff_t>(gap));
    next += static_cast<std::ptrdiff_t>(gap);
  }
  return from_cycles(CycleDecomposition::parse_concatenated(sequence));
}

}  // namespace cycle_span
