#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cycle_span/permutation.hpp"

namespace cycle_span {

// The triple (p|_m, (l_1, ..., l_m), p_{>m}) that identifies p in S_n.
//
// Read against the canonical representation of p: the restricted
// permutation fixes the order of [m], l_j - 1 is how many elements above m
// sit right after j, and the tail lists the elements above m in order. The
// first n - sum(l_j) tail elements form the cycles disjoint from [m].
struct SpanProfile {
  Permutation restricted;       // on [m]
  DistanceVector distances;     // length m, entries >= 1, sum <= n
  std::vector<Element> tail;    // a permutation of [m+1, n]
  std::size_t n = 0;

  std::size_t m() const noexcept { return restricted.size(); }

  // Ordered by restricted permutation, then distances, then tail.
  friend auto operator<=>(const SpanProfile&, const SpanProfile&) = default;
  friend bool operator==(const SpanProfile&, const SpanProfile&) = default;
};

// Throws std::out_of_range unless 1 <= m <= p.size().
SpanProfile encode(const Permutation& p, std::size_t m);

// Throws std::invalid_argument if `profile` is malformed.
void validate(const SpanProfile& profile);

// Inverse of encode. Validates before building anything.
Permutation decode(const SpanProfile& profile);

}  // namespace cycle_span
