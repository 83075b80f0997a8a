#pragma once

#include <cstdint>
#include <vector>

#include "cycle_span/rational.hpp"
#include "cycle_span/span_params.hpp"

namespace cycle_span {

// Tallies of span lengths and fixed points over uniform permutations.
struct EmpiricalDistribution {
  SpanParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;  // counts[l - m]
  std::uint64_t fixed_point_total = 0;

  std::uint64_t count(std::int64_t l) const;
  // count(l) / trials.
  Rational frequency(std::int64_t l) const;
  Rational mean_span_length() const;
  Rational mean_fixed_points() const;

  // Adds another partial tally over disjoint trials of the same run.
  void merge(const EmpiricalDistribution& other);

  friend bool operator==(const EmpiricalDistribution&, const EmpiricalDistribution&) = default;
};

// Trial i draws from RandomSource::for_stream(seed, i), so the result is the
// same for every `threads` value; 0 means hardware concurrency. Throws
// std::invalid_argument when trials == 0.
EmpiricalDistribution monte_carlo(const SpanParams& params, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads = 1);

// Trials [first, last) only. monte_carlo merges these.
EmpiricalDistribution monte_carlo_range(const SpanParams& params, std::uint64_t first,
                                        std::uint64_t last, std::uint64_t seed);

}  // namespace cycle_span
