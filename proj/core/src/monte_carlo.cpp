#include "cycle_span/monte_carlo.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "cycle_span/permutation.hpp"
#include "cycle_span/random.hpp"
#include "cycle_span/samplers.hpp"

namespace cycle_span {

std::uint64_t EmpiricalDistribution::count(std::int64_t l) const {
  if (!params.in_support(l)) return 0;
  return counts[static_cast<std::size_t>(l - params.m())];
}

Rational EmpiricalDistribution::frequency(std::int64_t l) const {
  return ratio(BigInt(static_cast<unsigned long>(count(l))),
               BigInt(static_cast<unsigned long>(trials)));
}

Rational EmpiricalDistribution::mean_span_length() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    total += BigInt(static_cast<unsigned long>(counts[i])) *
             static_cast<unsigned long>(params.m() + static_cast<std::int64_t>(i));
  }
  return ratio(total, BigInt(static_cast<unsigned long>(trials)));
}

Rational EmpiricalDistribution::mean_fixed_points() const {
  return ratio(BigInt(static_cast<unsigned long>(fixed_point_total)),
               BigInt(static_cast<unsigned long>(trials)));
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  if (!(params == other.params) || seed != other.seed) {
    throw std::invalid_argument("merging tallies from different runs");
  }
  trials += other.trials;
  fixed_point_total += other.fixed_point_total;
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

EmpiricalDistribution monte_carlo_range(const SpanParams& params, std::uint64_t first,
                                        std::uint64_t last, std::uint64_t seed) {
  EmpiricalDistribution tally{params, 0, seed,
                              std::vector<std::uint64_t>(
                                  static_cast<std::size_t>(params.n() - params.m() + 1), 0),
                              0};
  const auto n = static_cast<std::size_t>(params.n());
  const auto m = static_cast<std::size_t>(params.m());
  for (std::uint64_t trial = first; trial < last; ++trial) {
    RandomSource rng = RandomSource::for_stream(seed, trial);
    const Permutation p = sample_uniform(n, rng);
    ++tally.counts[span_length(p, m) - m];
    tally.fixed_point_total += count_fixed_points(p);
    ++tally.trials;
  }
  return tally;
}

EmpiricalDistribution monte_carlo(const SpanParams& params, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(threads, trials);

  std::vector<EmpiricalDistribution> parts(workers, monte_carlo_range(params, 0, 0, seed));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t first = trials * w / workers;
    const std::uint64_t last = trials * (w + 1) / workers;
    pool.emplace_back([&parts, &params, w, first, last, seed] {
      parts[w] = monte_carlo_range(params, first, last, seed);
    });
  }
  pool.clear();  // joins

  EmpiricalDistribution result = parts.front();
  for (std::uint64_t w = 1; w < workers; ++w) result.merge(parts[w]);
  return result;
}

}  // namespace cycle_span
