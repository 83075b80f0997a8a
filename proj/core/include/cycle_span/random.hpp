#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace cycle_span {

// xoshiro256** seeded through SplitMix64. The output stream is a pure
// function of the seed on every platform. Bounded draws use Lemire's
// multiply-and-reject method, so they carry no modulo bias.
//
// Per-trial streams come from stream_seed(seed, index), which lets a
// simulation be split across any number of workers without changing the
// draws each trial sees.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed) noexcept;

  // Independent stream for trial `index` of a run seeded with `seed`.
  static RandomSource for_stream(std::uint64_t seed, std::uint64_t index) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() noexcept;

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  // UniformRandomBitGenerator.
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next(); }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace cycle_span
