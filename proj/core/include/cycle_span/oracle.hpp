#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "cycle_span/distribution.hpp"
#include "cycle_span/permutation.hpp"
#include "cycle_span/rational.hpp"
#include "cycle_span/span_params.hpp"

namespace cycle_span {

// Largest n the brute-force oracle will enumerate. The default keeps the
// full sweep well under a minute; n > kHardCap (10! ~ 3.6M permutations)
// needs an explicit override.
class EnumerationBudget {
 public:
  static constexpr std::size_t kDefaultMaxN = 8;
  static constexpr std::size_t kHardCap = 10;
  static constexpr const char* kEnvVar = "CYCLE_SPAN_MAX_N";

  EnumerationBudget() noexcept : max_n_(kDefaultMaxN) {}

  // Throws std::invalid_argument unless 1 <= max_n <= kHardCap.
  explicit EnumerationBudget(std::size_t max_n);

  // Any positive max_n, including above the hard cap.
  static EnumerationBudget overriding_cap(std::size_t max_n);

  // kDefaultMaxN, or the value of CYCLE_SPAN_MAX_N when set. The variable
  // counts as an explicit override and may exceed kHardCap.
  static EnumerationBudget from_environment();

  std::size_t max_n() const noexcept { return max_n_; }

  // Throws std::length_error when n exceeds the budget.
  void check(std::size_t n) const;

 private:
  struct Unchecked {};
  EnumerationBudget(std::size_t max_n, Unchecked) : max_n_(max_n) {}

  std::size_t max_n_;
};

// Every permutation of [n] once, in lexicographic order of one-line
// notation. Single pass.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = Permutation;

    iterator() = default;

    Permutation operator*() const { return Permutation(range_->current_); }
    iterator& operator++() {
      range_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const {
      return range_ == nullptr || range_->done_;
    }

   private:
    friend class PermutationRange;
    explicit iterator(PermutationRange* range) : range_(range) {}
    PermutationRange* range_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  friend PermutationRange enumerate_permutations(std::size_t, const EnumerationBudget&);
  explicit PermutationRange(std::size_t n);
  void advance();

  std::vector<Element> current_;
  bool done_ = false;
};

// Throws std::invalid_argument when n < 1 and std::length_error when n is
// over budget.
PermutationRange enumerate_permutations(std::size_t n, const EnumerationBudget& budget = {});

// count[l - m] = |{p in S_n : span_length(p, m) = l}|, found by walking all
// of S_n. Work is split by the image of 1 across `threads` workers (0 means
// hardware concurrency); the result does not depend on the split.
std::vector<std::uint64_t> span_length_histogram(const SpanParams& params,
                                                 const EnumerationBudget& budget = {},
                                                 unsigned threads = 0);

PmfTable exact_distribution_by_enumeration(const SpanParams& params,
                                           const EnumerationBudget& budget = {},
                                           unsigned threads = 0);

// Throws std::out_of_range unless l in [m, n].
BigInt count_by_enumeration(const SpanParams& params, std::int64_t l,
                            const EnumerationBudget& budget = {}, unsigned threads = 0);

}  // namespace cycle_span
