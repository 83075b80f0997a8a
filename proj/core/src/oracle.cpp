#include "cycle_span/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>

namespace cycle_span {

EnumerationBudget::EnumerationBudget(std::size_t max_n) : max_n_(max_n) {
  if (max_n < 1 || max_n > kHardCap) {
    throw std::invalid_argument("enumeration budget " + std::to_string(max_n) +
                                " outside [1, " + std::to_string(kHardCap) + "]; set " +
                                kEnvVar + " to override");
  }
}

EnumerationBudget EnumerationBudget::overriding_cap(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("enumeration budget must be positive");
  return EnumerationBudget(max_n, Unchecked{});
}

EnumerationBudget EnumerationBudget::from_environment() {
  const char* raw = std::getenv(kEnvVar);
  if (raw == nullptr || *raw == '\0') return EnumerationBudget();
  const std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(kEnvVar) + " is not a positive integer: '" +
                                std::string(text) + "'");
  }
  return overriding_cap(value);
}

void EnumerationBudget::check(std::size_t n) const {
  if (n > max_n_) {
    throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration budget of " +
                            std::to_string(max_n_));
  }
}

PermutationRange::PermutationRange(std::size_t n) : current_(n) {
  std::iota(current_.begin(), current_.end(), Element{1});
}

void PermutationRange::advance() {
  done_ = !std::next_permutation(current_.begin(), current_.end());
}

PermutationRange enumerate_permutations(std::size_t n, const EnumerationBudget& budget) {
  if (n < 1) throw std::invalid_argument("cannot enumerate permutations of an empty set");
  budget.check(n);
  return PermutationRange(n);
}

namespace {

// All permutations with p(1) = first, in lexicographic order.
void tally_with_first_image(std::size_t n, std::size_t m, Element first,
                            std::vector<std::uint64_t>& counts) {
  std::vector<Element> images;
  images.reserve(n);
  images.push_back(first);
  for (Element v = 1; v <= n; ++v) {
    if (v != first) images.push_back(v);
  }
  do {
    const Permutation p(images);
    ++counts[span_length(p, m) - m];
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

}  // namespace

std::vector<std::uint64_t> span_length_histogram(const SpanParams& params,
                                                 const EnumerationBudget& budget,
                                                 unsigned threads) {
  const auto n = static_cast<std::size_t>(params.n());
  const auto m = static_cast<std::size_t>(params.m());
  budget.check(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, n);

  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(n - m + 1, 0));
  auto work = [&](std::size_t w) {
    for (std::size_t first = w + 1; first <= n; first += workers) {
      tally_with_first_image(n, m, static_cast<Element>(first), partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<std::uint64_t> counts(n - m + 1, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
  }
  return counts;
}

PmfTable exact_distribution_by_enumeration(const SpanParams& params,
                                           const EnumerationBudget& budget, unsigned threads) {
  const auto counts = span_length_histogram(params, budget, threads);
  const BigInt total = factorial(params.n());
  PmfTable table{params, {}};
  table.probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    table.probs.push_back(ratio(BigInt(static_cast<unsigned long>(c)), total));
  }
  return table;
}

BigInt count_by_enumeration(const SpanParams& params, std::int64_t l,
                            const EnumerationBudget& budget, unsigned threads) {
  if (!params.in_support(l)) {
    throw std::out_of_range("l = " + std::to_string(l) + " is outside [" +
                            std::to_string(params.m()) + ", " + std::to_string(params.n()) + "]");
  }
  const auto counts = span_length_histogram(params, budget, threads);
  return BigInt(static_cast<unsigned long>(counts[static_cast<std::size_t>(l - params.m())]));
}

}  // namespace cycle_span
