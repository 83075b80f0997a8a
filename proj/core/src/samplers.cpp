#include "cycle_span/samplers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycle_span {

namespace {

std::vector<Element> shuffled_identity(std::size_t n, RandomSource& rng) {
  std::vector<Element> images(n);
  std::iota(images.begin(), images.end(), Element{1});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(images[i - 1], images[j]);
  }
  return images;
}

// Sequential insertion; images are 1-based values in a 0-based vector.
std::vector<Element> all_cycles_intersect_images(std::size_t n, std::size_t m,
                                                 RandomSource& rng) {
  std::vector<Element> images(n);
  images[0] = 1;
  for (Element k = 2; k <= n; ++k) {
    const std::uint64_t options = k <= m ? k : k - 1;
    const auto choice = static_cast<Element>(rng.uniform_below(options));
    if (choice == k - 1) {
      images[k - 1] = k;  // new cycle, only reachable when k <= m
    } else {
      const Element after = choice + 1;
      images[k - 1] = images[after - 1];
      images[after - 1] = k;
    }
  }
  return images;
}

}  // namespace

Permutation sample_uniform(std::size_t n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("cannot sample a permutation of an empty set");
  return Permutation(shuffled_identity(n, rng));
}

Permutation sample_all_cycles_intersect(const SpanParams& params, RandomSource& rng) {
  return Permutation(all_cycles_intersect_images(static_cast<std::size_t>(params.n()),
                                                 static_cast<std::size_t>(params.m()), rng));
}

Permutation sample_conditional_span(const SpanParams& params, std::int64_t l, RandomSource& rng) {
  if (!params.in_support(l)) {
    throw std::out_of_range("l = " + std::to_string(l) + " is outside [" +
                            std::to_string(params.m()) + ", " + std::to_string(params.n()) + "]");
  }
  const auto n = static_cast<std::size_t>(params.n());
  const auto m = static_cast<std::size_t>(params.m());
  const auto span = static_cast<std::size_t>(l);

  // Partial Fisher-Yates over [m+1, n]: the first l-m slots become I.
  std::vector<Element> unmarked(n - m);
  std::iota(unmarked.begin(), unmarked.end(), static_cast<Element>(m + 1));
  for (std::size_t i = 0; i < span - m; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(unmarked.size() - i));
    std::swap(unmarked[i], unmarked[j]);
  }
  const auto split = unmarked.begin() + static_cast<std::ptrdiff_t>(span - m);
  std::sort(unmarked.begin(), split);
  std::sort(split, unmarked.end());

  // Order-preserving labels: inside[i] is the element carrying label i + 1.
  std::vector<Element> inside(m);
  std::iota(inside.begin(), inside.end(), Element{1});
  inside.insert(inside.end(), unmarked.begin(), split);
  const std::vector<Element> outside(split, unmarked.end());

  std::vector<Element> images(n);
  const auto inner = all_cycles_intersect_images(span, m, rng);
  for (std::size_t i = 0; i < span; ++i) images[inside[i] - 1] = inside[inner[i] - 1];
  if (!outside.empty()) {
    const auto rest = shuffled_identity(outside.size(), rng);
    for (std::size_t i = 0; i < outside.size(); ++i) images[outside[i] - 1] = outside[rest[i] - 1];
  }
  return Permutation(std::move(images));
}

}  // namespace cycle_span
