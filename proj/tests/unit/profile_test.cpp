#include "cycle_span/profile.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "cycle_span/distribution.hpp"
#include "test_support.hpp"

namespace cycle_span {
namespace {

using testing::all_permutations;
using testing::example_permutation;

// All (l_1, ..., l_m) with l_j >= 1 and sum <= n, in lexicographic order.
std::vector<DistanceVector> distance_vectors(std::size_t n, std::size_t m) {
  std::vector<DistanceVector> out;
  DistanceVector current;
  std::function<void(std::size_t)> extend = [&](std::size_t budget) {
    if (current.size() == m) {
      out.push_back(current);
      return;
    }
    // Leave at least one unit for each remaining entry.
    const std::size_t remaining = m - current.size() - 1;
    for (std::size_t d = 1; d + remaining <= budget; ++d) {
      current.push_back(d);
      extend(budget - d);
      current.pop_back();
    }
  };
  extend(n);
  return out;
}

std::vector<std::vector<Element>> tails(std::size_t n, std::size_t m) {
  std::vector<Element> seq;
  for (auto e = static_cast<Element>(m + 1); e <= n; ++e) seq.push_back(e);
  std::vector<std::vector<Element>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

TEST(EncodeTest, ExamplePermutation) {
  const SpanProfile profile = encode(example_permutation(), 6);
  EXPECT_EQ(to_cycle_text(profile.restricted), "(3 6 5)(2 4)(1)");
  EXPECT_EQ(profile.distances, (DistanceVector{2, 1, 3, 1, 2, 1}));
  EXPECT_EQ(profile.tail, (std::vector<Element>{8, 10, 11, 7, 9}));
  EXPECT_EQ(profile.n, 11u);
}

TEST(EncodeTest, Identity) {
  const SpanProfile profile = encode(Permutation::identity(6), 2);
  EXPECT_EQ(profile.restricted, Permutation::identity(2));
  EXPECT_EQ(profile.distances, (DistanceVector{1, 1}));
  EXPECT_EQ(profile.tail, (std::vector<Element>{6, 5, 4, 3}));
}

TEST(EncodeTest, FullPrefixHasUnitDistancesAndEmptyTail) {
  const Permutation p = example_permutation();
  const SpanProfile profile = encode(p, 11);
  EXPECT_EQ(profile.restricted, p);
  EXPECT_EQ(profile.distances, DistanceVector(11, 1));
  EXPECT_TRUE(profile.tail.empty());
}

TEST(EncodeTest, RejectsOutOfRange) {
  EXPECT_THROW(encode(example_permutation(), 0), std::out_of_range);
  EXPECT_THROW(encode(example_permutation(), 12), std::out_of_range);
}

TEST(DecodeTest, ExampleProfile) {
  const SpanProfile profile{parse_cycle_text("(3 6 5)(2 4)(1)"),
                            {2, 1, 3, 1, 2, 1},
                            {8, 10, 11, 7, 9},
                            11};
  EXPECT_EQ(to_cycle_text(decode(profile)), "(8)(3 10 11 6 5 7)(2 4)(1 9)");
}

TEST(DecodeTest, EmptyTailGivesRestrictedPermutation) {
  const Permutation r = parse_cycle_text("(4)(2 3)(1)");
  EXPECT_EQ(decode({r, {1, 1, 1, 1}, {}, 4}), r);
}

TEST(DecodeTest, RejectsMalformedProfiles) {
  const Permutation r = Permutation::identity(2);
  EXPECT_THROW(decode({r, {3, 3}, {3, 4, 5}, 5}), std::invalid_argument);   // sum > n
  EXPECT_THROW(decode({r, {0, 1}, {3, 4, 5}, 5}), std::invalid_argument);   // zero distance
  EXPECT_THROW(decode({r, {1}, {3, 4, 5}, 5}), std::invalid_argument);      // wrong length
  EXPECT_THROW(decode({r, {1, 1}, {3, 4}, 5}), std::invalid_argument);      // short tail
  EXPECT_THROW(decode({r, {1, 1}, {3, 3, 5}, 5}), std::invalid_argument);   // repeated
  EXPECT_THROW(decode({r, {1, 1}, {2, 4, 5}, 5}), std::invalid_argument);   // element <= m
  EXPECT_THROW(decode({r, {1, 1}, {}, 1}), std::invalid_argument);          // m > n
}

TEST(BijectionTest, RoundTripsAndIsInjective) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    for (std::size_t m = 1; m <= n; ++m) {
      std::set<SpanProfile> seen;
      for (const auto& p : perms) {
        const SpanProfile profile = encode(p, m);
        ASSERT_EQ(decode(profile), p) << to_cycle_text(p) << " m=" << m;
        seen.insert(profile);
      }
      ASSERT_EQ(seen.size(), perms.size());
    }
  }
}

TEST(BijectionTest, DistanceVectorCountIsBinomial) {
  EXPECT_EQ(distance_vectors(3, 2), (std::vector<DistanceVector>{{1, 1}, {1, 2}, {2, 1}}));
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      ASSERT_EQ(BigInt(static_cast<unsigned long>(distance_vectors(n, m).size())),
                binomial(static_cast<long>(n), static_cast<long>(m)));
    }
  }
}

// Walks every profile in (restricted, distances, tail) order and checks the
// decoded permutations are pairwise distinct and fill S_n.
TEST(BijectionTest, EveryProfileDecodesToADistinctPermutation) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      std::set<Permutation> images;
      const auto vectors = distance_vectors(n, m);
      const auto all_tails = tails(n, m);
      for (const auto& r : all_permutations(m)) {
        for (const auto& d : vectors) {
          for (const auto& t : all_tails) {
            const SpanProfile profile{r, d, t, n};
            const Permutation p = decode(profile);
            ASSERT_EQ(encode(p, m), profile);
            images.insert(p);
          }
        }
      }
      ASSERT_EQ(BigInt(static_cast<unsigned long>(images.size())),
                factorial(static_cast<long>(n)));
    }
  }
}

}  // namespace
}  // namespace cycle_span
