#include "cycle_span/random.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

namespace cycle_span {
namespace {

// Reference values from an independent Python transcription of
// SplitMix64 seeding, xoshiro256** and Lemire's bounded draw.
TEST(RandomSourceTest, PinnedOutputStream) {
  RandomSource rng(42);
  EXPECT_EQ(rng.next(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(rng.next(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(rng.next(), 0xae17533239e499a1ULL);
  EXPECT_EQ(rng.next(), 0xecb8ad4703b360a1ULL);

  RandomSource zero(0);
  EXPECT_EQ(zero.next(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(zero.next(), 0xbf6e1f784956452aULL);
}

TEST(RandomSourceTest, PinnedBoundedDraws) {
  RandomSource rng(42);
  const std::array<std::uint64_t, 10> expected = {0, 3, 6, 9, 9, 7, 7, 8, 7, 5};
  for (std::uint64_t e : expected) EXPECT_EQ(rng.uniform_below(10), e);
}

TEST(RandomSourceTest, PinnedStreamSeeds) {
  EXPECT_EQ(stream_seed(42, 0), 0x02e27a83ece52600ULL);
  EXPECT_EQ(stream_seed(42, 7), 0x26eafd5bcb5236e6ULL);
  EXPECT_EQ(RandomSource::for_stream(42, 7).seed(), stream_seed(42, 7));
}

TEST(RandomSourceTest, SameSeedSameSequence) {
  RandomSource a(123456789);
  RandomSource b(123456789);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next(), b.next());
}

TEST(RandomSourceTest, StreamsAreDistinct) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 10000; ++i) seeds.insert(stream_seed(7, i));
  EXPECT_EQ(seeds.size(), 10000u);
}

TEST(RandomSourceTest, BoundedDrawsStayInRange) {
  RandomSource rng(9);
  EXPECT_EQ(rng.uniform_below(1), 0u);
  for (std::uint64_t bound : {2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 1}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.uniform_below(bound), bound);
  }
}

// A bound just above 2^63 maximises modulo bias: a naive `next() % bound`
// would put about two thirds of the draws below 2^63 - 1.
TEST(RandomSourceTest, NoModuloBiasForAwkwardBounds) {
  RandomSource rng(2024);
  const std::uint64_t bound = (1ULL << 63) + (1ULL << 62);
  const int draws = 200000;
  int low = 0;
  for (int i = 0; i < draws; ++i) {
    if (rng.uniform_below(bound) < bound / 2) ++low;
  }
  // Fair: draws/2, sd = sqrt(draws)/2 ~ 224.
  EXPECT_NEAR(low, draws / 2, 5 * 224);
}

}  // namespace
}  // namespace cycle_span
