#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cycle_span/rational.hpp"
#include "cycle_span/span_params.hpp"

namespace cycle_span {

// Exact distribution of L, the combined length of the cycles of a uniform
// permutation of [n] that meet [m]:
//
//   P(L = l) = C(l-1, m-1) / C(n, m),   l in [m, n].
//
// Every probability and moment here is an exact rational.

// Exact probabilities over the support [m, n].
struct PmfTable {
  SpanParams params;
  std::vector<Rational> probs;  // probs[l - m]

  // P(L = l); exact zero off the support.
  Rational probability(std::int64_t l) const;

  friend bool operator==(const PmfTable&, const PmfTable&) = default;
};

// C(a, b); zero when b < 0 or b > a. Throws std::invalid_argument if a < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

// x (x+1) ... (x+k-1); 1 when k = 0.
BigInt rising_factorial(std::int64_t x, std::int64_t k);

BigInt factorial(std::int64_t n);

// Closed form. Total over the integers: exact zero outside [m, n].
Rational pmf(const SpanParams& params, std::int64_t l);

// (m/n) * prod_{j=1}^{m-1} (l-j)/(n-j). Throws std::out_of_range outside
// [m, n], where the product form does not describe the distribution.
Rational pmf_product(const SpanParams& params, std::int64_t l);

// Closed-form table; sums to exactly one.
PmfTable pmf_table(const SpanParams& params);

// Table built only from the base case P(L = l | m = 1) = 1/n and the
// recurrence that conditions on the span of [m-1]:
//
//   p(n,m,l) = p(n,m-1,l) (l-m+1)/(n-m+1)
//            + sum_{j=m-1}^{l-1} p(n,m-1,j) (n-j)/(n-m+1) p(n-j,1,l-j).
//
// Never touches the closed form. O(m n^2) rational operations.
PmfTable pmf_recurrence(const SpanParams& params);

// pmf_recurrence for every m in [1, n] at once; element i holds m = i + 1.
std::vector<PmfTable> pmf_recurrence_all(std::int64_t n);

Rational expectation(const SpanParams& params);

// E[L (L+1) ... (L+k-1)] = m (n+1)^(k) / (m+k). Throws std::invalid_argument
// when k < 1.
Rational rising_factorial_moment(const SpanParams& params, std::int64_t k);

Rational variance(const SpanParams& params);

// Variance via the second rising-factorial moment:
// E[L^(2)] - E[L] - E[L]^2.
Rational variance_from_moments(const SpanParams& params);

// P(every cycle meets [m]) = m/n.
Rational full_coverage_probability(const SpanParams& params);

// Fraction of [n] lying in cycles disjoint from [m].
struct UncoveredFractionStats {
  Rational mean;        // (n-m) / ((m+1) n)
  Rational sd_squared;  // Var(L) / n^2
  double sd = 0.0;      // sqrt(sd_squared), not rational in general
};

UncoveredFractionStats uncovered_fraction_stats(const SpanParams& params);

// |{p in S_n : L(p) = l}| = C(n-m, l-m) m (l-1)! (n-l)!. Throws
// std::out_of_range outside [m, n].
BigInt count_span_permutations(const SpanParams& params, std::int64_t l);

struct MomentReport {
  SpanParams params;
  Rational expectation;
  Rational variance;
  std::map<std::int64_t, Rational> rising_factorial;  // k -> E[L^(k)]
  Rational full_coverage;
  UncoveredFractionStats uncovered;
};

// Rising-factorial moments for k = 1..max_k.
MomentReport moment_report(const SpanParams& params, std::int64_t max_k = 4);

}  // namespace cycle_span
