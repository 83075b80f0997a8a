#include "cycle_span/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cycle_span {

namespace {

Rational frac(std::int64_t num, std::int64_t den) { return ratio(BigInt(num), BigInt(den)); }

void require_support(const SpanParams& params, std::int64_t l) {
  if (!params.in_support(l)) {
    throw std::out_of_range("l = " + std::to_string(l) + " is outside [" +
                            std::to_string(params.m()) + ", " + std::to_string(params.n()) + "]");
  }
}

// Length of the cycle through a fixed element of a uniform permutation of
// [size] is uniform on [size].
Rational single_cycle_length(std::int64_t size, std::int64_t length) {
  if (length < 1 || length > size) return Rational(0);
  return frac(1, size);
}

}  // namespace

SpanParams::SpanParams(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1) throw std::invalid_argument("n = " + std::to_string(n) + " must be positive");
  if (m < 1 || m > n) {
    throw std::out_of_range("m = " + std::to_string(m) + " is outside [1, " + std::to_string(n) +
                            "]");
  }
}

Rational PmfTable::probability(std::int64_t l) const {
  if (!params.in_support(l)) return Rational(0);
  return probs[static_cast<std::size_t>(l - params.m())];
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial with negative upper index");
  if (b < 0 || b > a) return BigInt(0);
  const std::int64_t k = std::min(b, a - b);
  BigInt result = 1;
  // After step i, result = C(a-k+i, i).
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(a - k + i);
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigInt rising_factorial(std::int64_t x, std::int64_t k) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= BigInt(x + i);
  return result;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return rising_factorial(1, n);
}

Rational pmf(const SpanParams& params, std::int64_t l) {
  if (!params.in_support(l)) return Rational(0);
  return ratio(binomial(l - 1, params.m() - 1), binomial(params.n(), params.m()));
}

Rational pmf_product(const SpanParams& params, std::int64_t l) {
  require_support(params, l);
  const std::int64_t n = params.n();
  const std::int64_t m = params.m();
  Rational result = frac(m, n);
  for (std::int64_t j = 1; j <= m - 1; ++j) result *= frac(l - j, n - j);
  return result;
}

PmfTable pmf_table(const SpanParams& params) {
  const std::int64_t n = params.n();
  const std::int64_t m = params.m();
  const BigInt total = binomial(n, m);
  PmfTable table{params, {}};
  table.probs.reserve(static_cast<std::size_t>(n - m + 1));
  BigInt numerator = 1;  // C(l-1, m-1) at l = m
  for (std::int64_t l = m; l <= n; ++l) {
    table.probs.push_back(ratio(numerator, total));
    // C(l, m-1) = C(l-1, m-1) * l / (l-m+1)
    numerator *= static_cast<unsigned long>(l);
    mpz_divexact_ui(numerator.get_mpz_t(), numerator.get_mpz_t(),
                    static_cast<unsigned long>(l - m + 1));
  }
  return table;
}

namespace {

// Runs the recurrence from m = 1 up to `upto`, handing each finished table
// to `sink`.
template <typename Sink>
void run_recurrence(std::int64_t n, std::int64_t upto, Sink&& sink) {
  PmfTable previous{SpanParams(n, 1), {}};
  for (std::int64_t l = 1; l <= n; ++l) previous.probs.push_back(single_cycle_length(n, l));
  sink(previous);

  for (std::int64_t m = 2; m <= upto; ++m) {
    PmfTable current{SpanParams(n, m), {}};
    current.probs.reserve(static_cast<std::size_t>(n - m + 1));
    const std::int64_t unmarked = n - m + 1;  // |[m, n]|
    for (std::int64_t l = m; l <= n; ++l) {
      // Element m already inside the span of [m-1], which has size l.
      Rational p = previous.probability(l) * frac(l - m + 1, unmarked);
      // Span of [m-1] has size j < l and m opens a fresh cycle of length l-j.
      for (std::int64_t j = m - 1; j <= l - 1; ++j) {
        p += previous.probability(j) * frac(n - j, unmarked) * single_cycle_length(n - j, l - j);
      }
      current.probs.push_back(std::move(p));
    }
    sink(current);
    previous = std::move(current);
  }
}

}  // namespace

PmfTable pmf_recurrence(const SpanParams& params) {
  PmfTable result{params, {}};
  run_recurrence(params.n(), params.m(), [&](const PmfTable& t) {
    if (t.params.m() == params.m()) result = t;
  });
  return result;
}

std::vector<PmfTable> pmf_recurrence_all(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n = " + std::to_string(n) + " must be positive");
  std::vector<PmfTable> tables;
  tables.reserve(static_cast<std::size_t>(n));
  run_recurrence(n, n, [&](const PmfTable& t) { tables.push_back(t); });
  return tables;
}

Rational expectation(const SpanParams& params) {
  const std::int64_t n = params.n();
  const std::int64_t m = params.m();
  return ratio(BigInt(m) * (n + 1), BigInt(m + 1));
}

Rational rising_factorial_moment(const SpanParams& params, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("rising-factorial moment order must be positive");
  const std::int64_t m = params.m();
  return ratio(BigInt(m) * rising_factorial(params.n() + 1, k), BigInt(m + k));
}

Rational variance(const SpanParams& params) {
  const std::int64_t n = params.n();
  const std::int64_t m = params.m();
  const BigInt num = BigInt(m) * (n + 1) * (n - m);
  const BigInt den = BigInt(m + 1) * (m + 1) * (m + 2);
  return ratio(num, den);
}

Rational variance_from_moments(const SpanParams& params) {
  const Rational mean = expectation(params);
  const Rational second_raw = rising_factorial_moment(params, 2) - mean;
  return second_raw - mean * mean;
}

Rational full_coverage_probability(const SpanParams& params) {
  return frac(params.m(), params.n());
}

UncoveredFractionStats uncovered_fraction_stats(const SpanParams& params) {
  const Rational n(static_cast<long>(params.n()));
  UncoveredFractionStats stats;
  stats.mean = 1 - expectation(params) / n;
  stats.sd_squared = variance(params) / (n * n);
  stats.sd = std::sqrt(to_double(stats.sd_squared));
  return stats;
}

BigInt count_span_permutations(const SpanParams& params, std::int64_t l) {
  require_support(params, l);
  const std::int64_t n = params.n();
  const std::int64_t m = params.m();
  return binomial(n - m, l - m) * m * factorial(l - 1) * factorial(n - l);
}

MomentReport moment_report(const SpanParams& params, std::int64_t max_k) {
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  MomentReport report{params,
                      expectation(params),
                      variance(params),
                      {},
                      full_coverage_probability(params),
                      uncovered_fraction_stats(params)};
  for (std::int64_t k = 1; k <= max_k; ++k) {
    report.rising_factorial.emplace(k, rising_factorial_moment(params, k));
  }
  return report;
}

}  // namespace cycle_span
