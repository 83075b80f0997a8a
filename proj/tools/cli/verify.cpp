#include "cli/verify.hpp"

#include <functional>
#include <sstream>

#include "cycle_span/distribution.hpp"
#include "cycle_span/oracle.hpp"
#include "cycle_span/profile.hpp"

namespace cycle_span::cli {

namespace {

// Runs `check` on every (n, m) and reports the first mismatch.
IdentityResult over_grid(const std::string& name, std::size_t max_n,
                         const std::function<std::string(const SpanParams&)>& check) {
  std::size_t cases = 0;
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(max_n); ++n) {
    for (std::int64_t m = 1; m <= n; ++m) {
      const SpanParams params(n, m);
      const std::string failure = check(params);
      if (!failure.empty()) {
        std::ostringstream detail;
        detail << "n=" << n << " m=" << m << ": " << failure;
        return {name, false, detail.str()};
      }
      ++cases;
    }
  }
  return {name, true, std::to_string(cases) + " parameter pairs"};
}

}  // namespace

std::vector<IdentityResult> run_verification(std::size_t max_n, unsigned threads) {
  const EnumerationBudget budget = EnumerationBudget::from_environment();
  budget.check(max_n);

  std::vector<IdentityResult> results;

  results.push_back(over_grid("hockey_stick", max_n, [](const SpanParams& p) {
    BigInt sum = 0;
    for (std::int64_t j = p.m() - 1; j <= p.n() - 1; ++j) sum += binomial(j, p.m() - 1);
    return sum == binomial(p.n(), p.m()) ? "" : "sum of C(j, m-1) differs from C(n, m)";
  }));

  results.push_back(over_grid("normalization", max_n, [](const SpanParams& p) {
    const PmfTable table = pmf_table(p);
    Rational total = 0;
    const BigInt denominator = binomial(p.n(), p.m());
    for (std::int64_t l = p.m(); l <= p.n(); ++l) {
      total += table.probability(l);
      if (table.probability(l) * denominator != Rational(binomial(l - 1, p.m() - 1))) {
        return std::string("entry off the Pascal diagonal at l=") + std::to_string(l);
      }
    }
    return total == 1 ? std::string() : std::string("table does not sum to 1");
  }));

  results.push_back(over_grid("oracle_equivalence", max_n, [&](const SpanParams& p) {
    return exact_distribution_by_enumeration(p, budget, threads) == pmf_table(p)
               ? ""
               : "closed form differs from enumeration";
  }));

  results.push_back(over_grid("path_equivalence", max_n, [](const SpanParams& p) {
    const PmfTable closed = pmf_table(p);
    if (!(pmf_recurrence(p) == closed)) return std::string("recurrence differs from closed form");
    for (std::int64_t l = p.m(); l <= p.n(); ++l) {
      if (pmf_product(p, l) != closed.probability(l)) {
        return std::string("product form differs at l=") + std::to_string(l);
      }
    }
    return std::string();
  }));

  results.push_back(over_grid("counting", max_n, [&](const SpanParams& p) {
    const auto histogram = span_length_histogram(p, budget, threads);
    BigInt total = 0;
    for (std::int64_t l = p.m(); l <= p.n(); ++l) {
      const BigInt formula = count_span_permutations(p, l);
      total += formula;
      if (formula != histogram[static_cast<std::size_t>(l - p.m())]) {
        return std::string("count differs at l=") + std::to_string(l);
      }
    }
    return total == factorial(p.n()) ? std::string() : std::string("counts do not sum to n!");
  }));

  results.push_back(over_grid("full_coverage", max_n, [](const SpanParams& p) {
    return full_coverage_probability(p) == pmf(p, p.n()) ? ""
                                                         : "m/n differs from P(L = n)";
  }));

  results.push_back(over_grid("moments", max_n, [](const SpanParams& p) {
    const PmfTable table = pmf_table(p);
    for (std::int64_t k = 1; k <= 4; ++k) {
      Rational sum = 0;
      for (std::int64_t l = p.m(); l <= p.n(); ++l) {
        sum += table.probability(l) * rising_factorial(l, k);
      }
      if (sum != rising_factorial_moment(p, k)) {
        return std::string("rising-factorial moment differs at k=") + std::to_string(k);
      }
    }
    if (rising_factorial_moment(p, 1) != expectation(p)) return std::string("E[L] mismatch");
    return std::string();
  }));

  results.push_back(over_grid("variance", max_n, [](const SpanParams& p) {
    const PmfTable table = pmf_table(p);
    Rational first = 0;
    Rational second = 0;
    for (std::int64_t l = p.m(); l <= p.n(); ++l) {
      first += table.probability(l) * l;
      second += table.probability(l) * l * l;
    }
    const Rational direct = second - first * first;
    if (direct != variance(p)) return "closed form differs from the table";
    if (variance_from_moments(p) != variance(p)) return "moment route differs";
    return "";
  }));

  results.push_back(over_grid("bijection", max_n, [&](const SpanParams& p) {
    const auto m = static_cast<std::size_t>(p.m());
    for (const Permutation& perm : enumerate_permutations(static_cast<std::size_t>(p.n()), budget)) {
      if (!(decode(encode(perm, m)) == perm)) {
        return "round trip failed for " + to_cycle_text(perm);
      }
    }
    return std::string();
  }));

  return results;
}

}  // namespace cycle_span::cli
