#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cycle_span::cli {

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Checks every formula against the brute-force oracle and against the other
// exact routes, over all 1 <= m <= n <= max_n. max_n must fit the
// enumeration budget.
std::vector<IdentityResult> run_verification(std::size_t max_n, unsigned threads = 1);

}  // namespace cycle_span::cli
