#pragma once

#include <cstdint>

namespace cycle_span {

// Ground-set size n and marked-prefix size m, with 1 <= m <= n.
class SpanParams {
 public:
  // Throws std::invalid_argument when n < 1 and std::out_of_range unless
  // 1 <= m <= n. m = 0 is rejected rather than read as an empty marked set.
  SpanParams(std::int64_t n, std::int64_t m);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  // Whether l lies in the support [m, n].
  bool in_support(std::int64_t l) const noexcept { return l >= m_ && l <= n_; }

  friend bool operator==(const SpanParams&, const SpanParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
};

}  // namespace cycle_span
