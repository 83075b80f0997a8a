#pragma once

#include <cstddef>
#include <cstdint>

#include "cycle_span/permutation.hpp"
#include "cycle_span/random.hpp"
#include "cycle_span/span_params.hpp"

namespace cycle_span {

// Uniform on S_n (Fisher-Yates). Throws std::invalid_argument when n < 1.
Permutation sample_uniform(std::size_t n, RandomSource& rng);

// Uniform on the permutations of [n] whose every cycle meets [m].
//
// Builds p|_1, p|_2, ..., p|_n in turn. Element k <= m goes after one of
// 1..k-1 in its cycle or opens a new cycle (k choices); element k > m may
// only go after one of 1..k-1 (k-1 choices). Each target permutation arises
// from exactly one choice sequence.
Permutation sample_all_cycles_intersect(const SpanParams& params, RandomSource& rng);

// Uniform on {p in S_n : span_length(p, m) = l}: a uniform (l-m)-subset I of
// [m+1, n] joins [m]; [m] u I carries an all-cycles-meet-[m] permutation and
// the rest a uniform one. Throws std::out_of_range outside [m, n].
Permutation sample_conditional_span(const SpanParams& params, std::int64_t l, RandomSource& rng);

}  // namespace cycle_span
