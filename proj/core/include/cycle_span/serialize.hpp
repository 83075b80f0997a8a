#pragma once

#include <nlohmann/json.hpp>

#include <ostream>

#include "cycle_span/distribution.hpp"
#include "cycle_span/monte_carlo.hpp"
#include "cycle_span/rational.hpp"

namespace cycle_span {

// Stable text formats for distributions and moments.
//
// PmfTable CSV:
//   l,numerator,denominator,float
//   20,1,535983370403809682970,1.8657295267325187e-21
//
// EmpiricalDistribution CSV adds `# trials=`, `# seed=` and
// `# fixed_point_total=` header lines and a trailing count column; its
// rational is count/trials in lowest terms.
//
// MomentReport CSV:
//   quantity,numerator,denominator,float
// with rows expectation, variance, rising_factorial_<k>, full_coverage,
// uncovered_mean, uncovered_sd_squared and uncovered_sd (float only).
//
// JSON mirrors the CSV: numerators and denominators are decimal strings,
// floats are numbers.

inline constexpr int kDefaultFloatDigits = 17;

struct FloatFormat {
  int digits = kDefaultFloatDigits;  // 0 = shortest round-trip
};

// to_double(q) rendered with `format`.
std::string format_rational(const Rational& q, FloatFormat format = {});

void write_csv(std::ostream& out, const PmfTable& table, FloatFormat format = {});
void write_csv(std::ostream& out, const EmpiricalDistribution& dist, FloatFormat format = {});
void write_csv(std::ostream& out, const MomentReport& report, FloatFormat format = {});

nlohmann::json to_json(const PmfTable& table, FloatFormat format = {});
nlohmann::json to_json(const EmpiricalDistribution& dist, FloatFormat format = {});
nlohmann::json to_json(const MomentReport& report, FloatFormat format = {});

// Reads the JSON form of a PmfTable back. Throws std::invalid_argument on
// schema violations.
PmfTable pmf_table_from_json(const nlohmann::json& doc);

}  // namespace cycle_span
