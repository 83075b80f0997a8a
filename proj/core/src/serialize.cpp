#include "cycle_span/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace cycle_span {

namespace {

// Numeric JSON value carrying the same digits as the CSV rendering.
double rounded(double value, FloatFormat format) {
  const std::string text = format_double(value, format.digits);
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

nlohmann::json rational_entry(const Rational& q, FloatFormat format) {
  return {{"numerator", to_string(q.get_num())},
          {"denominator", to_string(q.get_den())},
          {"float", rounded(to_double(q), format)}};
}

void write_row(std::ostream& out, const std::string& key, const Rational& q, FloatFormat format) {
  out << key << ',' << q.get_num() << ',' << q.get_den() << ',' << format_rational(q, format);
}

}  // namespace

std::string format_rational(const Rational& q, FloatFormat format) {
  return format_double(to_double(q), format.digits);
}

void write_csv(std::ostream& out, const PmfTable& table, FloatFormat format) {
  out << "l,numerator,denominator,float\n";
  for (std::int64_t l = table.params.m(); l <= table.params.n(); ++l) {
    write_row(out, std::to_string(l), table.probability(l), format);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const EmpiricalDistribution& dist, FloatFormat format) {
  out << "# trials=" << dist.trials << '\n';
  out << "# seed=" << dist.seed << '\n';
  out << "# fixed_point_total=" << dist.fixed_point_total << '\n';
  out << "l,numerator,denominator,float,count\n";
  for (std::int64_t l = dist.params.m(); l <= dist.params.n(); ++l) {
    write_row(out, std::to_string(l), dist.frequency(l), format);
    out << ',' << dist.count(l) << '\n';
  }
}

void write_csv(std::ostream& out, const MomentReport& report, FloatFormat format) {
  out << "quantity,numerator,denominator,float\n";
  auto row = [&](const std::string& key, const Rational& q) {
    write_row(out, key, q, format);
    out << '\n';
  };
  row("expectation", report.expectation);
  row("variance", report.variance);
  for (const auto& [k, value] : report.rising_factorial) {
    row("rising_factorial_" + std::to_string(k), value);
  }
  row("full_coverage", report.full_coverage);
  row("uncovered_mean", report.uncovered.mean);
  row("uncovered_sd_squared", report.uncovered.sd_squared);
  out << "uncovered_sd,,," << format_double(report.uncovered.sd, format.digits) << '\n';
}

nlohmann::json to_json(const PmfTable& table, FloatFormat format) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::int64_t l = table.params.m(); l <= table.params.n(); ++l) {
    nlohmann::json entry = rational_entry(table.probability(l), format);
    entry["l"] = l;
    entries.push_back(std::move(entry));
  }
  return {{"n", table.params.n()}, {"m", table.params.m()}, {"entries", std::move(entries)}};
}

nlohmann::json to_json(const EmpiricalDistribution& dist, FloatFormat format) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::int64_t l = dist.params.m(); l <= dist.params.n(); ++l) {
    nlohmann::json entry = rational_entry(dist.frequency(l), format);
    entry["l"] = l;
    entry["count"] = dist.count(l);
    entries.push_back(std::move(entry));
  }
  return {{"n", dist.params.n()},
          {"m", dist.params.m()},
          {"trials", dist.trials},
          {"seed", dist.seed},
          {"fixed_point_total", dist.fixed_point_total},
          {"entries", std::move(entries)}};
}

nlohmann::json to_json(const MomentReport& report, FloatFormat format) {
  nlohmann::json rising = nlohmann::json::object();
  for (const auto& [k, value] : report.rising_factorial) {
    rising[std::to_string(k)] = rational_entry(value, format);
  }
  nlohmann::json uncovered = {
      {"mean", rational_entry(report.uncovered.mean, format)},
      {"sd_squared", rational_entry(report.uncovered.sd_squared, format)},
      {"sd", rounded(report.uncovered.sd, format)}};
  return {{"n", report.params.n()},
          {"m", report.params.m()},
          {"expectation", rational_entry(report.expectation, format)},
          {"variance", rational_entry(report.variance, format)},
          {"rising_factorial", std::move(rising)},
          {"full_coverage", rational_entry(report.full_coverage, format)},
          {"uncovered_fraction", std::move(uncovered)}};
}

PmfTable pmf_table_from_json(const nlohmann::json& doc) {
  try {
    const SpanParams params(doc.at("n").get<std::int64_t>(), doc.at("m").get<std::int64_t>());
    const auto& entries = doc.at("entries");
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(params.n() - params.m() + 1)) {
      throw std::invalid_argument("entries do not cover the support [m, n]");
    }
    PmfTable table{params, {}};
    std::int64_t expected_l = params.m();
    for (const auto& entry : entries) {
      if (entry.at("l").get<std::int64_t>() != expected_l++) {
        throw std::invalid_argument("entries out of order");
      }
      const BigInt num(entry.at("numerator").get<std::string>());
      const BigInt den(entry.at("denominator").get<std::string>());
      table.probs.push_back(ratio(num, den));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed pmf json: ") + e.what());
  }
}

}  // namespace cycle_span
