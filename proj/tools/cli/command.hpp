#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycle_span/distribution.hpp"

namespace cycle_span::cli {

enum class Verb { kPmf, kMoments, kSample, kSimulate, kVerify, kFigure };
enum class Format { kCsv, kJson };

// Which route computes the `pmf` table.
enum class PmfMethod { kClosed, kProduct, kRecurrence, kEnumeration };

// A validated invocation. Fields that do not apply to `verb` keep their
// defaults.
struct Command {
  Verb verb = Verb::kPmf;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;

  std::optional<std::int64_t> l;  // pmf: single row
  PmfMethod method = PmfMethod::kClosed;
  std::int64_t max_k = 4;          // moments

  std::optional<std::uint64_t> seed;  // sample, simulate
  std::uint64_t count = 1;            // sample
  std::optional<std::int64_t> condition_l;
  bool all_cycles_intersect = false;
  std::uint64_t trials = 100000;  // simulate
  unsigned threads = 1;           // simulate, verify

  std::size_t max_n = 8;                // verify
  std::vector<std::int64_t> m_list;     // figure

  Format format = Format::kCsv;
  int float_digits = 17;
  std::optional<std::string> output;

  SpanParams params() const { return SpanParams(n, m.value_or(0)); }
};

// Bad command line. The message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `args` excludes the program name. Throws UsageError, or returns normally
// for --help with `help` set to the usage text.
Command parse_command(std::span<const std::string> args, std::string* help = nullptr);

// Canonical argument list that reproduces `cmd` (without --output).
std::vector<std::string> echo_arguments(const Command& cmd);
std::string echo(const Command& cmd);

struct Report {
  std::string command_echo;
  std::optional<std::uint64_t> seed;
  std::string version;
  Format format = Format::kCsv;
  std::string payload;
  bool ok = true;  // false when `verify` found a failing identity
};

// Runs `cmd`. A missing seed is generated and recorded in the echo.
Report execute(Command cmd);

// Metadata followed by the payload: `# key: value` comment lines for CSV, a
// {"metadata", "payload"} object for JSON.
std::string render(const Report& report);

// One block per m: the distribution over all of [1, n] (zeros below m) and
// the expectation marker m (n+1)/(m+1).
struct FigureBlock {
  std::int64_t m = 0;
  std::vector<Rational> exact;  // exact[l - 1]
  std::vector<double> values;   // values[l - 1]
  Rational expectation;
  double expectation_marker = 0.0;
};

struct FigureDataset {
  std::int64_t n = 0;
  std::vector<FigureBlock> blocks;
};

// Throws std::out_of_range if some m lies outside [1, n] and
// std::invalid_argument when m_list is empty.
FigureDataset emit_figure_data(std::int64_t n, std::span<const std::int64_t> m_list);

// m values plotted by default for n = 100.
std::vector<std::int64_t> default_figure_m_list();

}  // namespace cycle_span::cli
