#include "cli/command.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cli/verify.hpp"
#include "cycle_span/monte_carlo.hpp"
#include "cycle_span/oracle.hpp"
#include "cycle_span/samplers.hpp"
#include "cycle_span/serialize.hpp"
#include "cycle_span/version.hpp"

namespace cycle_span::cli {

namespace {

constexpr const char* kProgram = "cycle-span";

const char* verb_name(Verb verb) {
  switch (verb) {
    case Verb::kPmf: return "pmf";
    case Verb::kMoments: return "moments";
    case Verb::kSample: return "sample";
    case Verb::kSimulate: return "simulate";
    case Verb::kVerify: return "verify";
    case Verb::kFigure: return "figure";
  }
  return "";
}

const char* method_name(PmfMethod method) {
  switch (method) {
    case PmfMethod::kClosed: return "closed";
    case PmfMethod::kProduct: return "product";
    case PmfMethod::kRecurrence: return "recurrence";
    case PmfMethod::kEnumeration: return "enumeration";
  }
  return "";
}

const std::map<std::string, PmfMethod> kMethods = {{"closed", PmfMethod::kClosed},
                                                   {"product", PmfMethod::kProduct},
                                                   {"recurrence", PmfMethod::kRecurrence},
                                                   {"enumeration", PmfMethod::kEnumeration}};
const std::map<std::string, Format> kFormats = {{"csv", Format::kCsv}, {"json", Format::kJson}};

void require_m_within_n(const Command& cmd) {
  if (*cmd.m > cmd.n) {
    throw UsageError("--m " + std::to_string(*cmd.m) + " exceeds --n " + std::to_string(cmd.n));
  }
}

void require_in_support(const Command& cmd, const std::string& flag, std::int64_t l) {
  if (l < *cmd.m || l > cmd.n) {
    throw UsageError(flag + " " + std::to_string(l) + " is outside [--m, --n] = [" +
                     std::to_string(*cmd.m) + ", " + std::to_string(cmd.n) + "]");
  }
}

void require_enumerable(std::size_t n, const std::string& flag) {
  const EnumerationBudget budget = EnumerationBudget::from_environment();
  if (n > budget.max_n()) {
    throw UsageError(flag + " " + std::to_string(n) + " exceeds the enumeration budget of " +
                     std::to_string(budget.max_n()) + "; set " +
                     std::string(EnumerationBudget::kEnvVar) + " to raise it");
  }
}

// Per-verb checks that CLI11 cannot express on its own.
void validate(Command& cmd) {
  switch (cmd.verb) {
    case Verb::kPmf:
      require_m_within_n(cmd);
      if (cmd.l) require_in_support(cmd, "--l", *cmd.l);
      if (cmd.method == PmfMethod::kEnumeration) {
        require_enumerable(static_cast<std::size_t>(cmd.n), "--n");
      }
      break;
    case Verb::kMoments:
    case Verb::kSimulate:
      require_m_within_n(cmd);
      break;
    case Verb::kSample:
      if (cmd.condition_l && cmd.all_cycles_intersect) {
        throw UsageError("--condition-l and --all-cycles-intersect are contradictory");
      }
      if ((cmd.condition_l || cmd.all_cycles_intersect) && !cmd.m) {
        throw UsageError(cmd.condition_l ? "--condition-l requires --m"
                                         : "--all-cycles-intersect requires --m");
      }
      if (cmd.m) require_m_within_n(cmd);
      if (cmd.condition_l) require_in_support(cmd, "--condition-l", *cmd.condition_l);
      break;
    case Verb::kVerify:
      require_enumerable(cmd.max_n, "--max-n");
      break;
    case Verb::kFigure:
      if (cmd.m_list.empty()) cmd.m_list = default_figure_m_list();
      for (std::int64_t m : cmd.m_list) {
        if (m < 1 || m > cmd.n) {
          throw UsageError("--m-list entry " + std::to_string(m) + " is outside [1, --n]");
        }
      }
      break;
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

PmfTable compute_pmf(const Command& cmd) {
  const SpanParams params = cmd.params();
  switch (cmd.method) {
    case PmfMethod::kClosed:
      return pmf_table(params);
    case PmfMethod::kProduct: {
      PmfTable table{params, {}};
      for (std::int64_t l = params.m(); l <= params.n(); ++l) {
        table.probs.push_back(pmf_product(params, l));
      }
      return table;
    }
    case PmfMethod::kRecurrence:
      return pmf_recurrence(params);
    case PmfMethod::kEnumeration:
      return exact_distribution_by_enumeration(params, EnumerationBudget::from_environment(), 0);
  }
  return pmf_table(params);
}

std::string pmf_payload(const Command& cmd, FloatFormat format) {
  const PmfTable table = compute_pmf(cmd);
  if (cmd.format == Format::kJson) {
    nlohmann::json doc = to_json(table, format);
    if (cmd.l) {
      auto& entries = doc["entries"];
      entries = nlohmann::json::array({entries.at(static_cast<std::size_t>(*cmd.l - *cmd.m))});
    }
    return doc.dump(2) + '\n';
  }
  std::ostringstream out;
  if (!cmd.l) {
    write_csv(out, table, format);
    return out.str();
  }
  const Rational q = table.probability(*cmd.l);
  out << "l,numerator,denominator,float\n"
      << *cmd.l << ',' << q.get_num() << ',' << q.get_den() << ',' << format_rational(q, format)
      << '\n';
  return out.str();
}

std::string sample_payload(const Command& cmd) {
  struct Row {
    Permutation perm;
    std::optional<std::size_t> span;
  };
  std::vector<Row> rows;
  for (std::uint64_t i = 0; i < cmd.count; ++i) {
    RandomSource rng = RandomSource::for_stream(*cmd.seed, i);
    Permutation perm = [&] {
      if (cmd.condition_l) return sample_conditional_span(cmd.params(), *cmd.condition_l, rng);
      if (cmd.all_cycles_intersect) return sample_all_cycles_intersect(cmd.params(), rng);
      return sample_uniform(static_cast<std::size_t>(cmd.n), rng);
    }();
    std::optional<std::size_t> span;
    if (cmd.m) span = span_length(perm, static_cast<std::size_t>(*cmd.m));
    rows.push_back({std::move(perm), span});
  }

  if (cmd.format == Format::kJson) {
    nlohmann::json samples = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json entry = {{"index", i},
                              {"cycles", to_cycle_text(rows[i].perm)},
                              {"one_line", to_one_line(rows[i].perm)}};
      entry["l"] = rows[i].span ? nlohmann::json(*rows[i].span) : nlohmann::json(nullptr);
      samples.push_back(std::move(entry));
    }
    nlohmann::json doc = {{"n", cmd.n}, {"samples", std::move(samples)}};
    doc["m"] = cmd.m ? nlohmann::json(*cmd.m) : nlohmann::json(nullptr);
    return doc.dump(2) + '\n';
  }
  std::ostringstream out;
  out << "index,cycles,one_line,l\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i << ',' << to_cycle_text(rows[i].perm) << ',' << to_one_line(rows[i].perm) << ',';
    if (rows[i].span) out << *rows[i].span;
    out << '\n';
  }
  return out.str();
}

std::string verify_payload(const Command& cmd, bool& ok) {
  const auto results = run_verification(cmd.max_n, cmd.threads);
  ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (cmd.format == Format::kJson) {
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& r : results) {
      identities.push_back({{"identity", r.name},
                            {"status", r.passed ? "pass" : "fail"},
                            {"detail", r.detail}});
    }
    return nlohmann::json{{"max_n", cmd.max_n}, {"passed", ok}, {"identities", identities}}
               .dump(2) +
           '\n';
  }
  std::ostringstream out;
  out << "identity,status,detail\n";
  for (const auto& r : results) {
    out << r.name << ',' << (r.passed ? "pass" : "fail") << ',' << csv_field(r.detail) << '\n';
  }
  return out.str();
}

std::string figure_payload(const Command& cmd, FloatFormat format) {
  const FigureDataset data = emit_figure_data(cmd.n, cmd.m_list);
  if (cmd.format == Format::kJson) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : data.blocks) {
      nlohmann::json entries = nlohmann::json::array();
      for (std::size_t i = 0; i < block.exact.size(); ++i) {
        entries.push_back({{"l", i + 1},
                           {"numerator", to_string(block.exact[i].get_num())},
                           {"denominator", to_string(block.exact[i].get_den())},
                           {"float", block.values[i]}});
      }
      blocks.push_back({{"m", block.m},
                        {"expectation", {{"numerator", to_string(block.expectation.get_num())},
                                         {"denominator", to_string(block.expectation.get_den())},
                                         {"float", block.expectation_marker}}},
                        {"entries", std::move(entries)}});
    }
    return nlohmann::json{{"n", data.n}, {"blocks", std::move(blocks)}}.dump(2) + '\n';
  }
  std::ostringstream out;
  for (const auto& block : data.blocks) {
    out << "# m=" << block.m
        << " expectation=" << format_double(block.expectation_marker, format.digits) << '\n';
    out << "l,numerator,denominator,float\n";
    for (std::size_t i = 0; i < block.exact.size(); ++i) {
      out << i + 1 << ',' << block.exact[i].get_num() << ',' << block.exact[i].get_den() << ','
          << format_double(block.values[i], format.digits) << '\n';
    }
  }
  return out.str();
}

}  // namespace

Command parse_command(std::span<const std::string> args, std::string* help) {
  CLI::App app{"Exact distribution of the total length of the cycles of a uniform random "
               "permutation of [n] that meet [m].",
               kProgram};
  app.require_subcommand(1);

  Command cmd;
  std::string format = "csv";
  std::string method = "closed";
  std::optional<std::string> output;
  std::int64_t m_value = 0;
  std::uint64_t seed_value = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--float-digits", cmd.float_digits,
                    "significant digits of float columns, 0 for shortest round trip")
        ->check(CLI::Range(0, 40));
    sub->add_option("--output", output, "write to this file instead of standard output");
  };
  auto add_n = [&](CLI::App* sub) {
    return sub->add_option("--n", cmd.n, "size of the ground set")->check(CLI::PositiveNumber);
  };
  auto add_m = [&](CLI::App* sub) {
    return sub->add_option("--m", m_value, "size of the marked prefix")
        ->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* sub) {
    return sub->add_option("--seed", seed_value, "64-bit unsigned seed; generated when omitted");
  };

  CLI::App* pmf = app.add_subcommand("pmf", "exact probability table of L");
  add_n(pmf)->required();
  add_m(pmf)->required();
  pmf->add_option("--l", cmd.l, "single value of L")->check(CLI::PositiveNumber);
  pmf->add_option("--method", method, "closed, product, recurrence or enumeration")
      ->check(CLI::IsMember({"closed", "product", "recurrence", "enumeration"}));
  add_common(pmf);

  CLI::App* moments = app.add_subcommand("moments", "expectation, variance and related values");
  add_n(moments)->required();
  add_m(moments)->required();
  moments->add_option("--k", cmd.max_k, "highest rising-factorial moment")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));
  add_common(moments);

  CLI::App* sample = app.add_subcommand("sample", "draw random permutations");
  add_n(sample)->required();
  add_m(sample);
  add_seed(sample);
  sample->add_option("--count", cmd.count, "number of permutations")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
  sample->add_option("--condition-l", cmd.condition_l, "condition on L taking this value")
      ->check(CLI::PositiveNumber);
  sample->add_flag("--all-cycles-intersect", cmd.all_cycles_intersect,
                   "only permutations whose every cycle meets [m]");
  add_common(sample);

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the distribution");
  add_n(simulate)->required();
  add_m(simulate)->required();
  add_seed(simulate);
  simulate->add_option("--trials", cmd.trials, "number of permutations drawn")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--threads", cmd.threads, "worker threads, 0 for all cores");
  add_common(simulate);

  CLI::App* verify = app.add_subcommand("verify", "check every identity against enumeration");
  verify->add_option("--max-n", cmd.max_n, "largest n to enumerate")->check(CLI::PositiveNumber);
  verify->add_option("--threads", cmd.threads, "worker threads, 0 for all cores");
  add_common(verify);

  CLI::App* figure = app.add_subcommand("figure", "plot-ready distribution blocks");
  add_n(figure)->default_val(100);
  figure->add_option("--m-list", cmd.m_list, "comma-separated values of m")->delimiter(',');
  add_common(figure);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help) {
      const auto subs = app.get_subcommands();
      *help = subs.empty() ? app.help() : subs.front()->help();
    }
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  for (Verb verb : {Verb::kPmf, Verb::kMoments, Verb::kSample, Verb::kSimulate, Verb::kVerify,
                    Verb::kFigure}) {
    if (name == verb_name(verb)) cmd.verb = verb;
  }
  auto given = [&](const std::string& flag) {
    const CLI::Option* option = chosen->get_option_no_throw(flag);
    return option != nullptr && option->count() > 0;
  };
  if (given("--m")) cmd.m = m_value;
  if (given("--seed")) cmd.seed = seed_value;
  cmd.format = kFormats.at(format);
  cmd.method = kMethods.at(method);
  cmd.output = output;
  if (help) help->clear();

  validate(cmd);
  return cmd;
}

std::vector<std::string> echo_arguments(const Command& cmd) {
  std::vector<std::string> args{verb_name(cmd.verb)};
  auto add = [&](const std::string& flag, const auto& value) {
    args.push_back(flag);
    if constexpr (std::is_convertible_v<decltype(value), std::string>) {
      args.push_back(value);
    } else {
      args.push_back(std::to_string(value));
    }
  };

  switch (cmd.verb) {
    case Verb::kPmf:
      add("--n", cmd.n);
      add("--m", *cmd.m);
      if (cmd.l) add("--l", *cmd.l);
      add("--method", std::string(method_name(cmd.method)));
      break;
    case Verb::kMoments:
      add("--n", cmd.n);
      add("--m", *cmd.m);
      add("--k", cmd.max_k);
      break;
    case Verb::kSample:
      add("--n", cmd.n);
      if (cmd.m) add("--m", *cmd.m);
      if (cmd.seed) add("--seed", *cmd.seed);
      add("--count", cmd.count);
      if (cmd.condition_l) add("--condition-l", *cmd.condition_l);
      if (cmd.all_cycles_intersect) args.emplace_back("--all-cycles-intersect");
      break;
    case Verb::kSimulate:
      add("--n", cmd.n);
      add("--m", *cmd.m);
      if (cmd.seed) add("--seed", *cmd.seed);
      add("--trials", cmd.trials);
      add("--threads", cmd.threads);
      break;
    case Verb::kVerify:
      add("--max-n", cmd.max_n);
      add("--threads", cmd.threads);
      break;
    case Verb::kFigure: {
      add("--n", cmd.n);
      std::string list;
      for (std::int64_t m : cmd.m_list) list += (list.empty() ? "" : ",") + std::to_string(m);
      add("--m-list", list);
      break;
    }
  }
  add("--format", std::string(cmd.format == Format::kJson ? "json" : "csv"));
  add("--float-digits", cmd.float_digits);
  return args;
}

std::string echo(const Command& cmd) {
  std::string text = kProgram;
  for (const auto& arg : echo_arguments(cmd)) text += ' ' + arg;
  return text;
}

Report execute(Command cmd) {
  const bool randomized = cmd.verb == Verb::kSample || cmd.verb == Verb::kSimulate;
  if (randomized && !cmd.seed) {
    std::random_device device;
    cmd.seed = (std::uint64_t{device()} << 32) | device();
    std::cerr << "generated seed: " << *cmd.seed << '\n';
  }

  Report report;
  report.command_echo = echo(cmd);
  report.seed = cmd.seed;
  report.version = kVersion;
  report.format = cmd.format;
  const FloatFormat format{cmd.float_digits};
  const bool json = cmd.format == Format::kJson;

  std::ostringstream out;
  switch (cmd.verb) {
    case Verb::kPmf:
      out << pmf_payload(cmd, format);
      break;
    case Verb::kMoments: {
      const MomentReport moments = moment_report(cmd.params(), cmd.max_k);
      if (json) {
        out << to_json(moments, format).dump(2) << '\n';
      } else {
        write_csv(out, moments, format);
      }
      break;
    }
    case Verb::kSample:
      out << sample_payload(cmd);
      break;
    case Verb::kSimulate: {
      const EmpiricalDistribution dist =
          monte_carlo(cmd.params(), cmd.trials, *cmd.seed, cmd.threads);
      if (json) {
        out << to_json(dist, format).dump(2) << '\n';
      } else {
        write_csv(out, dist, format);
      }
      break;
    }
    case Verb::kVerify:
      out << verify_payload(cmd, report.ok);
      break;
    case Verb::kFigure:
      out << figure_payload(cmd, format);
      break;
  }
  report.payload = out.str();
  return report;
}

std::string render(const Report& report) {
  if (report.format == Format::kJson) {
    nlohmann::json metadata = {{"command", report.command_echo}, {"version", report.version}};
    metadata["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
    nlohmann::json doc = {{"metadata", std::move(metadata)},
                          {"payload", nlohmann::json::parse(report.payload)}};
    return doc.dump(2) + '\n';
  }
  std::string text = "# cycle-span " + report.version + '\n';
  text += "# command: " + report.command_echo + '\n';
  if (report.seed) text += "# seed: " + std::to_string(*report.seed) + '\n';
  return text + report.payload;
}

FigureDataset emit_figure_data(std::int64_t n, std::span<const std::int64_t> m_list) {
  if (m_list.empty()) throw std::invalid_argument("m_list is empty");
  FigureDataset data{n, {}};
  for (std::int64_t m : m_list) {
    const SpanParams params(n, m);
    const PmfTable table = pmf_table(params);
    FigureBlock block;
    block.m = m;
    for (std::int64_t l = 1; l <= n; ++l) {
      block.exact.push_back(table.probability(l));
      block.values.push_back(to_double(block.exact.back()));
    }
    block.expectation = expectation(params);
    block.expectation_marker = to_double(block.expectation);
    data.blocks.push_back(std::move(block));
  }
  return data;
}

std::vector<std::int64_t> default_figure_m_list() {
  return {1, 10, 20, 30, 40, 50, 60, 70, 80, 90};
}

}  // namespace cycle_span::cli
