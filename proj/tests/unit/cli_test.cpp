#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "cli/command.hpp"
#include "cli/verify.hpp"

namespace cycle_span::cli {
namespace {

Command parse(std::initializer_list<std::string> tokens) {
  const std::vector<std::string> args(tokens);
  return parse_command(args);
}

std::string usage_error(std::initializer_list<std::string> tokens) {
  try {
    parse(tokens);
  } catch (const UsageError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseCommandTest, PmfWithFormat) {
  const Command cmd = parse({"pmf", "--n", "100", "--m", "20", "--format", "csv"});
  EXPECT_EQ(cmd.verb, Verb::kPmf);
  EXPECT_EQ(cmd.params(), SpanParams(100, 20));
  EXPECT_EQ(cmd.format, Format::kCsv);
  EXPECT_EQ(cmd.float_digits, 17);
  EXPECT_FALSE(cmd.l.has_value());
}

TEST(ParseCommandTest, ConditionalSample) {
  const Command cmd = parse(
      {"sample", "--n", "8", "--m", "3", "--condition-l", "5", "--count", "10", "--seed", "42"});
  EXPECT_EQ(cmd.verb, Verb::kSample);
  EXPECT_EQ(cmd.params(), SpanParams(8, 3));
  EXPECT_EQ(cmd.condition_l, 5);
  EXPECT_EQ(cmd.count, 10u);
  EXPECT_EQ(cmd.seed, 42u);
  EXPECT_FALSE(cmd.all_cycles_intersect);
}

TEST(ParseCommandTest, MExceedsN) {
  const std::string message = usage_error({"pmf", "--n", "5", "--m", "9"});
  EXPECT_NE(message.find("--m"), std::string::npos) << message;
  EXPECT_NE(message.find("exceeds"), std::string::npos) << message;
}

TEST(ParseCommandTest, ErrorsNameTheFlag) {
  EXPECT_NE(usage_error({"pmf", "--n", "10", "--m", "3", "--l", "2"}).find("--l"),
            std::string::npos);
  EXPECT_NE(usage_error({"pmf", "--n", "10", "--m", "3", "--l", "11"}).find("--l"),
            std::string::npos);
  EXPECT_NE(usage_error({"pmf", "--n", "10"}).find("--m"), std::string::npos);
  EXPECT_NE(usage_error({"sample", "--n", "8", "--m", "3", "--condition-l", "9"})
                .find("--condition-l"),
            std::string::npos);
  EXPECT_NE(usage_error({"sample", "--n", "8", "--condition-l", "5"}).find("--m"),
            std::string::npos);
  EXPECT_NE(usage_error({"figure", "--n", "50", "--m-list", "1,60"}).find("--m-list"),
            std::string::npos);
  EXPECT_NE(usage_error({"pmf", "--n", "10", "--m", "3", "--format", "xml"}).find("--format"),
            std::string::npos);
}

TEST(ParseCommandTest, ContradictorySampleFlags) {
  const std::string message = usage_error({"sample", "--n", "8", "--m", "3", "--condition-l", "5",
                                           "--all-cycles-intersect"});
  EXPECT_NE(message.find("contradictory"), std::string::npos) << message;
}

TEST(ParseCommandTest, UnknownVerbAndFlag) {
  EXPECT_FALSE(usage_error({"plot", "--n", "4"}).empty());
  EXPECT_FALSE(usage_error({"pmf", "--n", "4", "--m", "2", "--bogus"}).empty());
  EXPECT_FALSE(usage_error({}).empty());
}

TEST(ParseCommandTest, NegativeSeedRejected) {
  EXPECT_FALSE(usage_error({"simulate", "--n", "4", "--m", "2", "--seed", "-1"}).empty());
}

TEST(ParseCommandTest, FullSixtyFourBitSeed) {
  const Command cmd = parse({"simulate", "--n", "4", "--m", "2", "--seed", "18446744073709551615"});
  EXPECT_EQ(cmd.seed, 18446744073709551615u);
}

TEST(ParseCommandTest, VerifyBudget) {
  ::unsetenv("CYCLE_SPAN_MAX_N");
  EXPECT_EQ(parse({"verify", "--max-n", "7"}).max_n, 7u);
  const std::string message = usage_error({"verify", "--max-n", "9"});
  EXPECT_NE(message.find("--max-n"), std::string::npos) << message;
  EXPECT_NE(message.find("CYCLE_SPAN_MAX_N"), std::string::npos) << message;
}

TEST(ParseCommandTest, HelpIsNotAnError) {
  std::string help;
  const std::vector<std::string> args{"pmf", "--help"};
  parse_command(args, &help);
  EXPECT_NE(help.find("--method"), std::string::npos);
}

TEST(ParseCommandTest, FigureDefaults) {
  const Command cmd = parse({"figure"});
  EXPECT_EQ(cmd.n, 100);
  EXPECT_EQ(cmd.m_list, default_figure_m_list());
  EXPECT_EQ(parse({"figure", "--n", "10", "--m-list", "2,5"}).m_list,
            (std::vector<std::int64_t>{2, 5}));
}

TEST(ExecuteTest, MomentsAtThousandAndHundred) {
  const Report report = execute(parse({"moments", "--n", "1000", "--m", "100", "--format", "json"}));
  const auto doc = nlohmann::json::parse(report.payload);
  EXPECT_EQ(doc.at("expectation").at("numerator"), "100100");
  EXPECT_EQ(doc.at("expectation").at("denominator"), "101");
  EXPECT_EQ(doc.at("full_coverage").at("numerator"), "1");
  EXPECT_EQ(doc.at("full_coverage").at("denominator"), "10");
  EXPECT_EQ(doc.at("uncovered_fraction").at("mean").at("numerator"), "9");
  EXPECT_EQ(doc.at("uncovered_fraction").at("mean").at("denominator"), "1010");
}

TEST(ExecuteTest, PmfSingleRow) {
  const Report report = execute(parse({"pmf", "--n", "3", "--m", "2", "--l", "3"}));
  EXPECT_EQ(report.payload, "l,numerator,denominator,float\n3,2,3,0.66666666666666663\n");
  EXPECT_FALSE(report.seed.has_value());
}

TEST(ExecuteTest, AllMethodsAgree) {
  std::string reference;
  for (const char* method : {"closed", "product", "recurrence", "enumeration"}) {
    const Report report = execute(parse({"pmf", "--n", "6", "--m", "2", "--method", method}));
    if (reference.empty()) reference = report.payload;
    EXPECT_EQ(report.payload, reference) << method;
  }
}

TEST(ExecuteTest, VerifyUpToSeven) {
  const Report report = execute(parse({"verify", "--max-n", "7", "--threads", "0"}));
  EXPECT_TRUE(report.ok) << report.payload;
  EXPECT_EQ(report.payload.find(",fail,"), std::string::npos) << report.payload;
  for (const auto& r : run_verification(4)) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(ExecuteTest, SampleRowsHaveRequestedSpan) {
  const Report report = execute(parse(
      {"sample", "--n", "8", "--m", "3", "--condition-l", "5", "--count", "10", "--seed", "42"}));
  std::istringstream lines(report.payload);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "index,cycles,one_line,l");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "5") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 10);
}

TEST(ExecuteTest, GeneratedSeedIsEchoed) {
  const Report report = execute(parse({"sample", "--n", "6", "--count", "3"}));
  ASSERT_TRUE(report.seed.has_value());
  EXPECT_NE(report.command_echo.find("--seed " + std::to_string(*report.seed)), std::string::npos);
  EXPECT_NE(render(report).find("# seed: " + std::to_string(*report.seed)), std::string::npos);
}

// Re-running the echoed command reproduces the payload byte for byte.
class EchoRoundTripTest : public ::testing::TestWithParam<std::vector<std::string>> {};

TEST_P(EchoRoundTripTest, ReproducesPayload) {
  const Report first = execute(parse_command(GetParam()));
  std::vector<std::string> echoed = echo_arguments(parse_command(GetParam()));
  if (first.seed) {
    echoed = echo_arguments([&] {
      Command cmd = parse_command(GetParam());
      cmd.seed = first.seed;
      return cmd;
    }());
  }
  EXPECT_EQ(first.command_echo, "cycle-span " + [&] {
    std::string joined;
    for (const auto& a : echoed) joined += (joined.empty() ? "" : " ") + a;
    return joined;
  }());
  const Report second = execute(parse_command(echoed));
  EXPECT_EQ(second.payload, first.payload);
  EXPECT_EQ(second.command_echo, first.command_echo);
}

INSTANTIATE_TEST_SUITE_P(
    Verbs, EchoRoundTripTest,
    ::testing::Values(
        std::vector<std::string>{"pmf", "--n", "30", "--m", "4", "--float-digits", "0"},
        std::vector<std::string>{"pmf", "--n", "7", "--m", "3", "--method", "recurrence",
                                 "--format", "json"},
        std::vector<std::string>{"moments", "--n", "50", "--m", "5", "--k", "6"},
        std::vector<std::string>{"sample", "--n", "9", "--m", "2", "--count", "5"},
        std::vector<std::string>{"sample", "--n", "9", "--m", "2", "--all-cycles-intersect",
                                 "--seed", "3", "--format", "json"},
        std::vector<std::string>{"simulate", "--n", "20", "--m", "3", "--trials", "2000",
                                 "--threads", "3"},
        std::vector<std::string>{"verify", "--max-n", "5"},
        std::vector<std::string>{"figure", "--n", "12", "--m-list", "1,6,12", "--float-digits",
                                 "10"}));

TEST(RenderTest, CsvMetadataLines) {
  const Report report = execute(parse({"simulate", "--n", "5", "--m", "2", "--trials", "100",
                                       "--seed", "7"}));
  const std::string text = render(report);
  EXPECT_EQ(text.rfind("# cycle-span ", 0), 0u);
  EXPECT_NE(text.find("# command: cycle-span simulate --n 5 --m 2 --seed 7 --trials 100"),
            std::string::npos);
  EXPECT_NE(text.find("# seed: 7\n"), std::string::npos);
  EXPECT_NE(text.find("l,numerator,denominator,float,count\n"), std::string::npos);
}

TEST(RenderTest, JsonWrapsPayload) {
  const Report report = execute(parse({"pmf", "--n", "4", "--m", "2", "--format", "json"}));
  const auto doc = nlohmann::json::parse(render(report));
  EXPECT_EQ(doc.at("metadata").at("command"), report.command_echo);
  EXPECT_TRUE(doc.at("metadata").at("seed").is_null());
  EXPECT_EQ(doc.at("payload").at("entries").size(), 3u);
}

TEST(FigureTest, Anchors) {
  const std::vector<std::int64_t> ms{1, 50, 70};
  const FigureDataset data = emit_figure_data(100, ms);
  ASSERT_EQ(data.blocks.size(), 3u);

  for (double v : data.blocks[0].values) EXPECT_EQ(v, 0.01);
  EXPECT_EQ(data.blocks[0].expectation_marker, 50.5);

  EXPECT_EQ(data.blocks[1].values[99], 0.5);
  EXPECT_EQ(data.blocks[1].values[48], 0.0);
  EXPECT_EQ(data.blocks[1].expectation_marker, 99.01960784313725);

  EXPECT_EQ(data.blocks[2].values[98], 0.21212121212121213);
}

TEST(FigureTest, CsvBlocks) {
  const Report report = execute(parse({"figure", "--n", "3", "--m-list", "2"}));
  EXPECT_EQ(report.payload,
            "# m=2 expectation=2.6666666666666665\n"
            "l,numerator,denominator,float\n"
            "1,0,1,0\n"
            "2,1,3,0.33333333333333331\n"
            "3,2,3,0.66666666666666663\n");
}

TEST(FigureTest, InvalidList) {
  EXPECT_THROW(emit_figure_data(10, std::vector<std::int64_t>{}), std::invalid_argument);
  EXPECT_THROW(emit_figure_data(10, std::vector<std::int64_t>{11}), std::out_of_range);
}

}  // namespace
}  // namespace cycle_span::cli
