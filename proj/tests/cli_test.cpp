#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <iterator>
#include <sstream>

#include "classic/cli.hpp"

namespace classic {
namespace {

const std::string kData = CLASSIC_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream f(data("golden/" + name));
  return std::string(std::istreambuf_iterator<char>(f), {});
}

TEST(Cli, LemonIsSubsumedByCar) {
  Result r = run({"subsumes", "--semantics", "partial", data("lemon_vs_car.cl")});
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_EQ(r.out, golden("subsumes_lemon_car.out"));
}

TEST(Cli, CarIsNotSubsumedByLemon) {
  const std::string text = "@concept Car\n@attribute model\n\nCar\n\n(and Car (same-as (model) (model)))\n";
  Result r = run({"subsumes", "-"}, text);
  EXPECT_EQ(r.code, cli::kFalse);
  EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, NormalizeGolden) {
  Result r = run({"normalize", data("lemon_vs_car.cl")});
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_EQ(r.out, golden("normalize_lemon.out"));
}

TEST(Cli, PartialLcsGolden) {
  Result r = run({"lcs", data("c0_d0.cl")});
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_EQ(r.out, golden("lcs_partial_c0_d0.out"));
}

TEST(Cli, TotalLcsMissingReportsWitness) {
  Result r = run({"lcs", "--semantics", "total", data("c0_d0.cl")});
  EXPECT_EQ(r.code, cli::kLcsNotExist);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, golden("lcs_total_c0_d0.err"));
}

TEST(Cli, LcsExistsVerdicts) {
  EXPECT_EQ(run({"lcs-exists", "--semantics", "total", data("c0_d0.cl")}).code, cli::kFalse);
  EXPECT_EQ(run({"lcs-exists", data("c0_d0.cl")}).code, cli::kTrue);
  const std::string tree = "@attribute a b\n(same-as (a) (b))\n(same-as (a a) (b a))\n";
  Result r = run({"lcs", "--semantics", "total", "-"}, tree);
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_TRUE(r.out == "(same-as (a a) (b a))\n" || r.out == "(same-as (b a) (a a))\n") << r.out;
}

TEST(Cli, UnbalancedInputIsAUsageError) {
  Result r = run({"parse", data("bad.cl")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("unbalanced"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate", "-"}).code, cli::kUsage);
  EXPECT_EQ(run({"subsumes", "--semantics", "fuzzy", "-"}).code, cli::kUsage);
  EXPECT_EQ(run({"subsumes", data("missing.cl")}).code, cli::kUsage);
  EXPECT_EQ(run({"subsumes", "-"}, "@concept A\nA\n").code, cli::kUsage);
  EXPECT_EQ(run({"oracle-check", "--max-domain", "9", data("c0_d0.cl")}).code, cli::kUsage);
}

TEST(Cli, TotalModeRejectsRichConcepts) {
  Result r = run({"subsumes", "--semantics", "total", data("lemon_vs_car.cl")});
  EXPECT_EQ(r.code, cli::kSemanticMode);
  EXPECT_NE(r.err.find("total semantics"), std::string::npos);
}

TEST(Cli, SatAndEquiv) {
  EXPECT_EQ(run({"sat", "-"}, "BOTTOM\n").code, cli::kFalse);
  EXPECT_EQ(run({"sat", "-"}, "@role r\n(all r BOTTOM)\n").code, cli::kTrue);
  EXPECT_EQ(run({"equiv", "-"}, "@attribute a\n(at-least 1 a)\n(same-as (a) (a))\n").code, cli::kTrue);
  EXPECT_EQ(run({"equiv", "--semantics", "total", "-"}, "@attribute a b\n(same-as (a) (b))\n(same-as (a a) (b a))\n").code,
            cli::kFalse);
}

TEST(Cli, JsonOutput) {
  Result r = run({"subsumes", "--json", data("lemon_vs_car.cl")});
  ASSERT_EQ(r.code, cli::kTrue);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], true);
  EXPECT_EQ(j["stats"]["nodes"], 4);
  EXPECT_EQ(j["stats"]["edges"], 4);
  EXPECT_TRUE(j["stats"]["time_ms"].is_number());

  r = run({"lcs-exists", "--semantics", "total", "--json", data("c0_d0.cl")});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], false);
  EXPECT_EQ(j["witness"]["attribute"], "d");
  EXPECT_EQ(j["witness"]["first_letter"], "c");
  EXPECT_EQ(j["witness"]["pump"]["loop"], nlohmann::json::array({"c"}));
}

TEST(Cli, DotAndAutomata) {
  Result r = run({"graph", data("c0_d0.cl")});
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  r = run({"normalize", "--dot", data("c0_d0.cl")});
  EXPECT_NE(r.out.find("digraph"), std::string::npos);
  r = run({"lcs-exists", "--semantics", "total", "--debug-automata", data("c0_d0.cl")});
  EXPECT_NE(r.err.find("// configuration"), std::string::npos);
  EXPECT_NE(r.err.find("digraph"), std::string::npos);
}

TEST(Cli, OracleCheckAgreesOnExamples) {
  Result r = run({"oracle-check", data("c0_d0.cl")});
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_NE(r.out.find("countermodel at element"), std::string::npos);
  r = run({"oracle-check", "--max-domain", "2", "-"}, "@concept A B\n(and A B)\nA\n");
  EXPECT_EQ(r.code, cli::kTrue);
  EXPECT_NE(r.out.find("none up to domain size 2"), std::string::npos);
}

}  // namespace
}  // namespace classic
