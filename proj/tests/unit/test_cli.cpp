#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace chardeg::cli {
namespace {

struct Invocation {
  CommandResult result;
  std::string diag;
};

Invocation run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chardeg");
  std::ostringstream diag;
  Invocation r{run(args, diag), {}};
  r.diag = diag.str();
  return r;
}

nlohmann::json parsed(const Invocation& r) { return nlohmann::json::parse(r.result.output); }

TEST(Cli, HookGolden) {
  const Invocation r = run_cli({"hook", "--partition", "3,2,2"});
  EXPECT_EQ(r.result.exit_code, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["H"], "240");
  EXPECT_EQ(j["degree"], "21");
  EXPECT_EQ(j["status"], "pass");
}

TEST(Cli, ExponentialPartitionSyntax) {
  const auto j = parsed(run_cli({"degree", "--partition", "7^7"}));
  EXPECT_EQ(j["degree"], "475073684264389879228560");
}

TEST(Cli, Thm21Golden) {
  const Invocation r = run_cli({"thm21", "--family", "linear", "--rank", "4", "--q", "2"});
  EXPECT_EQ(r.result.exit_code, 0);
  const auto j = parsed(r);
  EXPECT_EQ(j["ratio"], "64/14");
  EXPECT_EQ(j["order"], "20160");
}

TEST(Cli, Prop42RangeGolden) {
  const Invocation r = run_cli({"prop42", "--from", "7", "--to", "100"});
  EXPECT_EQ(r.result.status, Status::pass);
  const auto j = parsed(r);
  EXPECT_EQ(j["records"].size(), 94u);
  EXPECT_EQ(j["records"][0]["witness"], "3,2,2");
  EXPECT_EQ(j["records"][1]["witness"], "4,2,2");
}

TEST(Cli, JsonLinesOnePerRecord) {
  const Invocation r = run_cli({"prop42", "--from", "7", "--to", "20", "--jsonl"});
  std::istringstream in(r.result.output);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_TRUE(nlohmann::json::accept(line));
    ++count;
  }
  EXPECT_EQ(count, 15);  // 14 records and a summary
}

TEST(Cli, RerunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"prop42", "--from", "40", "--to", "70", "--parallel", "3"},
      {"sweep", "--rank-max", "5", "--q-max", "9", "--exceptional-q-max", "32", "--parallel", "2"},
      {"sweep", "--rank-max", "4", "--q-max", "8", "--csv"},
      {"sporadic-check"},
  };
  for (const auto& c : commands) {
    EXPECT_EQ(run_cli(c).result.output, run_cli(c).result.output);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"prop23", "--rat-g", "2", "--rat-gn", "1", "--order-n", "16384"})
                .result.exit_code,
            0);
  EXPECT_EQ(run_cli({"prop23", "--rat-g", "2", "--rat-gn", "1", "--order-n", "16385"})
                .result.exit_code,
            1);
  const Invocation unknown = run_cli({"frobnicate"});
  EXPECT_EQ(unknown.result.exit_code, 2);
  EXPECT_FALSE(unknown.diag.empty());
  EXPECT_EQ(run_cli({"hook", "--bogus", "1"}).result.exit_code, 2);
  EXPECT_EQ(run_cli({"hook", "--partition", "2,3"}).result.exit_code, 2);
  EXPECT_EQ(run_cli({"order", "--family", "linear", "--rank", "2", "--q", "7"}).result.exit_code,
            2);
  EXPECT_EQ(run_cli({"thmB", "--rat-g", "2", "--index", "2097153"}).result.exit_code, 1);
  EXPECT_EQ(run_cli({"--help"}).result.exit_code, 0);
}

TEST(Cli, PrecisionEnvStartsRefinement) {
  ::setenv("CHARDEG_PRECISION", "3", 1);
  const Invocation r = run_cli({"lemma43", "--constant"});
  EXPECT_EQ(r.result.exit_code, 0);
  EXPECT_GE(parsed(r)["digits"].get<int>(), 3);
  ::setenv("CHARDEG_PRECISION", "0", 1);
  EXPECT_EQ(run_cli({"lemma43", "--constant"}).result.exit_code, 2);
  ::setenv("CHARDEG_PRECISION", "401", 1);
  EXPECT_EQ(run_cli({"lemma43", "--constant"}).result.exit_code, 2);
  ::unsetenv("CHARDEG_PRECISION");
  EXPECT_EQ(exit_code_for(Status::inconclusive), 3);
}

TEST(Cli, StructureCalculators) {
  EXPECT_EQ(parsed(run_cli({"maroti", "--n", "5", "--d", "4"}))["bound"], "69");
  EXPECT_EQ(parsed(run_cli({"prop32", "--order-n", "60"}))["bound"], "348");
  const auto fe = parsed(run_cli({"example-frobenius", "--m", "10"}));
  EXPECT_EQ(fe["rat"], "1");
  EXPECT_EQ(fe["fitting_index"], "10");
  const auto ee = parsed(run_cli({"example-extraspecial", "--p", "2", "--i", "10"}));
  EXPECT_EQ(ee["rat"], "1025/1024");
  const auto cs = parsed(run_cli(
      {"chiefseries-bound", "--json", R"({"factors":[{"order":"20160","multiplicity":2}]})"}));
  EXPECT_EQ(cs["rat14_lower_bound"], "406425600");
  EXPECT_EQ(run_cli({"out-bound", "--x", "2", "--y", "60"}).result.exit_code, 0);
}

TEST(Cli, DataCommands) {
  const std::string dir = CHARDEG_TEST_DATA_DIR;
  EXPECT_EQ(run_cli({"--data", dir, "validate-data"}).result.exit_code, 0);
  const auto sc = parsed(run_cli({"--data", dir, "sporadic-check"}));
  EXPECT_EQ(sc["failed"], 0);
  EXPECT_EQ(sc["passed"], 28);
  EXPECT_EQ(parsed(run_cli({"--data", dir, "rat", "--name", "PSL3(4)"}))["rat"], "16/5");
  EXPECT_EQ(parsed(run_cli({"rat", "--degrees", "1,4,5,6"}))["rat"], "3/2");
  EXPECT_EQ(run_cli({"--data", dir, "out-bound", "--name", "M12"}).result.exit_code, 0);
  EXPECT_EQ(run_cli({"--data", "/nonexistent", "validate-data"}).result.exit_code, 2);
}

TEST(Cli, CyclotomicAndLieQueries) {
  const auto c = parsed(run_cli({"cyclotomic", "--k", "12", "--q", "2"}));
  EXPECT_EQ(c["polynomial"], "x^4 - x^2 + 1");
  EXPECT_EQ(c["value"], "13");
  EXPECT_EQ(parsed(run_cli({"steinberg", "--family", "E8", "--q", "2"}))["degree"],
            "1329227995784915872903807060280344576");
  EXPECT_EQ(parsed(run_cli({"beta", "--family", "orth-plus", "--rank", "4", "--q", "2"}))["beta"],
            "50");
  EXPECT_EQ(run_cli({"lemma61", "--family", "linear", "--rank", "3", "--q", "3"}).result.exit_code,
            0);
}

}  // namespace
}  // namespace chardeg::cli
