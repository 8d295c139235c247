#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "effrand/bits.hpp"
#include "effrand/solovay.hpp"
#include "effrand/text_format.hpp"

namespace effrand {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("effrand_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// Re-executes the command echoed on the first report line.
CliRun rerun_echo(const CliRun& first) {
  const std::string head = first.out.substr(0, first.out.find('\n'));
  const std::string prefix = "command: effrand ";
  EXPECT_EQ(head.rfind(prefix, 0), 0U) << head;
  return run(split_ws(head.substr(prefix.size())));
}

TEST_F(CliTest, GenerateExamples) {
  CliRun r = run({"generate", "--kind", "champernowne", "--length", "16"});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_EQ(r.out, "1101110010111011\n");

  r = run({"generate", "--kind", "biased", "--p", "1", "--length", "4", "--out", path("b.txt")});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_EQ(slurp(path("b.txt")), "1111\n");

  r = run({"generate", "--kind", "prng", "--length", "0", "--out", path("empty.txt")});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_TRUE(fs::exists(path("empty.txt")));
  EXPECT_EQ(fs::file_size(path("empty.txt")), 0U);
}

TEST_F(CliTest, UsageErrorsNameTheFlag) {
  CliRun r = run({"generate", "--kind", "biased", "--p", "abc", "--length", "4"});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_NE(r.err.find("--p"), std::string::npos);
  r = run({"generate", "--kind", "biased", "--p", "3/2", "--length", "4"});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_NE(r.err.find("--p"), std::string::npos);
  r = run({"generate", "--kind", "prng"});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_NE(r.err.find("--length"), std::string::npos);
  r = run({"generate", "--kind", "adversarial", "--suite", "oracle"});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_NE(r.err.find("--suite"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kUsage);
  EXPECT_EQ(run({}).status, cli::kUsage);
  EXPECT_EQ(run({"bound", "nonsense"}).status, cli::kUsage);
  EXPECT_EQ(run({"bound", "hoeffding", "--n", "10"}).status, cli::kUsage);
}

TEST_F(CliTest, AnalyzeExamples) {
  std::ofstream(path("ones.txt")) << std::string(64, '1') << '\n';
  CliRun r = run({"analyze", "--in", path("ones.txt"), "--tests", "slln", "--m", "4", "--N", "0"});
  EXPECT_EQ(r.status, cli::kFail);
  EXPECT_NE(r.out.find("[slln]"), std::string::npos);
  EXPECT_NE(r.out.find("status: 3"), std::string::npos);

  ASSERT_EQ(run({"generate", "--kind", "champernowne", "--length", "131072", "--out", path("c.txt")}).status,
            cli::kPass);
  r = run({"analyze", "--in", path("c.txt"), "--tests", "normality", "--k", "1", "--eps", "0.05"});
  EXPECT_EQ(r.status, cli::kPass) << r.out;

  EXPECT_EQ(run({"analyze", "--in", path("missing.txt")}).status, cli::kUsage);
  EXPECT_EQ(run({"analyze", "--in", path("c.txt"), "--tests", "runs"}).status, cli::kUsage);
  std::ofstream(path("bad.txt")) << "0102";
  r = run({"analyze", "--in", path("bad.txt")});
  EXPECT_EQ(r.status, cli::kUsage);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, AnalyzeRandomPassesAllTests) {
  ASSERT_EQ(run({"generate", "--kind", "prng", "--seed", "3", "--length", "65536", "--out", path("p.txt")}).status,
            cli::kPass);
  const CliRun r = run({"analyze", "--in", path("p.txt"), "--json", path("p.json")});
  EXPECT_EQ(r.status, cli::kPass) << r.out;
  const auto j = nlohmann::json::parse(slurp(path("p.json")));
  EXPECT_EQ(j.at("exit_status"), 0);
  EXPECT_TRUE(j.at("tests").contains("slln"));
  EXPECT_TRUE(j.at("tests").contains("normality"));
  EXPECT_TRUE(j.at("tests").contains("lil"));
}

TEST_F(CliTest, BoundExamples) {
  CliRun r = run({"bound", "hoeffding", "--n", "100", "--eps", "0.1"});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_NE(r.out.find("formula=hoeffding_fair value=0.2706"), std::string::npos) << r.out;

  r = run({"bound", "schedule", "--m", "1", "--kmax", "1"});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_NE(r.out.find("entry: k=0 N=1 "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("entry: k=1 N=1 "), std::string::npos) << r.out;

  r = run({"bound", "deviation", "--x", "1"});
  EXPECT_EQ(r.status, cli::kPass);
  EXPECT_NE(r.out.find("value=0.24197"), std::string::npos) << r.out;

  EXPECT_EQ(run({"bound", "slln-tail", "--m", "4", "--N", "23"}).status, cli::kPass);
  EXPECT_EQ(run({"bound", "maximal", "--n", "16", "--x", "2"}).status, cli::kPass);
}

TEST_F(CliTest, FamilyBuildCheckMembership) {
  CliRun r = run({"family", "build", "--m", "4", "--kmax", "3", "--depth", "50", "--out", path("f.txt")});
  ASSERT_EQ(r.status, cli::kPass) << r.err;
  r = run({"family", "check", "--family", path("f.txt")});
  EXPECT_EQ(r.status, cli::kPass) << r.out;
  EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);

  std::ofstream(path("ones.txt")) << std::string(60, '1');
  r = run({"family", "membership", "--family", path("f.txt"), "--in", path("ones.txt")});
  EXPECT_NE(r.out.find("indices: 0 1 2 3"), std::string::npos) << r.out;
  EXPECT_EQ(r.status, cli::kFail);

  // Below the schedule's last N the build is rejected as a usage error.
  EXPECT_EQ(run({"family", "build", "--m", "4", "--kmax", "3", "--depth", "20", "--out", path("g.txt")}).status,
            cli::kUsage);

  ASSERT_EQ(run({"family", "build", "--m", "2", "--kmax", "3", "--depth", "20", "--out", path("two.txt")}).status,
            cli::kPass);
  std::ifstream in(path("two.txt"));
  const TestFamily two = read_family(in);
  for (const auto& m : two.sets) EXPECT_TRUE(m.measure().is_zero());
  EXPECT_EQ(run({"family", "check", "--family", path("two.txt")}).status, cli::kPass);

  // A tampered budget is a hard failure naming the index.
  std::string text = slurp(path("f.txt"));
  const auto pos = text.find("budget: ", text.find("index: 2"));
  text.replace(pos, text.find('\n', pos) - pos, "budget: 1e-300");
  std::ofstream(path("bad.txt")) << text;
  r = run({"family", "check", "--family", path("bad.txt")});
  EXPECT_EQ(r.status, cli::kFail);
  EXPECT_NE(r.out.find("budget violation at index 2"), std::string::npos) << r.out;
}

TEST_F(CliTest, EchoedCommandsReproduceReports) {
  ASSERT_EQ(run({"generate", "--kind", "adversarial", "--stages", "6", "--suite", "pattern-00", "--out", path("a.txt"),
                 "--trace", path("a.trace")})
                .status,
            cli::kPass);
  const std::vector<std::vector<std::string>> commands = {
      {"generate", "--kind", "prng", "--seed", "9", "--length", "5000", "--out", path("x.txt")},
      {"analyze", "--in", path("x.txt")},
      {"analyze", "--in", path("a.txt"), "--tests", "slln,normality", "--k", "2"},
      {"bound", "schedule", "--m", "8", "--kmax", "6"},
      {"family", "build", "--m", "3", "--kmax", "2", "--depth", "40", "--out", path("f.txt")},
      {"family", "check", "--family", path("f.txt")},
      {"family", "membership", "--family", path("f.txt"), "--in", path("x.txt")},
  };
  for (const auto& cmd : commands) {
    const CliRun first = run(cmd);
    const std::string artifact = cmd.back().find(dir_.string()) == 0 ? slurp(cmd.back()) : "";
    const CliRun second = rerun_echo(first);
    EXPECT_EQ(first.status, second.status);
    EXPECT_EQ(first.out, second.out);
    if (!artifact.empty()) EXPECT_EQ(slurp(cmd.back()), artifact);
  }
}

}  // namespace
}  // namespace effrand
