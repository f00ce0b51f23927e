#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "harmonium/serialize.hpp"
#include "harmonium_cli/cli.hpp"

namespace harmonium::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "harmonium");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, CountPath) {
  const auto r = invoke({"count", "--family", "path", "--n", "3", "--m", "2..5"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out, "# path_3\n# m hbar(m)\n2 2\n3 10\n4 32\n5 72\n");
}

TEST(Cli, CountStarIsCrossChecked) {
  const auto r = invoke({"count", "--family", "star", "--n", "6", "--m", "2..3", "--json"});
  EXPECT_EQ(r.status, kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["counts"][0]["hbar"], "2");
  EXPECT_EQ(j["counts"][1]["hbar"], "96");
}

TEST(Cli, CountFromFile) {
  const std::string path = ::testing::TempDir() + "harmonium_cli_graph.edges";
  std::ofstream(path) << "# a 4-cycle with a chord\n4\n1 2\n2 3\n3 4\n4 1\n1 3\n";
  const auto r = invoke({"count", "--file", path, "--m", "1"});
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_NE(r.out.find("\n1 0\n"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, ResourceLimitNamesTheFlag) {
  const auto r = invoke({"count", "--family", "complete", "--n", "6", "--m", "40", "--budget", "1000"});
  EXPECT_EQ(r.status, kResourceLimit);
  EXPECT_NE(r.err.find("--budget"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"count", "--m", "2"}).status, kUsage);
  EXPECT_EQ(invoke({"count", "--family", "path", "--n", "3", "--file", "x", "--m", "2"}).status, kUsage);
  EXPECT_EQ(invoke({"count", "--family", "path", "--n", "3", "--m", "5..2"}).status, kUsage);
  EXPECT_NE(invoke({"count", "--family", "wheel", "--n", "3"}).status, kOk);
  EXPECT_NE(invoke({}).status, kOk);
}

TEST(Cli, FitPathFourMatchesTable) {
  const auto r = invoke({"fit", "--family", "path", "--n", "4", "--json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["fit"]["quasipolynomial"]["period"], 6);
  EXPECT_EQ(j["unreduced"]["denominator"], Json::parse("[[6, 5]]"));
  const auto& num = j["unreduced"]["numerator"];
  EXPECT_EQ(num.size(), 30u);  // z^0 .. z^29, the first two zero
  EXPECT_EQ(num[2], "4/1");
  EXPECT_EQ(num[3], "28/1");
  EXPECT_EQ(num[4], "122/1");
  EXPECT_EQ(j["golden"]["unreduced_numerator_match"], true);
  EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out);
}

TEST(Cli, FitStarFiveAndCompleteTwo) {
  EXPECT_EQ(invoke({"fit", "--family", "star", "--n", "5"}).status, kOk);
  const auto r = invoke({"fit", "--family", "complete", "--n", "2", "--json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["reduced"], Json::parse(R"({"numerator": ["0/1", "0/1", "2/1"], "denominator": [[1, 3]]})"));
  EXPECT_TRUE(j["golden"].is_null());
}

TEST(Cli, FitReportsPeriodSearchFailure) {
  const auto r = invoke({"fit", "--family", "path", "--n", "4", "--period-cap", "3"});
  EXPECT_EQ(r.status, kCheckFailed);
  EXPECT_NE(r.err.find("period not found"), std::string::npos);
}

TEST(Cli, Reciprocity) {
  const auto path = invoke({"reciprocity", "--family", "path", "--n", "3", "--m", "1..4"});
  EXPECT_EQ(path.status, kOk);
  EXPECT_NE(path.out.find("\n1 6 6 yes\n"), std::string::npos);
  EXPECT_EQ(path.out.find("NO"), std::string::npos);
  const auto stanley = invoke({"reciprocity", "--stanley", "--family", "complete", "--n", "3", "--m", "1"});
  EXPECT_EQ(stanley.status, kOk);
  EXPECT_NE(stanley.out.find("\n1 6 6 yes\n"), std::string::npos);
  EXPECT_NE(stanley.out.find("acyclic orientations: 6"), std::string::npos);
  const auto k2 = invoke({"reciprocity", "--family", "complete", "--n", "2", "--m", "3"});
  EXPECT_NE(k2.out.find("\n3 12 12 yes\n"), std::string::npos);
}

TEST(Cli, Regions) {
  const auto nonempty = invoke({"regions", "--family", "star", "--n", "4", "--count-nonempty", "--json"});
  ASSERT_EQ(nonempty.status, kOk);
  const auto j = Json::parse(nonempty.out);
  EXPECT_EQ(j["nonempty"]["found"], 14);
  EXPECT_TRUE(j["nonempty"]["unresolved"].empty());

  const auto vertices = invoke({"regions", "--family", "star", "--n", "5", "--verify-vertices"});
  EXPECT_EQ(vertices.status, kOk);
  EXPECT_NE(vertices.out.find("4 of 4 listed vectors verified as vertices"), std::string::npos);

  const auto orbit = invoke({"regions", "--family", "star", "--n", "3", "--orbit-identity", "--t-max", "8"});
  EXPECT_EQ(orbit.status, kOk);
  EXPECT_NE(orbit.out.find("consistent offsets: 0\n"), std::string::npos);

  EXPECT_EQ(invoke({"regions", "--family", "path", "--n", "3", "--verify-vertices"}).status, kUsage);
}

TEST(Cli, UnresolvedRegionsWarnWithoutFailing) {
  const auto r = invoke({"regions", "--family", "path", "--n", "4", "--t-max", "2"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, OutputIsIndependentOfWorkers) {
  const auto one = invoke({"fit", "--family", "cycle", "--n", "4", "--json"});
  const auto three = invoke({"fit", "--family", "cycle", "--n", "4", "--json", "--workers", "3"});
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, WritesToOutPath) {
  const std::string path = ::testing::TempDir() + "harmonium_cli_out.json";
  EXPECT_EQ(invoke({"count", "--family", "cycle", "--n", "4", "--m", "4", "--json", "--out", path}).status, kOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(Json::parse(text.str())["counts"][0]["hbar"], "156");
  std::remove(path.c_str());
}

}  // namespace
}  // namespace harmonium::cli
