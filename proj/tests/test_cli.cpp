#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dehn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dehn::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DEHN_LINKS_DIR) + "/" + name; }

TEST(CliCfrac, Examples) {
  EXPECT_EQ(run({"cfrac", "2", "2", "-1", "2", "2"}).out, "1/5\n");
  EXPECT_EQ(run({"cfrac", "5"}).out, "1/5\n");
  EXPECT_EQ(run({"cfrac", "3", "3", "-1", "3", "3"}).out, "11/40\n");
  EXPECT_EQ(run({"cfrac", "3,3,-1,3,3"}).out, "11/40\n");
}

TEST(CliCfrac, Errors) {
  auto r = run({"cfrac", "2", "x"});
  EXPECT_EQ(r.code, 2);
  r = run({"cfrac", "1", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("division by zero"), std::string::npos);
  EXPECT_EQ(run({"cfrac"}).code, 2);
}

TEST(CliTwoBridge, FamilyAndWord) {
  auto r = run({"twobridge", "--family", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("schubert: S(40,11)"), std::string::npos);
  EXPECT_NE(r.out.find("link (2 components)"), std::string::npos);
  r = run({"twobridge", "2", "2", "-1", "2", "2"});
  EXPECT_NE(r.out.find("schubert: S(5,1)"), std::string::npos);
  EXPECT_NE(r.out.find("mirror: S(5,4)"), std::string::npos);
  EXPECT_EQ(run({"twobridge", "--family", "1"}).code, 2);
  EXPECT_EQ(run({"twobridge"}).code, 2);
}

TEST(CliLens, Examples) {
  auto r = run({"lens", "5", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achiral: yes"), std::string::npos);
  r = run({"lens", "5", "1"});
  EXPECT_NE(r.out.find("achiral: no"), std::string::npos);
  r = run({"lens", "40", "11", "--compare", "40", "29"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achiral: no"), std::string::npos);
  EXPECT_NE(r.out.find("equivalent: no"), std::string::npos);
  EXPECT_NE(r.out.find("mirror-equivalent: yes"), std::string::npos);
  EXPECT_EQ(run({"lens", "6", "4"}).code, 2);
  EXPECT_EQ(run({"lens", "0", "1"}).code, 2);
}

TEST(CliSnf, MatrixDocument) {
  auto r = run({"snf", "--input", data("lemma_matrix_n3.json"), "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("diagonal: 1 1 1 1 20"), std::string::npos);
  EXPECT_NE(r.out.find("cokernel: Z + Z/20"), std::string::npos);
  EXPECT_NE(r.out.find("(agrees)"), std::string::npos);
  EXPECT_EQ(run({"snf"}).code, 2);
  EXPECT_EQ(run({"--input", "/nonexistent.json", "snf"}).code, 2);
}

TEST(CliSurgery, Examples) {
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "2"}).out, "Z + Z/5\n");
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "2", "--fill", "x=1/0"}).out, "Z/5\n");
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "2", "--fill", "x=0/1"}).out, "Z/5\n");
  EXPECT_EQ(run({"surgery", "--template", "unknot", "--fill", "k=0/1"}).out, "Z\n");
  EXPECT_EQ(run({"surgery", "--input", data("unknot_zero.json")}).out, "Z\n");
  EXPECT_EQ(run({"surgery", "--input", data("mn_n2.json")}).out, "Z + Z/5\n");
  EXPECT_EQ(run({"surgery", "--input", data("mn_n2.json"), "--drill", "a"}).out, "Z^2\n");
}

TEST(CliSurgery, Errors) {
  EXPECT_EQ(run({"surgery", "--template", "mn"}).code, 2);
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"surgery", "--template", "nope"}).code, 2);
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "2", "--fill", "q=1/0"}).code, 2);
  EXPECT_EQ(run({"surgery", "--template", "mn", "--n", "2", "--fill", "x"}).code, 2);
  EXPECT_EQ(run({"surgery"}).code, 2);
}

TEST(CliFamily, Ranges) {
  auto r = run({"family", "--min", "2", "--max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("INCONCLUSIVE-BY-HOMOLOGY"), std::string::npos);
  EXPECT_NE(r.out.find("chiral"), std::string::npos);
  r = run({"--json", "family", "--min", "-5", "--max", "5"});
  EXPECT_EQ(r.code, 0);
  auto j = dehn::io::Json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 9u);
  EXPECT_EQ(run({"family", "--min", "3", "--max", "2"}).code, 2);
  EXPECT_EQ(run({"family"}).code, 0);
}

TEST(CliFamily, JsonIsDeterministic) {
  auto a = run({"family", "--json", "--min", "-6", "--max", "6"});
  auto b = run({"family", "--json", "--min", "-6", "--max", "6"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSlope, Subcommands) {
  EXPECT_EQ(run({"slope", "normalize", "5", "-10"}).out, "-1/2\n");
  EXPECT_EQ(run({"slope", "distance", "2/3", "-2/3"}).out, "12\n");
  EXPECT_EQ(run({"slope", "apply", "1/0"}).out, "0/1\n");
  EXPECT_EQ(run({"slope", "apply", "--matrix", "1,0,0,1", "2/3"}).out, "2/3\n");
  EXPECT_EQ(run({"slope", "fixed", "--bound", "100"}).out, "-1/1\n1/1\n");
  EXPECT_EQ(run({"slope", "normalize", "0", "0"}).code, 2);
  EXPECT_EQ(run({"slope", "apply", "--matrix", "2,0,0,1", "1/1"}).code, 2);
  EXPECT_EQ(run({"slope", "fixed", "--bound", "0"}).code, 2);
  EXPECT_EQ(run({"slope"}).code, 2);
}

TEST(Cli, UnknownSubcommandAndHelp) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("cfrac"), std::string::npos);
}

}  // namespace

namespace {

TEST(CliFamily, FailedCheckExitsOneAndNamesIt) {
  auto sweep = dehn::certify_family_range(2, 3);
  sweep.reports[1].checks[3].passed = false;
  const std::string name = sweep.reports[1].checks[3].name;
  std::ostringstream out;
  EXPECT_EQ(dehn::cli::report_family({}, sweep, out), dehn::cli::kExitVerificationFailed);
  EXPECT_NE(out.str().find("FAILED: n=3: " + name), std::string::npos) << out.str();

  std::ostringstream json;
  EXPECT_EQ(dehn::cli::report_family({.json = true, .input = {}}, sweep, json), 1);
  EXPECT_EQ(dehn::io::Json::parse(json.str())["first_failure"], "n=3: " + name);
}

TEST(CliFamily, RangeCheckFailureExitsOne) {
  auto sweep = dehn::certify_family_range(2, 2);
  sweep.checks[0].passed = false;
  std::ostringstream out;
  EXPECT_EQ(dehn::cli::report_family({}, sweep, out), 1);
  EXPECT_NE(out.str().find("FAILED: torsion-distinct"), std::string::npos);
}

}  // namespace
