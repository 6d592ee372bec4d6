#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "termclone/termclone.hpp"

using termclone::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = termclone::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, Normalize) {
  EXPECT_EQ(run({"normalize", "x1*x2*x2"}).out, "0\n");
  EXPECT_EQ(run({"normalize", "x1*x3*x2*p"}).out, "x1 p x2 x3\n");
  const Result r = run({"--json", "normalize", "p*p"});
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"kind":"word","head":"p","tail":["p"]})"));
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "1"}).out, "9\n");
  EXPECT_EQ(json::parse(run({"count", "4", "--json"}).out).at("count"), 161);
}

TEST(Cli, Eq) {
  EXPECT_EQ(run({"eq", "x1*x2*x3", "x1*x3*x2"}).out, "true\n");
  EXPECT_EQ(run({"eq", "p*x1", "x1*p"}).out, "false\n");
}

TEST(Cli, Enumerate) {
  const Result r = run({"enumerate", "0"});
  EXPECT_EQ(r.out, "0\np\np p\n");
  EXPECT_EQ(json::parse(run({"--json", "enumerate", "2"}).out).size(), 25u);
}

TEST(Cli, Closure) {
  EXPECT_EQ(run({"closure", "--gen", "p*x1", "--vars", "2"}).out, "0\nx1\nx2\np x1\np x2\n");
  EXPECT_EQ(run({"closure", "--vars", "1"}).out, "x1\n");
}

TEST(Cli, Substitute) {
  EXPECT_EQ(run({"substitute", "p*x1*x2", "--subst", "x1=x3; x2=x4"}).out, "p x3 x4\n");
  EXPECT_EQ(run({"substitute", "p*x1", "--subst", "x1=p*x2"}).out, "0\n");
}

TEST(Cli, FamilyVerify) {
  const Result r = run({"family", "verify", "--lengths", "2,4", "--vars", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("pass (", 0), 0u);
  EXPECT_NE(r.out.find("substitutions checked)"), std::string::npos);
  const json j = json::parse(run({"--json", "family", "verify", "--lengths", "2,4", "--vars", "3"}).out);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_TRUE(j.at("counterexample").is_null());
}

TEST(Cli, FamilyListAndDistinguish) {
  EXPECT_EQ(run({"family", "list", "--lengths", "2", "--vars", "1"}).out, "0\np p\np x1\n");
  EXPECT_EQ(run({"family", "list", "--lengths", "2", "--vars", "1", "--with-generators"}).out, "0\nx1\np p\np x1\n");
  EXPECT_EQ(run({"family", "list", "--lengths", "", "--vars", "2"}).out, "0\n");
  EXPECT_EQ(run({"family", "distinguish", "--lengths", "2,3", "--lengths2", "2", "--vars", "2"}).out,
            "p x1 x2 (in S(A) only)\n");
  EXPECT_EQ(run({"family", "distinguish", "--lengths", "2", "--lengths2", "2", "--vars", "2"}).out, "equal\n");
  const Result bad = run({"family", "distinguish", "--lengths", "6", "--lengths2", "2", "--vars", "2"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("m >= 4"), std::string::npos);
}

TEST(Cli, VerifySubcommands) {
  EXPECT_EQ(run({"verify", "laws", "--vars", "2"}).status, 0);
  EXPECT_EQ(run({"verify", "generation", "--vars", "3"}).status, 0);
  EXPECT_EQ(run({"verify", "freeness", "--vars", "1", "--model-size", "2"}).status, 0);
  EXPECT_EQ(run({"verify", "freeness", "--model-size", "4"}).status, 2);
}

TEST(Cli, ModelsEnumerate) {
  EXPECT_EQ(run({"models", "enumerate", "2"}).out.rfind("4 models\n", 0), 0u);
  EXPECT_EQ(json::parse(run({"--json", "models", "enumerate", "3", "--iso"}).out).size(), 5u);
}

TEST(Cli, ModelsCheckAndEval) {
  const std::string good = write_temp("termclone_f0.json", R"({"size":3,"zero":0,"p":1,"table":[[0,0,0],[0,2,0],[0,0,0]]})");
  const std::string bad = write_temp("termclone_bad.json", R"({"size":2,"zero":0,"p":1,"table":[[1,1],[1,1]]})");
  EXPECT_EQ(run({"models", "check", good}).status, 0);

  const Result r = run({"models", "check", bad});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("0*x = 0"), std::string::npos);
  const json j = json::parse(run({"--json", "models", "check", bad}).out);
  EXPECT_EQ(j.at("pass"), false);
  EXPECT_EQ(j.at("counterexample").at("law"), "0*x = 0");

  EXPECT_EQ(run({"models", "eval", good, "p*p"}).out, "e2\n");
  EXPECT_EQ(run({"models", "eval", good, "x1*x2", "--assign", "x1=e1,x2=1"}).out, "e2\n");
  EXPECT_EQ(run({"models", "eval", good, "x1*x2", "--assign", "x1=e1"}).status, 2);
  EXPECT_EQ(run({"models", "check", "/nonexistent/model.json"}).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({"normalize"}).status, 2);
  EXPECT_EQ(run({"normalize", "x1**x2"}).status, 2);
  const Result r = run({"normalize", "x0"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("position 0"), std::string::npos);
  EXPECT_EQ(run({"count", "abc"}).status, 2);
  EXPECT_EQ(run({"family", "verify", "--lengths", "1,2", "--vars", "2"}).status, 2);
}

TEST(Cli, Guards) {
  EXPECT_EQ(run({"enumerate", "17"}).status, 2);
  EXPECT_EQ(run({"models", "enumerate", "4"}).status, 2);
  const Result forced = run({"--force", "count", "3"});
  EXPECT_EQ(forced.status, 0);
  EXPECT_NE(forced.err.find("warning"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--json", "closure", "--gen", "x1*x2,p*p", "--vars", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, PlainAndJsonAgree) {
  const Result plain = run({"closure", "--gen", "x1*x2", "--vars", "2"});
  const json j = json::parse(run({"--json", "closure", "--gen", "x1*x2", "--vars", "2"}).out);
  std::string rendered;
  for (const json& e : j.at("members")) rendered += termclone::to_string(termclone::element_from_json(e)) + "\n";
  EXPECT_EQ(plain.out, rendered);
}
