#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "monodromy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = monodromy::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Rank) {
  EXPECT_EQ(invoke({"rank", "--groups", "C2,C3"}).out, "2\n");
  EXPECT_EQ(invoke({"rank", "--groups", "C10,C9"}).out, "72\n");
  auto j = json_of(invoke({"rank", "--groups", "C2,C2,C2", "--format", "json"}));
  EXPECT_EQ(j["rank"], "5");
  EXPECT_EQ(j["orders"], nlohmann::json::parse("[2,2,2]"));
}

TEST(Cli, Graph) {
  Result r = invoke({"graph", "--groups", "C2,C3", "--element", "x1*x2*x1*x2^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("vertices 6\nedges 7\nrank 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("loop closed, 4 steps"), std::string::npos);
  Result dot = invoke({"graph", "--groups", "C2,C2", "--emit", "dot"});
  EXPECT_EQ(dot.out.rfind("graph fibre {", 0), 0u);
  auto j = json_of(invoke({"graph", "--groups", "C2,C2", "--format", "json", "--element", "x1*x2"}));
  EXPECT_EQ(j["loop"]["closed"], false);
  EXPECT_EQ(invoke({"rank", "--groups", "C2", "--format", "dot"}).code, 2);
}

TEST(Cli, BasisAndAct) {
  Result b = invoke({"basis", "--groups", "C2,C3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("algebraic basis, rank 2"), std::string::npos);
  Result a = invoke({"act", "--groups", "C2,C3", "--element", "x2"});
  EXPECT_EQ(a.out, "[x1^1,x2^1] -> [x1^1,x2^1]^-1*[x1^1,x2^2]\n[x1^1,x2^2] -> [x1^1,x2^1]^-1\n");
  auto t = json_of(invoke({"act", "--groups", "C2,C2,C2", "--element", "x3", "--format", "json"}));
  EXPECT_EQ(t["kind"], "tree");
  EXPECT_EQ(t["images"].size(), 5u);
}

TEST(Cli, Matrix) {
  auto j = json_of(invoke({"matrix", "--groups", "C2,S3", "--element", "x1"}));
  EXPECT_EQ(j["convention"], "columns-as-images");
  EXPECT_EQ(j["det"], "-1");
  EXPECT_EQ(j["entries"].size(), 5u);
  EXPECT_EQ(j["entries"][0], nlohmann::json::parse("[-1,0,0,0,0]"));
  Result text = invoke({"matrix", "--groups", "C2,C3", "--element", "x2", "--format", "text"});
  EXPECT_EQ(text.out, "-1 -1\n 1  0\ndet 1\n");
}

TEST(Cli, ReportExitCodes) {
  EXPECT_EQ(invoke({"report", "--groups", "C2,S3", "--trials", "10"}).code, 0);
  Result bad = invoke({"report", "--groups", "C2,C2", "--trials", "10"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("faithful no"), std::string::npos);
}

TEST(Cli, LemmaCheckAndHomology) {
  Result l = invoke({"lemma-check", "--groups", "C2,C3", "--trials", "50", "--depth", "4"});
  EXPECT_EQ(l.code, 0) << l.out;
  EXPECT_NE(l.out.find("PASS iterated-weight 4/4"), std::string::npos);
  Result h = invoke({"homology", "--groups", "C2,C2,C2", "--complex", "K={1;2;3}"});
  EXPECT_EQ(h.out, "betti 5\ntorsion none\nflag yes\ncells 8 12 0\n");
  auto j = json_of(invoke({"homology", "--groups", "C2,C2,C2", "--complex", "K={1,2;2,3;1,3}", "--emit", "json"}));
  EXPECT_EQ(j["betti"], 0);
  EXPECT_EQ(j["flag"], false);
}

TEST(Cli, DeterministicForFixedSeed) {
  std::vector<std::string> args{"lemma-check", "--groups", "S3,C4", "--seed", "7", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  std::vector<std::string> rep{"report", "--groups", "C3,C4", "--seed", "9", "--format", "json"};
  EXPECT_EQ(invoke(rep).out, invoke(rep).out);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"rank"}).code, 2);
  EXPECT_EQ(invoke({"rank", "--groups", "Q8"}).code, 2);
  EXPECT_EQ(invoke({"rank", "--groups", "C0"}).code, 2);
  EXPECT_EQ(invoke({"act", "--groups", "C2,C3", "--element", "x9"}).code, 2);
  EXPECT_EQ(invoke({"act", "--groups", "C2,C3,C2", "--basis", "algebraic", "--element", "x1"}).code, 2);
  EXPECT_EQ(invoke({"graph", "--groups", "C100,C100", "--cap", "50"}).code, 2);
  EXPECT_EQ(invoke({"homology", "--groups", "C2,C2", "--complex", "K={1;5}"}).code, 2);
  Result bad = invoke({"rank", "--groups", "table:/no/such/file.json"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
}
