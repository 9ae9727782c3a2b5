#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "common.hpp"
#include "scg/board_io.hpp"
#include "scg/cli.hpp"

using namespace scg;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kBoards = kSourceDir + "/data/boards/";

}  // namespace

TEST(Cli, Value) {
  EXPECT_EQ(run({"value", "{top|top}"}).out, "top\n");
  EXPECT_EQ(run({"value", "{a,a|bot}"}).out, "{a|bot}\n");
  EXPECT_EQ(run({"value", "--unicode", "{top|bot}"}).out, "{⊤|⊥}\n");
  EXPECT_EQ(run({"value", kBoards + "hex2x2.scg"}).out, "{top|bot}\n");
  EXPECT_EQ(run({"value", "--random", "--seed", "5"}).code, 0);
}

TEST(Cli, OrderAndPredicates) {
  EXPECT_EQ(run({"equiv", "{top|top}", "top"}).out, "true\n");
  EXPECT_EQ(run({"equiv", "{top|top}", "top"}).code, 0);
  const Result r = run({"leq", "a", "b"});
  EXPECT_EQ(r.out, "false\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"leq", "bot", "top"}).code, 0);
  EXPECT_EQ(run({"check", "--passable", "{top|bot}"}).code, 0);
  EXPECT_EQ(run({"check", "--monotone", "{{top|bot}|{top|bot}}"}).code, 1);
  EXPECT_EQ(run({"check", "--passable", "--poset", "P3", "{a|bot}"}).code, 0);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", kBoards + "hex2x2.scg"}).out, "{top|bot}\n");
  EXPECT_EQ(run({"eval", kBoards + "coupling5.scg", "--position", "0101*"}).out, "{top|b}\n");
  EXPECT_EQ(run({"eval", "--max-cells", "3", kBoards + "coupling5.scg"}).code, 2);
}

TEST(Cli, Realize) {
  const Result r = run({"realize", "{a,b|bot}", "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = json::parse(r.out);
  EXPECT_EQ(rep["cells"], 3);
  EXPECT_EQ(rep["verified"], "BruteForce");
  EXPECT_EQ(rep["input"], "{a,b|bot}");
  EXPECT_EQ(board_from_json(rep["board"]).size(), 3);

  const auto path = std::filesystem::temp_directory_path() / "scg_cli_realize.scg";
  const Result w = run({"realize", "{a,{top|b}|{a|bot},b}", "-o", path.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(json::parse(w.out)["verified"], "Skipped");
  EXPECT_EQ(run({"eval", path.string()}).out, run({"value", "{a,{top|b}|{a|bot},b}"}).out);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"realize", "{a|b}"}).code, 1);
}

TEST(Cli, AppendixAndCatalog) {
  const Result a = run({"verify-appendix", kSourceDir + "/data/appendix_p4.json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 45);
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos);

  const Result c = run({"catalog", "-n", "1"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json::parse(c.out).size(), 9u);
  EXPECT_EQ(run({"catalog", "-n", "5"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"value", "{|a}"}).code, 2);
  EXPECT_NE(run({"value", "{|a}"}).err.find("empty option list"), std::string::npos);
  EXPECT_EQ(run({"value", "{a|c}"}).code, 2);
  EXPECT_EQ(run({"check", "{a|bot}"}).code, 2);
  EXPECT_EQ(run({"value", "--poset", "P9", "a"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
