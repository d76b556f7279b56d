#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "polymap");
  std::ostringstream out, err;
  int code = polymap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.insert(args.begin(), "--json");
  CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, expect_code) << r.out << r.err;
  return nlohmann::json::parse(r.out);
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, Branch) {
  CliRun r = run({"branch", "(x, y^3+x*y)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "4*x^3 + 27*y^2")) << r.out;
  CliRun bad = run({"branch", "(x, y^3+x*y)", "--claimed", "x^3"});
  EXPECT_EQ(bad.code, 1);
  CliRun good = run({"branch", "(x, y^3+x*y)", "--claimed", "8*x^3+54*y^2", "--tier", "full"});
  EXPECT_EQ(good.code, 0) << good.out;
}

TEST(Cli, Proper) {
  CliRun r = run({"proper", "(x+x^2*y, y)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "not proper"));
  auto j = run_json({"proper", "(x, y^2)"});
  EXPECT_EQ(j["result"]["proper"], true);
}

TEST(Cli, TheoremB) {
  auto j = run_json({"verify-theorem-b", "--d", "3", "--n-max", "4"});
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["result"]["milnor"], nlohmann::json({{"2", 1}, {"3", 2}, {"4", 3}}));
}

TEST(Cli, TheoremA) {
  auto j = run_json({"verify-theorem-a", "--d-min", "3", "--d-max", "4"});
  EXPECT_EQ(j["status"], "pass");
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(Cli, ReportSchema) {
  auto j = run_json({"degree", "(x, y^3)"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "degree");
  EXPECT_EQ(j["result"]["degree"], 3);
  EXPECT_FALSE(j.contains("timing"));
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("details"));
  }
  auto t = run_json({"--timing", "degree", "(x, y^3)"});
  EXPECT_TRUE(t.contains("timing"));
}

TEST(Cli, Deterministic) {
  CliRun a = run({"--json", "--seed", "5", "degree", "(x+y+x*y, x^3*y)"});
  CliRun b = run({"--json", "--seed", "5", "degree", "(x+y+x*y, x^3*y)"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  CliRun unknown = run({"bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(contains(unknown.err, "unknown command"));
  EXPECT_EQ(run({}).code, 2);
  CliRun parse_fail = run({"proper", "(x"});
  EXPECT_EQ(parse_fail.code, 1);
  EXPECT_TRUE(contains(parse_fail.err, "error:"));
  EXPECT_EQ(run({"degree", "(x+x^2*y, y)"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Milnor) {
  auto j = run_json({"milnor", "y^3-x^4"});
  EXPECT_EQ(j["result"]["milnor"], 6);
  auto at = run_json({"milnor", "(y-1)^2-(x-2)^3", "--at", "2,1"});
  EXPECT_EQ(at["result"]["milnor"], 2);
  EXPECT_EQ(run({"milnor", "x+1"}).code, 1);
}

TEST(Cli, Distinguish) {
  auto j = run_json({"distinguish", "(x, y^3-3*x^2*y)", "(x, y^3-3*x^3*y)"});
  EXPECT_EQ(j["result"]["distinguished"], true);
  auto same = run_json({"distinguish", "(x, y^3-3*x^2*y)", "(x, y^3-3*x^2*y)"});
  EXPECT_EQ(same["result"]["distinguished"], false);
}

TEST(Cli, Family) {
  auto j = run_json({"family", "fdn", "--params", "d=3,n=2"});
  EXPECT_EQ(j["result"]["map"], "(x, -3*x^2*y + y^3)");
  auto w = run_json({"family", "whitney"});
  EXPECT_EQ(w["result"]["map"], "(x, y^3 + x*y)");
  auto s = run_json({"family", "semi_separate", "--q", "y^2+x*y"});
  EXPECT_EQ(s["result"]["map"], "(x, x*y + y^2)");
  EXPECT_EQ(run({"family", "fd", "--params", "d=1"}).code, 1);
}

TEST(Cli, Groups) {
  auto j = run_json({"group", "G4", "--verify", "--fingerprint"});
  EXPECT_EQ(j["result"]["expected_order"], 24);
  EXPECT_EQ(j["result"]["fingerprint"]["center_order"], 2);
  auto q = run_json({"group", "cyclic(3)", "--quotient"});
  EXPECT_EQ(q["result"]["quotient_map"], "(x, y^3)");
  auto c = run_json({"classes", "--degree", "2"});
  ASSERT_EQ(c["result"]["classes"].size(), 1u);
  EXPECT_EQ(c["result"]["classes"][0]["group"], "cyclic(2)");
  EXPECT_EQ(run({"group", "G99"}).code, 1);
}

TEST(Cli, Table4DivisibilityTierCoversEveryRow) {
  CliRun r = run({"--json", "verify-table4", "--tier", "divisibility"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tier"], "divisibility");
  const auto& rows = j["result"]["rows"];
  EXPECT_GE(rows.size(), 19u);
  EXPECT_EQ(rows.back()["id"], "f~22");
  for (const auto& row : rows) {
    EXPECT_FALSE(row.contains("error")) << row;
    EXPECT_EQ(row["elimination"], "not-run");
  }
  EXPECT_EQ(r.code, j["status"] == "pass" ? 0 : 1);
}
