#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "symlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = symlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_without_time(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("wall_time_ms");
  return j;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Cli, GroebnerBasis) {
  auto r = run({"gb", "--ring", "x,y", "--order", "lex", "--ideal", "x^2+y^2-1, x-y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x - y\ny^2 - 1/2\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Lct) {
  auto r = run({"lct", "--ring", "x,y", "--ideal", "x^2, y^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5/6\n");
}

TEST(Cli, MembershipAndContainment) {
  auto r = run({"member", "--ring", "x,y,z", "--poly", "x*y*z", "--ideal", "(x*y, x*z, y*z)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  r = run({"contains", "--ring", "x,y,z", "--ideal", "x^2*y^2, x^2*z^2, y^2*z^2", "--other", "x*y*z"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false\nwitness: x*y*z\n");
}

TEST(Cli, IdealOperations) {
  EXPECT_EQ(run({"eliminate", "--ring", "t,x,y", "--ideal", "x-t^2, y-t^3", "--drop", "t"}).out, "x^3 - y^2\n");
  EXPECT_EQ(run({"colength", "--ring", "x,y", "--ideal", "x"}).out, "infinite\n");
  EXPECT_EQ(run({"colength", "--ring", "x,y", "--ideal", "x^2, y^3"}).out, "6\n");
  EXPECT_EQ(run({"quotient", "--ring", "x,y", "--ideal", "x^2, x*y", "--other", "x"}).out, "x\ny\n");
  auto sat = run({"saturate", "--ring", "x,y", "--ideal", "x^2*y", "--other", "x"});
  EXPECT_EQ(sat.code, 0);
  EXPECT_NE(sat.out.find("y\n"), std::string::npos);
  EXPECT_NE(sat.out.find("2"), std::string::npos);
  EXPECT_EQ(run({"intersect", "--ring", "x,y", "--ideal", "x", "--other", "y", "--other", "x+y"}).out,
            "x^2*y + x*y^2\n");
}

TEST(Cli, MultiplierCommands) {
  EXPECT_EQ(run({"multiplier", "--ring", "x,y", "--ideal", "x^2, y^3", "--c", "4/5"}).out, "(1)\n");
  EXPECT_EQ(run({"multiplier", "--ring", "x,y", "--ideal", "x^2, y^3"}).out, "(y, x)\n");
  auto am = run({"asymptotic-multiplier", "--ring", "x,y", "--family", "powers", "--ideal", "x^2, y^3", "--l", "2"});
  EXPECT_EQ(am.code, 0);
  EXPECT_EQ(am.out, "(y^4, x*y^3, x^2*y, x^3)\nstabilized at p = 2\n");
  auto hyp = run({"verify-theorem-b", "--ring", "x,y", "--family", "powers", "--ideal", "x, y", "--target", "x^2, y"});
  EXPECT_EQ(hyp.code, 1);
  EXPECT_NE(hyp.out.find("result: hypothesis_failed"), std::string::npos);
}

TEST(Cli, VerifierTextReport) {
  auto r = run({"verify-theorem-a", "--ring", "x,y,z", "--components", "x,y; x,z; y,z", "--codim", "1", "--m-max",
                "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[FAIL] q^(2) ⊆ q^2  witness: x*y*z"), std::string::npos);
  EXPECT_NE(r.out.find("result: fail"), std::string::npos);
}

TEST(Cli, ValuationCommands) {
  EXPECT_EQ(run({"valuation-order", "--poly", "y - x - 1/2*x^2", "--n", "10"}).out, "3\n");
  EXPECT_EQ(run({"valuation-order", "--poly", "y - x - 1/2*x^2 - 1/6*x^3 - 1/24*x^4 - 1/120*x^5 - 1/720*x^6",
                 "--n", "6"})
                .out,
            ">= 6\n");
  auto g = run({"colength-growth", "--family", "valuation", "--k-max", "5"});
  EXPECT_EQ(g.out, "1 2 3 4 5\ngrowth: linear\n");
  auto fc = run({"family-check", "--family", "valuation", "--n", "6"});
  EXPECT_EQ(fc.code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "x,y", "--ideal", "x^"}).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "x,y", "--ideal", "xy"}).code, 2);
  EXPECT_EQ(run({"gb", "--ideal", "x"}).code, 2);
  EXPECT_EQ(run({"gb", "--ring", "x,y", "--order", "weird", "--ideal", "x"}).code, 2);
  EXPECT_EQ(run({"--jobs", "0", "gb", "--ring", "x", "--ideal", "x"}).code, 2);
  EXPECT_EQ(run({"verify-theorem-a", "--ring", "x,y,z", "--cone", "(1,0,0);(0,1"}).code, 2);
  EXPECT_EQ(run({"verify-theorem-a", "--ring", "x,y,z", "--components", "x*y,x*z,y*z)", "--codim", "2"}).code, 2);
  EXPECT_EQ(run({"verify-theorem-a", "--ring", "x,y,z", "--components", "x,y; x,z"}).code, 2);
  EXPECT_EQ(run({"multiplier", "--ring", "x,y", "--ideal", "x+y"}).code, 2);
  EXPECT_EQ(run({"multiplier", "--ring", "x,y", "--ideal", "x", "--c", "0"}).code, 2);
  EXPECT_EQ(run({"verify-restriction", "--ring", "x,y,z", "--ideal", "z", "--keep", "x,y"}).code, 2);
  EXPECT_EQ(run({"symbolic-power", "--ring", "x,y,z", "--components", "x,y", "--witnesses", "x", "--m", "2"}).code, 2);
  auto r = run({"lct", "--ring", "x,y", "--ideal", "x^2, y^3 +"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BudgetExhaustion) {
  const auto before = symlab::default_step_budget();
  auto r = run({"--budget", "5", "gb", "--ring", "x,y,z", "--order", "lex", "--ideal",
                "x^2+y+z-1, x+y^2+z-1, x+y+z^2-1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(symlab::default_step_budget(), before);

  setenv("SYMLAB_BUDGET", "5", 1);
  EXPECT_EQ(run({"gb", "--ring", "x,y,z", "--order", "lex", "--ideal", "x^2+y+z-1, x+y^2+z-1, x+y+z^2-1"}).code, 3);
  EXPECT_EQ(run({"--budget", "100000", "gb", "--ring", "x,y", "--ideal", "x^2-y, x*y"}).code, 0);
  setenv("SYMLAB_BUDGET", "lots", 1);
  EXPECT_EQ(run({"gb", "--ring", "x,y", "--ideal", "x"}).code, 2);
  unsetenv("SYMLAB_BUDGET");
  EXPECT_EQ(symlab::default_step_budget(), before);
}

TEST(Cli, JsonReportSchemaAndDeterminism) {
  std::vector<std::string> args = {"--json", "verify-theorem-a", "--ring", "x,y,z", "--cone",
                                   "(1,0,0);(0,1,0);(0,0,1)", "--m-max", "2"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  auto ja = json_without_time(a.out), jb = json_without_time(b.out);
  EXPECT_EQ(ja.dump(), jb.dump());
  auto full = nlohmann::ordered_json::parse(a.out);
  for (const char* key : {"version", "command", "claim", "paper_anchor", "parameters", "result", "checks",
                          "wall_time_ms"})
    EXPECT_TRUE(full.contains(key)) << key;
  EXPECT_EQ(full["version"], 1);
  EXPECT_EQ(full["result"], "pass");
  EXPECT_FALSE(full.contains("witness"));

  args.insert(args.begin(), {"--jobs", "3"});
  EXPECT_EQ(json_without_time(run(args).out).dump(), ja.dump());

  auto fail = run({"--json", "contains", "--ring", "x,y,z", "--ideal", "x^2*y^2", "--other", "x*y*z"});
  EXPECT_EQ(fail.code, 1);
  auto jf = nlohmann::ordered_json::parse(fail.out);
  EXPECT_EQ(jf["result"], false);
  EXPECT_EQ(jf["witness"], "x*y*z");
}

TEST(Cli, SessionFile) {
  auto path = write_temp("symlab_cli_session.json", R"({
    "version": 1,
    "ring": {"variables": ["x", "y"], "order": "lex"},
    "ideals": {"circle": "x^2 + y^2 - 1, x - y"},
    "command": {"name": "gb", "parameters": {"ideal": "circle"}}
  })");
  auto r = run({"--session", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x - y\ny^2 - 1/2\n");

  auto bad = write_temp("symlab_cli_bad.json", R"({"version": 1, "command": {"name": "gb", "parameters": {)");
  EXPECT_EQ(run({"--session", bad}).code, 2);
  auto unknown = write_temp("symlab_cli_unknown.json", R"({
    "version": 1, "ring": {"variables": ["x"]},
    "command": {"name": "family-check", "parameters": {"family": "nope"}}
  })");
  EXPECT_EQ(run({"--session", unknown}).code, 2);
  auto future = write_temp("symlab_cli_future.json", R"({"version": 99})");
  EXPECT_EQ(run({"--session", future}).code, 2);
  EXPECT_EQ(run({"--session", "/nonexistent/session.json"}).code, 2);
}

TEST(Cli, Samples) {
  const std::map<std::string, int> expected = {
      {"uniform_containment_cone.json", 0}, {"uniform_containment_points.json", 0},
      {"asymptotic_containment.json", 0},   {"valuation_growth.json", 0},
      {"multiplier_cusp.json", 0},          {"subadditivity.json", 0},
      {"symbolic_with_witness.json", 0},    {"contains_fails.json", 1}};
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SYMLAB_SAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    auto it = expected.find(entry.path().filename().string());
    ASSERT_NE(it, expected.end()) << "unlisted sample " << entry.path();
    auto r = run({"--session", entry.path().string()});
    EXPECT_EQ(r.code, it->second) << entry.path() << "\n" << r.err;
    ++seen;
  }
  EXPECT_EQ(seen, expected.size());
}
