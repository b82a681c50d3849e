#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "pfaff/cli/cli.hpp"
#include "support/goldens.hpp"

using namespace pfaff;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out, err;

  [[nodiscard]] ordered_json json() const { return ordered_json::parse(out); }
  [[nodiscard]] ordered_json error() const { return ordered_json::parse(err); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pfaff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(int(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::set<std::vector<std::string>> as_sets(const ordered_json& j) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : j) {
    auto v = s.get<std::vector<std::string>>();
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + "pfaff_cli_" + name; }

}  // namespace

TEST(Cli, BetaNbcListsMatchTheGoldenSets) {
  const auto j2 = run({"betanbc", "--model", "j2"});
  ASSERT_EQ(j2.code, 0) << j2.err;
  EXPECT_EQ(as_sets(j2.json()["sets"]), as_sets(ordered_json(goldens::kJ2BetaNbc)));
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = run({"betanbc", "--model", "i_n", "--n", std::to_string(n)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["count"], n * n + n);
    EXPECT_EQ(as_sets(r.json()["sets"]), as_sets(ordered_json(goldens::in_beta_nbc(n)))) << n;
  }
}

TEST(Cli, ConnectionFilesReproduceTheGoldenMatrices) {
  const auto r = run({"connection", "--model", "j2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = connection_from_json(r.json());
  EXPECT_EQ(c.matrices, goldens::j2_expected());
  for (std::size_t n : {2U, 3U}) {
    const auto s = run({"connection", "--model", "i_n", "--n", std::to_string(n)});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(connection_from_json(s.json()).matrices, goldens::in_expected(models::build_in(n), n)) << n;
  }
}

TEST(Cli, OutputIsDeterministicAndEchoesTheSeed) {
  const auto a = run({"connection", "--model", "j2", "--seed", "7"});
  const auto b = run({"connection", "--model", "j2", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["seed"], 7);
  EXPECT_EQ(run({"betanbc"}).json()["seed"], kDefaultSeed);
}

TEST(Cli, LexicographicBasisIsAvailable) {
  const auto r = run({"connection", "--model", "j2", "--basis", "lex"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["basis"][0], "{2,5}");
}

TEST(Cli, CorruptedConnectionIsNotFlat) {
  const std::string good = temp_path("good.json"), bad = temp_path("bad.json");
  ASSERT_EQ(run({"connection", "--model", "j2", "--out", good}).code, 0);
  EXPECT_EQ(run({"verify-flatness", "--in", good}).code, 0);
  auto j = cli::detail::read_json(good);
  j["matrices"][0][0][1] = "a+1";
  std::ofstream(bad) << j.dump(2);
  const auto r = run({"verify-flatness", "--in", bad});
  EXPECT_EQ(r.code, 1);
  const auto doc = r.json();
  EXPECT_EQ(doc["status"], "fail");
  EXPECT_FALSE(doc["flat"].get<bool>());
  EXPECT_EQ(doc["failures"][0]["code"], "NOT_FLAT");
}

TEST(Cli, ValidationErrorsExitWithTwo) {
  const auto unknown = run({"verify-pfaffian", "--params", "q=1"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(unknown.error()["code"], "INVALID_ARGUMENT");
  EXPECT_TRUE(unknown.out.empty());
  EXPECT_EQ(run({"betanbc", "--model", "i_n"}).code, 2);
  EXPECT_EQ(run({"betanbc", "--model", "i_n", "--n", "1"}).error()["code"], "N_TOO_SMALL");
  EXPECT_EQ(run({"betanbc", "--model", "k3"}).error()["code"], "USAGE");
  EXPECT_EQ(run({"betanbc", "--h", "1"}).code, 2);
  EXPECT_EQ(run({"verify-flatness", "--in", temp_path("missing.json")}).code, 2);
  EXPECT_EQ(run({"chambers", "--point", "x=0"}).error()["code"], "SINGULAR_BASEPOINT");
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify-pfaffian"), std::string::npos);
}

TEST(Cli, BindingsAreExact) {
  const std::vector<Symbol> syms{Symbol::weight("a"), Symbol::weight("g")};
  const auto b = cli::parse_bindings(" a = 0.25 , g=-3/7", syms);
  EXPECT_EQ(b.at(Symbol::weight("a")), Rational(1, 4));
  EXPECT_EQ(b.at(Symbol::weight("g")), Rational(-3, 7));
  EXPECT_THROW(cli::parse_bindings("a=1,a=2", syms), Error);
  EXPECT_THROW(cli::parse_bindings("a", syms), Error);
}

TEST(Cli, PfaffianCheckPassesAndFailsOnThreshold) {
  const auto r = run({"verify-pfaffian", "--model", "j2"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto doc = r.json();
  EXPECT_LE(doc["report"]["coarse"]["max_relative_residual"].get<double>(), 1e-4);
  EXPECT_EQ(doc["report"]["coarse"]["h"], "1/1000");
  EXPECT_EQ(doc["report"]["coarse"]["point"]["x"], "3/10");
  const auto strict = run({"verify-pfaffian", "--model", "j2", "--threshold", "1e-12"});
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(strict.json()["failures"][0]["code"], "TOLERANCE_NOT_MET");
}

TEST(Cli, PdeOperatorsCarryTheirScalars) {
  const auto r = run({"pde-ops"});
  ASSERT_EQ(r.code, 0);
  const auto doc = r.json();
  EXPECT_EQ(doc["operators"].size(), 2U);
  EXPECT_EQ(doc["scalars"][0]["scalar"], "-1");
  EXPECT_EQ(doc["scalars"][1]["scalar"], "-1");
  EXPECT_EQ(run({"pde-ops", "--model", "j_n", "--n", "3"}).json()["operators"].size(), 3U);
  EXPECT_EQ(run({"verify-pde"}).code, 0);
}

TEST(Cli, GaugeCommands) {
  const auto f = run({"ode-fuchsianize", "--params", "a=1/2,b=1/2,c=1/2,g=1/2"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(f.json()["gauge"]["zeta"], "7/2");
  EXPECT_EQ(run({"ode-fuchsianize", "--branch", "-"}).json()["gauge"]["zeta"], "1");
  const auto v = run({"verify-prop4"});
  ASSERT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.json()["branches"].size(), 2U);
  EXPECT_EQ(run({"verify-prop4", "--branch", "sideways"}).code, 2);
}

TEST(Cli, ChambersMatchTheBasis) {
  const auto r = run({"chambers", "--model", "j2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["count"], 7);
  EXPECT_EQ(r.json()["rank"]["rank"], 7);
  EXPECT_EQ(run({"chambers", "--model", "i_n", "--n", "3"}).json()["count"], 12);
}

TEST(Cli, OutFlagWritesTheDocument) {
  const std::string path = temp_path("betanbc.json");
  const auto r = run({"betanbc", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(cli::detail::read_json(path)["count"], 7);
}
