#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <set>

#include "qcsa/workbench.hpp"

using namespace qcsa;

namespace {

Report const& full_run_n3() {
  static Report const r = [] {
    RunConfig c;
    c.n = 3;
    c.timing = false;
    return run_verify(c);
  }();
  return r;
}

}  // namespace

TEST(Config, RejectsBadInput) {
  RunConfig c;
  c.n = 4;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.n = 1;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.n = 3;
  c.samples = 0;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.samples = 1;
  c.suites = {"minpoly", "nope"};
  EXPECT_THROW(validate_config(c), ConfigError);
  c.suites = {"minpoly"};
  EXPECT_NO_THROW(validate_config(c));
}

TEST(Verify, NoFailuresAtThree) {
  auto const& r = full_run_n3();
  auto s = r.summary();
  EXPECT_EQ(s.fail, 0);
  EXPECT_TRUE(r.ok());
  for (auto const& c : r.checks) {
    EXPECT_FALSE(c.anchor.empty()) << c.id;
    if (c.status != Status::Pass) EXPECT_FALSE(c.witness.empty()) << c.id;
  }
}

TEST(Verify, RecordedDiscrepanciesAreTheKnownOnes) {
  std::set<std::string> got;
  for (auto const& c : full_run_n3().checks)
    if (c.status == Status::Discrepancy) got.insert(c.id);
  std::set<std::string> const want = {
      "actions.bcd-f",
      "actions.xyz-printed",
      "classification.example-graded.pair-printed",
      "classification.line-dimension",
      "normality.adjoint-table.ft-k",
      "taft.borel-printed",
      "taft.pair.contraction-printed",
      "taft.pair.integral-printed",
      "thm52.taft.line-printed",
      "thm53.closed-form-y",
      "thm53.taft-printed",
  };
  EXPECT_EQ(got, want);
}

TEST(Verify, ChecksSortedAndUnique) {
  auto const& ch = full_run_n3().checks;
  for (std::size_t i = 1; i < ch.size(); ++i) EXPECT_LT(ch[i - 1].id, ch[i].id);
}

TEST(Verify, MinimumSampleCounts) {
  auto count = [](std::string const& prefix) {
    auto const& ch = full_run_n3().checks;
    return std::count_if(ch.begin(), ch.end(),
                         [&](Check const& c) { return c.id.rfind(prefix, 0) == 0; });
  };
  EXPECT_GE(count("minpoly."), 20);
  EXPECT_GE(count("minpoly.degenerate."), 3);
  EXPECT_GE(count("thm53.sample."), 5);
  EXPECT_GE(count("thm54.sample."), 5);
  EXPECT_GE(count("taft.pair.0"), 5);
}

TEST(Verify, SubsetReproducesSameChecks) {
  RunConfig c;
  c.n = 3;
  c.timing = false;
  c.suites = {"minpoly"};
  auto sub = run_verify(c);
  std::vector<Check> from_full;
  for (auto const& ch : full_run_n3().checks)
    if (ch.id.rfind("minpoly.", 0) == 0) from_full.push_back(ch);
  ASSERT_EQ(sub.checks.size(), from_full.size());
  for (std::size_t i = 0; i < from_full.size(); ++i) {
    EXPECT_EQ(sub.checks[i].id, from_full[i].id);
    EXPECT_EQ(sub.checks[i].witness, from_full[i].witness);
  }
}

TEST(Report, JsonShapeAndDeterminism) {
  RunConfig c;
  c.n = 3;
  c.seed = 7;
  c.timing = false;
  c.suites = {"minpoly", "maschke"};
  std::string a = report_json(run_verify(c));
  std::string b = report_json(run_verify(c));
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["config"]["n"], 3);
  EXPECT_EQ(j["config"]["seed"], 7);
  ASSERT_TRUE(j["checks"].is_array());
  for (auto const& ch : j["checks"]) {
    for (auto key : {"id", "anchor", "status", "witness", "elapsed_ms"})
      EXPECT_TRUE(ch.contains(key)) << key;
    EXPECT_EQ(ch["elapsed_ms"], 0.0);
  }
  EXPECT_EQ(j["summary"]["total"], j["checks"].size());
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Lattice, FigureEdgesAreVerifiedCovers) {
  for (int n : {3, 9}) {
    Uqsl2 uq(n);
    auto lat = build_lattice(uq, 5);
    std::set<std::pair<std::string, std::string>> edges;
    for (auto const& e : lat.edges) edges.insert({e.upper, e.lower});
    for (auto const& e : figure_edges(n))
      EXPECT_TRUE(edges.count({e.upper, e.lower})) << n << ": " << e.upper << " > " << e.lower;
    for (auto const& e : lat.edges) EXPECT_NE(e.upper, "k");
    std::string dot = lattice_dot(lat);
    EXPECT_NE(dot.find("\"KE\" [label=\"<K, E> *\""), std::string::npos);
    EXPECT_NE(dot.find("\"pair\" [label=\"<v, w>\""), std::string::npos);
  }
  Uqsl2 uq(9);
  auto lat = build_lattice(uq, 5);
  bool found = false;
  for (auto const& e : lat.edges) found = found || (e.upper == "KrE:3" && e.lower == "Kr:3");
  EXPECT_TRUE(found);
}

TEST(Frontends, TablesMatchAtThree) {
  std::string t = render_tables(3, 1);
  EXPECT_EQ(t.find("NO"), std::string::npos) << t;
  EXPECT_NE(t.find("<K^1, E>"), std::string::npos);
}

TEST(Frontends, DaggerOfE) {
  std::string t = dagger_text(3, "E");
  EXPECT_NE(t.find("dim A = 3, dim A^dagger = 9"), std::string::npos) << t;
  EXPECT_NE(t.find("= <c, d>: holds"), std::string::npos) << t;
  std::string k = dagger_text(3, "Kr:1");
  EXPECT_NE(k.find("= <a^3, a^-1 b, ac>: holds"), std::string::npos) << k;
  EXPECT_THROW(dagger_text(3, "bogus"), std::invalid_argument);
}

TEST(Frontends, Minpoly) {
  std::string s = minpoly_text(3, "0", "1");
  EXPECT_NE(s.find("minimal polynomial = X^3 + (-1)"), std::string::npos) << s;
  EXPECT_NE(s.find("semisimple         = yes"), std::string::npos);
  std::string z = minpoly_text(3, "0", "0");
  EXPECT_NE(z.find("minimal polynomial = X^3\n"), std::string::npos) << z;
  EXPECT_NE(z.find("semisimple         = no"), std::string::npos);
}
