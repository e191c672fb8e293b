// Runs every suite at N = 3, 5, 7 and prints one PASS/FAIL line per
// acceptance criterion. Exit status is 0 when the failing criteria are
// exactly the known ones.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>

#include "qcsa/workbench.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;
  std::vector<int> ns;
  // Whether a recorded discrepancy still counts as meeting the criterion.
  bool tolerates_discrepancy = false;
};

bool starts_with(std::string const& s, std::string const& p) { return s.rfind(p, 0) == 0; }

// Statements that fail as printed; see the README.
std::set<int> const kKnownFailures = {5, 8, 9, 15};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 42;
  int samples = 10;
  std::vector<int> ns = {3, 5, 7};
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--samples", samples)->capture_default_str();
  app.add_option("--ns", ns, "values of N to run")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> const criteria = {
      {1, "dimensions", {"hopf-axioms.dimension."}, {3, 5, 7}},
      {2,
       "Hopf axioms",
       {"hopf-axioms.relations.", "hopf-axioms.axioms.", "hopf-axioms.coproduct.",
        "hopf-axioms.antipode."},
       {3, 5}},
      {3, "classification table", {"classification.table."}, {3, 5, 7}},
      {4, "minimal polynomial", {"minpoly."}, {3, 5, 7}},
      {5, "B_{lambda,mu} structure", {"taft.pair."}, {3, 5}},
      {6,
       "monomial actions",
       {"actions.xyz-basis", "actions.xyz-lemma", "actions.xyz-printed", "actions.bcd-e",
        "actions.bcd-f"},
       {3, 5, 7},
       true},
      {7, "dagger law", {"dagger."}, {3, 5}},
      {8, "dagger identities and Taft presentations", {"thm52."}, {3, 5}},
      {9, "<u>^dagger generators", {"thm53."}, {3, 5}},
      {10, "(B_{lambda,mu})^dagger", {"thm54."}, {3, 5}},
      {11, "normality", {"normality."}, {3, 5}, true},
      {12, "theta_c orbits", {"classification.orbits."}, {3}},
      {13, "Maschke counterexample", {"maschke."}, {3, 5, 7}},
      {14, "left action examples", {"actions.examples."}, {3}},
      {15, "pointed examples", {"classification.example-"}, {3}},
      {16, "generator extraction roundtrip", {"roundtrip."}, {3}},
  };

  std::map<int, qcsa::Report> reports;
  std::map<int, double> wall;
  for (int n : ns) {
    qcsa::RunConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.samples = samples;
    auto t0 = std::chrono::steady_clock::now();
    reports.emplace(n, qcsa::run_verify(cfg));
    wall[n] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::set<int> failed;
  auto line = [&](int number, std::string const& title, bool ok, std::string const& detail) {
    if (!ok) failed.insert(number);
    std::printf("criterion %2d %-4s %s: %s\n", number, ok ? "PASS" : "FAIL", title.c_str(),
                detail.c_str());
  };

  for (auto const& cr : criteria) {
    int matched = 0, fails = 0, discs = 0;
    std::string first_bad, missing;
    for (int n : cr.ns) {
      auto it = reports.find(n);
      if (it == reports.end()) {
        missing += " N=" + std::to_string(n);
        continue;
      }
      for (auto const& c : it->second.checks) {
        bool hit = false;
        for (auto const& p : cr.prefixes) hit = hit || starts_with(c.id, p);
        if (!hit) continue;
        ++matched;
        bool bad = c.status == qcsa::Status::Fail ||
                   (c.status == qcsa::Status::Discrepancy && !cr.tolerates_discrepancy);
        if (c.status == qcsa::Status::Fail) ++fails;
        if (c.status == qcsa::Status::Discrepancy) ++discs;
        if (bad && first_bad.empty())
          first_bad = "N=" + std::to_string(n) + " " + c.id + " [" +
                      qcsa::status_name(c.status) + "] " + c.witness;
      }
    }
    std::string detail = std::to_string(matched) + " checks, " + std::to_string(fails) +
                         " fail, " + std::to_string(discs) + " recorded-discrepancy";
    if (!missing.empty()) detail += "; not run at" + missing;
    if (!first_bad.empty()) detail += "; " + first_bad;
    line(cr.number, cr.title, matched > 0 && first_bad.empty() && missing.empty(), detail);
  }

  {
    bool ok = wall.count(3) && wall.count(7) && wall[3] <= 10.0 && wall[7] <= 300.0;
    std::string detail;
    for (auto const& [n, s] : wall) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sN=%d %.2f s", detail.empty() ? "" : ", ", n, s);
      detail += buf;
    }
    line(17, "runtime", ok, detail + " (limits 10 s at N=3, 300 s at N=7)");
  }

  std::set<int> unexpected, fixed;
  for (int f : failed)
    if (!kKnownFailures.count(f)) unexpected.insert(f);
  for (int k : kKnownFailures)
    if (!failed.count(k)) fixed.insert(k);
  std::printf("%zu of 17 criteria pass", 17 - failed.size());
  if (!failed.empty()) {
    std::printf("; failing:");
    for (int f : failed) std::printf(" %d", f);
  }
  std::printf("\n");
  for (int k : fixed) std::printf("known failure %d now passes; update the known list\n", k);
  return unexpected.empty() && fixed.empty() ? 0 : 1;
}
