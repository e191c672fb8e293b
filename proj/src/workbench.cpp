#include "qcsa/workbench.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "suites.hpp"

namespace qcsa {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Discrepancy:
      return "recorded-discrepancy";
  }
  return "";
}

std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names = {
      "hopf-axioms", "classification", "minpoly", "taft",      "dagger",  "thm52",
      "thm53",       "thm54",          "normality", "maschke", "actions", "roundtrip"};
  return names;
}

void validate_config(RunConfig const& config) {
  if (config.n < 3 || config.n % 2 == 0)
    throw ConfigError("N must be an odd integer > 1, got " + std::to_string(config.n));
  if (config.samples < 1) throw ConfigError("samples must be at least 1");
  auto const& names = suite_names();
  for (auto const& s : config.suites)
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw ConfigError("unknown suite '" + s + "'");
}

Summary Report::summary() const {
  Summary s;
  for (auto const& c : checks) {
    if (c.status == Status::Pass) ++s.pass;
    if (c.status == Status::Fail) ++s.fail;
    if (c.status == Status::Discrepancy) ++s.discrepancy;
  }
  return s;
}

namespace suites {

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void Recorder::run(std::string const& id, std::string const& anchor,
                   std::function<Outcome()> const& body) {
  auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (std::exception const& e) {
    out = {Status::Fail, std::string("exception: ") + e.what()};
  }
  out_->push_back({id, anchor, out.status, out.witness, timing_ ? ms_since(t0) : 0.0});
}

Workspace::Workspace(int n_)
    : n(n_),
      uq(n_, 1),
      uq_inv(n_, -1),
      oq(n_, 1),
      oq_inv(n_, -1),
      act(oq, uq),
      act_inv(oq_inv, uq_inv) {}

std::string fmt(HopfAlgebra const& alg, Vec const& v) { return alg.format(v); }
std::string fmt(CycScalar const& s) { return format_scalar(s); }

std::string join_list(std::vector<std::string> const& items, std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

char const* kind_name(Family k) {
  switch (k) {
    case Family::Full:
      return "full";
    case Family::GroupPower:
      return "group";
    case Family::BorelE:
      return "borel-e";
    case Family::BorelF:
      return "borel-f";
    case Family::Pair:
      return "pair";
    case Family::Line:
      return "line";
    case Family::FLine:
      return "fline";
  }
  return "";
}

std::vector<FamilySpec> family_instances(Uqsl2 const& uq, std::mt19937_64& rng, int count) {
  std::vector<FamilySpec> out;
  out.push_back(sample_family(uq, Family::Full, 1, rng));
  for (Family kind : {Family::GroupPower, Family::BorelE, Family::BorelF})
    for (int r : divisors(uq.n())) out.push_back(sample_family(uq, kind, r, rng));
  for (Family kind : {Family::Pair, Family::Line, Family::FLine})
    for (int i = 0; i < count; ++i) out.push_back(sample_family(uq, kind, 1, rng));
  return out;
}

}  // namespace suites

namespace {

std::uint32_t fnv1a(std::string const& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : s) h = (h ^ ch) * 16777619u;
  return h;
}

// Each suite draws from its own stream so that running a subset reproduces
// the same checks.
std::mt19937_64 suite_rng(std::uint64_t seed, std::string const& name) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    fnv1a(name)};
  return std::mt19937_64(seq);
}

}  // namespace

Report run_verify(RunConfig const& config) {
  validate_config(config);
  auto t0 = suites::Clock::now();
  Report report;
  report.config = config;
  suites::Workspace ws(config.n);
  suites::Recorder rec(report.checks, config.timing);
  using Fn = void (*)(suites::SuiteContext&);
  std::map<std::string, Fn> const table = {
      {"hopf-axioms", suites::hopf_axioms}, {"classification", suites::classification},
      {"minpoly", suites::minpoly},         {"taft", suites::taft},
      {"dagger", suites::dagger},           {"thm52", suites::thm52},
      {"thm53", suites::thm53},             {"thm54", suites::thm54},
      {"normality", suites::normality},     {"maschke", suites::maschke},
      {"actions", suites::actions},         {"roundtrip", suites::roundtrip}};
  auto const& chosen = config.suites.empty() ? suite_names() : config.suites;
  for (auto const& name : suite_names()) {
    if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) continue;
    suites::SuiteContext ctx{ws, rec, suite_rng(config.seed, name), config.samples};
    table.at(name)(ctx);
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](Check const& a, Check const& b) { return a.id < b.id; });
  report.elapsed_ms = config.timing ? suites::ms_since(t0) : 0.0;
  return report;
}

std::string report_json(Report const& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  auto const& c = report.config;
  ordered_json suites = ordered_json::array();
  for (auto const& s : c.suites.empty() ? suite_names() : c.suites) suites.push_back(s);
  j["config"] = {{"n", c.n}, {"seed", c.seed}, {"samples", c.samples}, {"suites", suites},
                 {"timing", c.timing}};
  ordered_json checks = ordered_json::array();
  for (auto const& ch : report.checks)
    checks.push_back({{"id", ch.id},
                      {"anchor", ch.anchor},
                      {"status", status_name(ch.status)},
                      {"witness", ch.witness},
                      {"elapsed_ms", ch.elapsed_ms}});
  j["checks"] = checks;
  auto s = report.summary();
  j["summary"] = {{"total", report.checks.size()},
                  {"pass", s.pass},
                  {"fail", s.fail},
                  {"recorded_discrepancy", s.discrepancy},
                  {"elapsed_ms", report.elapsed_ms}};
  return j.dump(2) + "\n";
}

}  // namespace qcsa
