// Verification suites, classification tables, the coideal subalgebra lattice
// and the text front-ends used by the command-line tool.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcsa/uqsl2.hpp"

namespace qcsa {

enum class Status { Pass, Fail, Discrepancy };
// "pass", "fail", "recorded-discrepancy"
std::string status_name(Status s);

struct Check {
  std::string id;
  // The statement being checked, in words.
  std::string anchor;
  Status status = Status::Pass;
  std::string witness;
  double elapsed_ms = 0;
};

struct RunConfig {
  int n = 3;
  std::uint64_t seed = 42;
  int samples = 10;
  // Empty means every suite.
  std::vector<std::string> suites;
  bool timing = true;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> const& suite_names();
// Throws ConfigError for even or small N, samples < 1 or unknown suites.
void validate_config(RunConfig const& config);

struct Summary {
  int pass = 0;
  int fail = 0;
  int discrepancy = 0;
};

struct Report {
  RunConfig config;
  // Sorted by id.
  std::vector<Check> checks;
  double elapsed_ms = 0;

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
};

Report run_verify(RunConfig const& config);
// One JSON object {config, checks, summary}; elapsed values are 0 without timing.
std::string report_json(Report const& report);

// Both classification tables with computed and claimed columns.
std::string render_tables(int n, std::uint64_t seed);

struct LatticeNode {
  std::string id;
  std::string label;
  FamilySpec spec;
  int dimension = 0;
  bool hopf = false;
};

struct LatticeEdge {
  std::string upper;
  std::string lower;
};

struct Lattice {
  std::vector<LatticeNode> nodes;
  // Covering relations among the nodes, each a verified strict inclusion.
  std::vector<LatticeEdge> edges;
};

// Family representatives sharing one sampled (lambda, mu) so that the drawn
// inclusions between <v>, <w>, <u> and <v, w> hold.
Lattice build_lattice(Uqsl2 const& uq, std::uint64_t seed);
std::string lattice_dot(Lattice const& lattice);
// Expected covering edges between the family nodes, by node id; <K> is not
// among them.
std::vector<LatticeEdge> const& figure_edges(int n);

std::string minpoly_text(int n, std::string const& alpha, std::string const& beta);
std::string dagger_text(int n, std::string const& family);

}  // namespace qcsa
