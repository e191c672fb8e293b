// Internal: the check recorder and the suite entry points.
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcsa/oqsl2.hpp"
#include "qcsa/workbench.hpp"

namespace qcsa::suites {

struct Outcome {
  Status status = Status::Pass;
  std::string witness;
};

inline Outcome verdict(bool ok, std::string witness) {
  return {ok ? Status::Pass : Status::Fail, std::move(witness)};
}

// The printed statement fails while the corrected one holds.
inline Outcome discrepancy(std::string witness) { return {Status::Discrepancy, std::move(witness)}; }

class Recorder {
 public:
  Recorder(std::vector<Check>& out, bool timing) : out_(&out), timing_(timing) {}
  // Exceptions from body become failures carrying the message.
  void run(std::string const& id, std::string const& anchor, std::function<Outcome()> const& body);

 private:
  std::vector<Check>* out_;
  bool timing_;
};

// Shared contexts for one N: both algebras at q and at q^-1.
struct Workspace {
  explicit Workspace(int n);
  int n;
  Uqsl2 uq;
  Uqsl2 uq_inv;
  Oqsl2 oq;
  Oqsl2 oq_inv;
  OqAction act;
  OqAction act_inv;
};

struct SuiteContext {
  Workspace const& ws;
  Recorder& rec;
  std::mt19937_64 rng;
  int samples;
};

void hopf_axioms(SuiteContext& c);
void classification(SuiteContext& c);
void minpoly(SuiteContext& c);
void taft(SuiteContext& c);
void normality(SuiteContext& c);
void maschke(SuiteContext& c);
void roundtrip(SuiteContext& c);
void dagger(SuiteContext& c);
void thm52(SuiteContext& c);
void thm53(SuiteContext& c);
void thm54(SuiteContext& c);
void actions(SuiteContext& c);

// Helpers shared by the suite files.
std::string fmt(HopfAlgebra const& alg, Vec const& v);
std::string fmt(CycScalar const& s);
std::string join_list(std::vector<std::string> const& items, std::string const& sep = "; ");
// "full", "group", "borel-e", "borel-f", "pair", "line", "fline"
char const* kind_name(Family k);
// Representatives of every family: all r for the group families, `count`
// sampled parameters for the others.
std::vector<FamilySpec> family_instances(Uqsl2 const& uq, std::mt19937_64& rng, int count);

}  // namespace qcsa::suites
