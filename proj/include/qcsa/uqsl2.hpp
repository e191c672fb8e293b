// The small quantum group U_q(sl2) at an odd root of unity as the pointed Hopf
// algebra U(D) with K = g, E = x1, F~ = (q - q^-1) K F = x2, together with its
// coideal subalgebra families and the rank-one examples (Taft-type algebras).
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcsa/coideal.hpp"
#include "qcsa/pointed.hpp"
#include "qcsa/polynomial.hpp"

namespace qcsa {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// chi_1(g) = q'^2, chi_2(g) = q'^-2 with q' = q^power; linked gives
// x2 x1 - q'^2 x1 x2 = 1 - g^2, otherwise the graded version.
Datum uqsl2_datum(CycContext const& field, int power, bool linked);

class Uqsl2 {
 public:
  // The algebra at the primitive root q^power, e.g. power = -1 for q^-1.
  explicit Uqsl2(int n, int power = 1, bool linked = true);

  int n() const { return field_->order(); }
  int power() const { return power_; }
  CycContext const& field() const { return *field_; }
  PointedHopfAlgebra const& algebra() const { return alg_; }
  CycScalar const& q() const { return q_; }

  Vec K(int r = 1) const;
  Vec E() const { return alg_.x(0); }
  Vec Ft() const { return alg_.x(1); }
  Vec F() const;
  Vec v(CycScalar const& lambda) const { return E() + lambda * K(); }
  Vec w(CycScalar const& mu) const { return Ft() + mu * K(); }
  Vec u(CycScalar const& alpha, CycScalar const& beta) const {
    return E() + alpha * Ft() + beta * K();
  }
  std::vector<Vec> generators() const { return {K(), E(), Ft()}; }

 private:
  CycContext const* field_;
  int power_;
  CycScalar q_;
  PointedHopfAlgebra alg_;
};

// Names of the defining relations and Hopf structure formulas that fail.
std::vector<std::string> uqsl2_relation_failures(Uqsl2 const& uq);

enum class Family { Full, GroupPower, BorelE, BorelF, Pair, Line, FLine };

struct FamilySpec {
  Family kind = Family::Full;
  int r = 1;
  // Pair: (lambda, mu); Line: (alpha, beta); FLine: (beta, unused).
  CycScalar p1, p2;
};

// "full", "Kr:r", "KrE:r", "KrF:r", "pair:l,m", "line:a,b", "fline:b", and the
// shorthands "K", "E", "F".
FamilySpec parse_family(std::string const& text, CycContext const& field);
std::string family_label(FamilySpec const& spec);
void validate_family(Uqsl2 const& uq, FamilySpec const& spec);
std::vector<Vec> family_generators(Uqsl2 const& uq, FamilySpec const& spec);
int expected_dimension(int n, FamilySpec const& spec);
std::vector<int> expected_group_part(Uqsl2 const& uq, FamilySpec const& spec);
// Validates, then builds the closure with coideal flag and A cap Gamma.
CoidealSubalgebra family_subalgebra(Uqsl2 const& uq, FamilySpec const& spec);
// Empty if coideal, dimension and A cap Gamma agree with the table.
std::string family_mismatch(Uqsl2 const& uq, FamilySpec const& spec, CoidealSubalgebra const& a);

std::vector<int> divisors(int n);

// Low-height element of Q(q) with small rational coefficients.
CycScalar sample_scalar(CycContext const& field, std::mt19937_64& rng, bool nonzero);
// Samples per family kind; the constraint surfaces are solved for the last parameter.
FamilySpec sample_family(Uqsl2 const& uq, Family kind, int r, std::mt19937_64& rng);

Polynomial phi_polynomial(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta);

struct Discriminant {
  CycScalar value;
  std::vector<CycScalar> parts;
};
Discriminant discriminant(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta);
// D != 0 and squarefreeness of phi; throws std::logic_error if they disagree.
bool semisimplicity_check(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta);
// The alpha with 4 alpha = (1 - q^2) beta^2.
CycScalar maschke_alpha(Uqsl2 const& uq, CycScalar const& beta);

Vec evaluate_polynomial(HopfAlgebra const& alg, Polynomial const& p, Vec const& x);

// v = lambda^-1 (E + lambda K), w = mu^-1 (F~ + mu K) for (1 - q^2) lambda mu = 1.
struct PairGenerators {
  Vec v;
  Vec w;
};
PairGenerators pair_generators(Uqsl2 const& uq, CycScalar const& lambda, CycScalar const& mu);
// sum_i q^{-2ik} x^i
Vec idempotent_sum(Uqsl2 const& uq, Vec const& x, int k);

// E -> c^-1 E, F -> c F, K -> K; diagonal on the PBW basis.
Vec theta(Uqsl2 const& uq, CycScalar const& c, Vec const& x);

// The Hopf isomorphism from the algebra at q^-1 to the one at q with
// K -> K, E -> K F, F -> E K^-1.
class Sigma {
 public:
  Sigma(Uqsl2 const& source, Uqsl2 const& target);
  Vec operator()(Vec const& x) const;
  Uqsl2 const& source() const { return *src_; }
  Uqsl2 const& target() const { return *dst_; }

 private:
  Uqsl2 const* src_;
  Uqsl2 const* dst_;
  std::vector<Vec> image_;
};

bool is_hopf_subalgebra(Subspace const& a);

// Rank-one data: Gamma = Z/n, g_1 = g^m, chi(g) = q^e, x^{N1} = mu (1 - g^{m N1}).
struct RankOneData {
  int n;
  int m;
  int e;
  int mu;
};
Datum rank_one_datum(CycContext const& field, RankOneData const& d);
// ord(chi(g)^m)
int rank_one_n1(RankOneData const& d);

}  // namespace qcsa
