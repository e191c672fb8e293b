// Subspaces of a Hopf algebra, right coideal subalgebras and the tools used to
// certify them: closure, coideal test, generator extraction with reduced data,
// right integrals, minimal polynomials, normality and Taft presentations.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qcsa/algebra.hpp"
#include "qcsa/linalg.hpp"
#include "qcsa/pointed.hpp"
#include "qcsa/polynomial.hpp"

namespace qcsa {

// Canonical echelon basis relative to the algebra's key order.
class Subspace {
 public:
  explicit Subspace(HopfAlgebra const& alg);
  Subspace(HopfAlgebra const& alg, std::vector<Vec> const& spanning);

  HopfAlgebra const& algebra() const { return *alg_; }
  int dimension() const { return ech_.rank(); }
  // Rows by increasing pivot.
  std::vector<Vec> const& rows() const;
  std::vector<int> pivots() const;
  bool contains(Vec const& v) const { return ech_.contains(v); }
  Vec reduce(Vec const& v) const { return ech_.reduce(v); }
  // Returns the normalized new row, or zero if v was already in the span.
  Vec insert(Vec const& v);
  std::string str() const;

  friend bool operator==(Subspace const& a, Subspace const& b);
  friend bool operator!=(Subspace const& a, Subspace const& b) { return !(a == b); }

 private:
  HopfAlgebra const* alg_;
  Echelon ech_;
  mutable std::vector<Vec> rows_;
  mutable bool rows_valid_ = false;
};

struct CoidealSubalgebra {
  Subspace space;
  std::vector<Vec> generators;
  // A cap Gamma as group element indices; empty unless the algebra is pointed.
  std::vector<int> group_part;
  bool coideal_flag = false;
};

// Smallest unital subalgebra containing gens.
Subspace span_closure(HopfAlgebra const& alg, std::vector<Vec> const& gens);
// Closure plus coideal test, and A cap Gamma when alg is a PointedHopfAlgebra.
CoidealSubalgebra make_subalgebra(HopfAlgebra const& alg, std::vector<Vec> gens);

bool is_subalgebra(Subspace const& a);
bool is_right_coideal(Subspace const& a);
bool partial_stability(PointedHopfAlgebra const& u, Subspace const& a);
std::vector<int> intersect_with_group(PointedHopfAlgebra const& u, Subspace const& a);
// A cap k[Gamma] is spanned by A cap Gamma.
bool group_part_spans(PointedHopfAlgebra const& u, Subspace const& a);

struct ReducedDatum {
  std::vector<int> cls;
  Matrix c;
};

// g_{i1} sum_s c_s g_{is}^{-1} x_{is} + a g_{i1}
Vec xi_element(PointedHopfAlgebra const& u, std::vector<int> const& cls,
               std::vector<CycScalar> const& c, CycScalar const& a);
// The elements X_J(C), zero rows skipped.
std::vector<Vec> datum_elements(PointedHopfAlgebra const& u, ReducedDatum const& d);
// Empty when (RD1)-(RD3) hold, otherwise the first violated condition.
std::string reduced_datum_violation(PointedHopfAlgebra const& u, std::vector<int> const& subgroup,
                                    ReducedDatum const& d);

class NotCoidealError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Extraction {
  std::vector<int> subgroup;
  std::vector<ReducedDatum> data;
};

Extraction extract_generators(PointedHopfAlgebra const& u, Subspace const& a);
// G together with every X_J(C).
std::vector<Vec> extraction_generators(PointedHopfAlgebra const& u, Extraction const& e);

// Random subgroup and reduced data of admissible shape, entries from a small pool.
Extraction random_reduced_data(PointedHopfAlgebra const& u, std::mt19937_64& rng);

// Lambda with Lambda a = eps(a) Lambda for the given generators of A; the first
// nonzero coordinate in key order is 1.
Vec right_integral(Subspace const& a, std::vector<Vec> const& generators);

Polynomial minimal_polynomial(HopfAlgebra const& alg, Vec const& u);

// x <| h = S(h_(1)) x h_(2)
Vec adjoint(HopfAlgebra const& alg, Vec const& x, Vec const& h);
// Stability of A under <| h for h in algebra generators of H, which suffices
// because <| is a right action.
bool is_normal(Subspace const& a, std::vector<Vec> const& algebra_generators);

struct TaftCertificate {
  bool ok = false;
  std::string failure;
};
// A is T_{m,n}(xi) via x, g. Throws std::invalid_argument if ord(xi) != n.
TaftCertificate check_taft_presentation(Subspace const& a, Vec const& x, Vec const& g, int m, int n,
                                        CycScalar const& xi);

Subspace intersect(Subspace const& a, Subspace const& b);
Subspace join(Subspace const& a, Subspace const& b);

}  // namespace qcsa
