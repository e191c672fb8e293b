// Finite-dimensional Hopf algebras with a fixed basis indexed by 0..dim-1.
// Tensors of two basis keys (a, b) are encoded as a * dim + b.
#pragma once

#include <random>
#include <string>

#include "qcsa/linalg.hpp"

namespace qcsa {

class HopfAlgebra {
 public:
  virtual ~HopfAlgebra() = default;

  virtual CycContext const& field() const = 0;
  virtual int dimension() const = 0;
  virtual int unit_key() const = 0;
  virtual std::string key_name(int key) const = 0;
  // Larger priority means larger in the basis-key total order.
  virtual Priority const& key_order() const = 0;

  virtual Vec basis_product(int a, int b) const = 0;
  virtual Vec basis_coproduct(int a) const = 0;
  virtual CycScalar basis_counit(int a) const = 0;
  virtual Vec basis_antipode(int a) const = 0;

  virtual Vec multiply(Vec const& a, Vec const& b) const;
  Vec comultiply(Vec const& a) const;
  CycScalar counit(Vec const& a) const;
  Vec antipode(Vec const& a) const;

  Vec one() const { return Vec::unit(unit_key(), CycScalar::one(field())); }
  Vec scalar(CycScalar const& c) const { return Vec::unit(unit_key(), c); }
  Vec power(Vec const& a, long n) const;
  // Terms in decreasing key order, "coeff * key" joined by " + ".
  std::string format(Vec const& v) const;

  Vec tensor_multiply(Vec const& s, Vec const& t) const;
  // a (x) b
  Vec tensor(Vec const& a, Vec const& b) const;
  // m(S (x) id) and m(id (x) S) applied to a tensor.
  Vec multiply_tensor(Vec const& t, bool antipode_left, bool antipode_right) const;
  // (Delta (x) id) and (id (x) Delta) on a tensor, giving triple tensors.
  Vec comultiply_left(Vec const& t) const;
  Vec comultiply_right(Vec const& t) const;
  // Splits a tensor into right-factor keys with their left-factor vectors.
  std::vector<std::pair<int, Vec>> split_by_right(Vec const& t) const;
};

// Maps a linear function over the basis.
template <class F>
Vec linear_map(Vec const& v, F&& image_of_key) {
  Vec out;
  for (auto const& t : v) out = Vec::axpy(out, t.coef, image_of_key(t.key));
  return out;
}

// Sum of `terms` basis elements with coefficients a q^e, a in [-3, 3].
Vec random_element(HopfAlgebra const& alg, std::mt19937_64& rng, int terms);

// Associativity, Delta multiplicativity, coassociativity, counit, antipode and
// the anti-multiplicativity of S on random elements; the first failing axiom
// name, or empty.
std::string hopf_axiom_failure(HopfAlgebra const& alg, std::mt19937_64& rng, int samples);

}  // namespace qcsa
