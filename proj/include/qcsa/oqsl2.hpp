// The finite quotient O_q(SL2) at an odd root of unity in the basis
// b^i c^j d^k, its pairing with u_q(sl2), both module actions and the
// correspondence A -> A^dagger between coideal subalgebras of the two sides.
#pragma once

#include <array>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qcsa/algebra.hpp"
#include "qcsa/coideal.hpp"
#include "qcsa/uqsl2.hpp"

namespace qcsa {

class Oqsl2 : public HopfAlgebra {
 public:
  // The algebra at the primitive root q^power.
  explicit Oqsl2(int n, int power = 1);

  int n() const { return n_; }
  int root_power() const { return power_; }
  CycScalar const& q() const { return q_; }
  // (q^power)^e
  CycScalar qp(long e) const { return CycScalar::q_power(*field_, power_ * e); }

  CycContext const& field() const override { return *field_; }
  int dimension() const override { return n_ * n_ * n_; }
  int unit_key() const override { return 0; }
  std::string key_name(int key) const override;
  Priority const& key_order() const override { return order_; }
  Vec basis_product(int a, int b) const override;
  Vec basis_coproduct(int a) const override;
  CycScalar basis_counit(int a) const override;
  Vec basis_antipode(int a) const override;

  // k is reduced mod N.
  int key(int i, int j, int k) const;
  std::array<int, 3> exps(int key) const;
  // Zero when i or j leaves [0, N).
  Vec mono(int i, int j, int k, CycScalar const& c = CycScalar(1)) const;

  Vec a() const { return a_; }
  Vec b() const { return mono(1, 0, 0); }
  Vec c() const { return mono(0, 1, 0); }
  Vec d() const { return mono(0, 0, 1); }
  Vec a_inv() const { return a_inv_; }
  Vec d_inv() const { return mono(0, 0, -1); }
  std::vector<Vec> generators() const { return {b(), c(), d()}; }

  // x = b d^-1, y = c d, z = d^2 and the product x^i y^j z^k, which is
  // q^{-i(i-1)/2 + j(j-1)/2 - ij} b^i c^j d^{-i+j+2k}.
  Vec x() const { return mono(1, 0, -1); }
  Vec y() const { return mono(0, 1, 1); }
  Vec z() const { return mono(0, 0, 2); }
  Vec xyz(int i, int j, int k, CycScalar const& c = CycScalar(1)) const;
  // The same with the exponent +i(i-1)/2 - j(j-1)/2 - ij.
  Vec xyz_printed(int i, int j, int k) const;
  // Coordinates in the x^i y^j z^k basis, keyed by key(i, j, k).
  Vec to_xyz(Vec const& f) const;
  Vec from_xyz(Vec const& g) const;

  // V_k = span{x^i y^j z^k}
  Subspace v_submodule(int k) const;
  // The k with f in V_k for a basis monomial.
  int v_degree(int key) const;

  // Relation names that fail, including a = (1 + q^-1 bc) d^-1.
  std::vector<std::string> relation_failures() const;

 private:
  CycContext const* field_;
  int n_;
  int power_;
  CycScalar q_;
  Priority order_;
  Vec a_;
  Vec a_inv_;
  int half_;
  std::vector<Vec> antipode_;
  mutable std::vector<Vec> coproduct_;
  mutable std::vector<char> have_coproduct_;
};

// Actions of u_q(sl2) on O_q(SL2) at the same root. The generator tables come
// from rho(u) applied to the matrix of generators; words act through the
// comultiplication of u_q(sl2).
class OqAction {
 public:
  OqAction(Oqsl2 const& o, Uqsl2 const& u);

  Oqsl2 const& oq() const { return *o_; }
  Uqsl2 const& uq() const { return *u_; }

  // 2x2 matrix rho(E), rho(F), rho(K^e) as row-major scalars.
  std::array<CycScalar, 4> rho(char gen, int e = 1) const;

  // f <- u = (f_(1), u) f_(2)
  Vec right(Vec const& f, Vec const& u) const;
  // u -> f = f_(1) (f_(2), u)
  Vec left(Vec const& u, Vec const& f) const;
  // (f, u) = eps(f <- u)
  CycScalar pair(Vec const& f, Vec const& u) const;

  // Single generators: 'E', 'F', 'T' (for F~) and 'K' with exponent e.
  Vec right_gen(Vec const& f, char gen, int e = 1) const;
  Vec left_gen(char gen, Vec const& f, int e = 1) const;

  // N^3 x N^3 pairing matrix on the two bases; entry (f key, u key).
  std::vector<Vec> pairing_rows() const;
  void write_pairing_csv(std::ostream& os) const;

 private:
  Vec apply(Vec const& f, std::vector<Vec> const& table) const;
  Vec k_power(Vec const& f, int e, bool left) const;

  Oqsl2 const* o_;
  Uqsl2 const* u_;
  std::vector<Vec> re_, rf_, le_, lf_;
  std::vector<int> rk_, lk_;
};

// f <- Lambda over the O basis, with Lambda a right integral of A.
Subspace dagger_by_integral(OqAction const& act, Vec const& lambda);
// {f : f <- a = eps(a) f for the algebra generators a of A}.
Subspace dagger_by_annihilator(OqAction const& act, std::vector<Vec> const& generators);

struct Dagger {
  Subspace space;
  Vec integral;
};
// Both computations; throws std::logic_error if they disagree, if the
// dimension law fails or if the result is not a right coideal subalgebra.
Dagger dagger(OqAction const& act, Subspace const& a, std::vector<Vec> const& generators);

// O_q -> O_{q^-1}, a -> d, b -> q c, c -> q^-1 b, d -> a.
class SigmaCheck {
 public:
  SigmaCheck(Oqsl2 const& source, Oqsl2 const& target);
  Vec operator()(Vec const& f) const;
  Oqsl2 const& source() const { return *src_; }
  Oqsl2 const& target() const { return *dst_; }

 private:
  Oqsl2 const* src_;
  Oqsl2 const* dst_;
  std::vector<Vec> image_;
};

// Generators of <u_{alpha,beta}>^dagger: c (x^{N-1} y <- Lambda), c (x^{N-1} z <- Lambda)
// with Lambda = psi(u), psi = phi / (X - beta) and c = q^-1 / (N-1)_{q^2}!.
struct YzPair {
  Vec lambda;
  Vec y;
  Vec z;
};
YzPair yz_alpha_beta(OqAction const& act, CycScalar const& alpha, CycScalar const& beta);

// x^{N-1} y^{N-1} z <- Lambda for a right integral Lambda of B_{lambda,mu}.
struct WGenerator {
  Vec lambda;
  Vec w;
};
WGenerator w_generator(OqAction const& act, CycScalar const& lambda, CycScalar const& mu);

// Every term has positive x-exponent.
bool in_x_ideal(Oqsl2 const& o, Vec const& f);

}  // namespace qcsa
