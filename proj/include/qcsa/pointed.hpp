// Finite-dimensional pointed Hopf algebras U(D) over a finite abelian group,
// presented by a datum (Gamma, g_i, chi_i, lambda_ij, mu_i).
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcsa/algebra.hpp"
#include "qcsa/cyclofield.hpp"

namespace qcsa {

class DatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Product of cyclic groups; elements are indexed by mixed radix, identity 0.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> orders = {});

  std::vector<int> const& orders() const { return orders_; }
  int size() const { return size_; }
  int index(std::vector<int> const& exps) const;
  std::vector<int> exps(int element) const;
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long e) const;
  int element_order(int a) const;

 private:
  std::vector<int> orders_;
  int size_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

// A character is an exponent vector c; chi(g) = q^(sum_k c_k g_k M / n_k),
// where M is the field order and n_k the cyclic orders.
using Character = std::vector<int>;

struct Datum {
  AbelianGroup group;
  std::vector<int> g;
  std::vector<Character> chi;
  // theta x theta, only entries above the diagonal are used.
  std::vector<std::vector<CycScalar>> lambda;
  std::vector<int> mu;

  int theta() const { return static_cast<int>(g.size()); }
};

// q-exponent of chi(g), reduced mod the field order.
int character_exponent(CycContext const& field, AbelianGroup const& group, Character const& chi,
                       int g);
void validate_datum(CycContext const& field, Datum const& d);
Datum parse_datum(std::string const& text, CycContext const& field);
std::string format_datum(Datum const& d);

class PointedHopfAlgebra : public HopfAlgebra {
 public:
  PointedHopfAlgebra(CycContext const& field, Datum datum);

  CycContext const& field() const override { return *field_; }
  int dimension() const override { return dim_; }
  int unit_key() const override { return 0; }
  std::string key_name(int key) const override;
  Priority const& key_order() const override { return order_; }
  Vec basis_product(int a, int b) const override;
  Vec basis_coproduct(int a) const override;
  CycScalar basis_counit(int a) const override;
  Vec basis_antipode(int a) const override;

  Datum const& datum() const { return datum_; }
  AbelianGroup const& group() const { return datum_.group; }
  int theta() const { return datum_.theta(); }
  // N_i, the order of chi_i(g_i).
  std::vector<int> const& nilpotency() const { return nil_; }
  int mono_count() const { return monos_; }

  int key(int g, std::vector<int> const& m) const;
  int key(int g, int mono) const { return g * monos_ + mono; }
  int key_group(int key) const { return key / monos_; }
  int key_mono(int key) const { return key % monos_; }
  int mono_index(std::vector<int> const& m) const;
  std::vector<int> mono_exps(int mono) const;

  Vec group_element(int g) const { return Vec::unit(key(g, 0), CycScalar::one(*field_)); }
  Vec x(int i) const;
  int chi_exp(int i, int g) const { return chi_exp_[i * datum_.group.size() + g]; }
  CycScalar chi_value(int i, int g) const { return CycScalar::q_power(*field_, chi_exp(i, g)); }

  Vec left_group(int g, Vec const& v) const;
  Vec right_group(Vec const& v, int g) const;

  // xi_i acting from the left, xi_i(g x^m) = [m = e_i]:
  // d_i(g x^m) = (m_i)_{1/q_i} prod_{r>i} chi_i(g_r)^{-m_r} g x^{m-e_i}.
  Vec partial(int i, Vec const& u) const;
  // alpha_i acting from the left, alpha_i(g) = chi_i(g)^{-1}.
  Vec tau(int i, Vec const& u) const;
  // e_g acting from the left through the coproduct.
  Vec project_eg(int g, Vec const& u) const;
  // (coefficient in k[Gamma], exponent vector) of the largest monomial.
  std::pair<Vec, std::vector<int>> leading_term(Vec const& u) const;
  // Graded-lex comparison of exponent vectors: -1, 0, 1.
  static int compare_mono(std::vector<int> const& a, std::vector<int> const& b);

 private:
  struct CoTerm {
    int left;
    int right;
    int shift;
    CycScalar coef;
  };
  Vec times_letter(int mono, int k, std::map<std::pair<int, int>, Vec>& memo) const;
  Vec right_letter(Vec const& v, int k, std::map<std::pair<int, int>, Vec>& memo) const;

  CycContext const* field_;
  Datum datum_;
  std::vector<int> nil_;
  std::vector<int> stride_;
  int monos_ = 1;
  int dim_ = 1;
  std::vector<int> chi_exp_;
  std::vector<std::vector<Vec>> table_;
  std::vector<std::vector<CoTerm>> coproduct_;
  std::vector<Vec> antipode_mono_;
  std::vector<std::vector<CycScalar>> qint_;
  Priority order_;
};

std::vector<std::vector<int>> all_subgroups(AbelianGroup const& group);
std::vector<int> subgroup_closure(AbelianGroup const& group, std::vector<int> const& gens);
// Characters trivial on the subgroup.
std::vector<Character> character_perp(CycContext const& field, AbelianGroup const& group,
                                      std::vector<int> const& subgroup);
// Partition of {0..theta-1}: i ~ j iff g_i = g_j mod G and chi_i = chi_j on G.
std::vector<std::vector<int>> sim_classes(PointedHopfAlgebra const& u,
                                          std::vector<int> const& subgroup);

}  // namespace qcsa
