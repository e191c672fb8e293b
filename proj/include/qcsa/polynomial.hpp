// Univariate polynomials over CycScalar, lowest degree first, no trailing zeros.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcsa/cyclofield.hpp"

namespace qcsa {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<CycScalar> coeffs);
  static Polynomial constant(CycScalar c);
  static Polynomial x();
  // X - r
  static Polynomial linear(CycScalar const& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  CycScalar coeff(int i) const;
  CycScalar leading() const;
  std::vector<CycScalar> const& coeffs() const { return c_; }

  friend Polynomial operator+(Polynomial const& a, Polynomial const& b);
  friend Polynomial operator-(Polynomial const& a, Polynomial const& b);
  friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
  friend Polynomial operator*(CycScalar const& s, Polynomial const& a);
  friend bool operator==(Polynomial const& a, Polynomial const& b);
  friend bool operator!=(Polynomial const& a, Polynomial const& b) { return !(a == b); }

  std::pair<Polynomial, Polynomial> divmod(Polynomial const& d) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  CycScalar evaluate(CycScalar const& t) const;
  std::string str(std::string const& var = "X") const;

 private:
  void trim();
  std::vector<CycScalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
bool is_squarefree(Polynomial const& p);

}  // namespace qcsa
