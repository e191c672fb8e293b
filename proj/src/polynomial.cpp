#include "qcsa/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace qcsa {

Polynomial::Polynomial(std::vector<CycScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(CycScalar c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::x() { return Polynomial({CycScalar(0), CycScalar(1)}); }

Polynomial Polynomial::linear(CycScalar const& r) { return Polynomial({-r, CycScalar(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycScalar Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return CycScalar(0);
  return c_[i];
}

CycScalar Polynomial::leading() const {
  if (c_.empty()) return CycScalar(0);
  return c_.back();
}

Polynomial operator+(Polynomial const& a, Polynomial const& b) {
  std::vector<CycScalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator-(Polynomial const& a, Polynomial const& b) {
  std::vector<CycScalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<CycScalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(CycScalar const& s, Polynomial const& a) {
  std::vector<CycScalar> r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * a.c_[i];
  return Polynomial(std::move(r));
}

bool operator==(Polynomial const& a, Polynomial const& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(Polynomial const& d) const {
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  std::vector<CycScalar> rem = c_;
  int dd = d.degree();
  CycScalar inv = d.leading().inverse();
  std::vector<CycScalar> quot(std::max(0, degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    CycScalar c = rem[k] * inv;
    quot[k - dd] = c;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d.c_[i];
  }
  if (static_cast<int>(rem.size()) > dd) rem.resize(std::max(dd, 0));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
  std::vector<CycScalar> r;
  for (int i = 1; i <= degree(); ++i) r.push_back(CycScalar(static_cast<long>(i)) * c_[i]);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

CycScalar Polynomial::evaluate(CycScalar const& t) const {
  CycScalar r(0);
  for (int i = degree(); i >= 0; --i) r = r * t + c_[i];
  return r;
}

std::string Polynomial::str(std::string const& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      os << "(" << c_[i] << ")";
    else if (c_[i].is_one())
      os << mono;
    else
      os << "(" << c_[i] << ")*" << mono;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(Polynomial const& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace qcsa
