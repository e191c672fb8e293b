// Exact arithmetic in the cyclotomic field Q(q), q a primitive N-th root of
// unity, N odd. Elements are residues modulo the N-th cyclotomic polynomial.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcsa {

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Immutable, cached for the process lifetime; one instance per order.
class CycContext {
 public:
  static CycContext const& get(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  // Coefficients of Phi_N, lowest degree first.
  std::vector<long> const& modulus() const { return modulus_; }

  CycContext(CycContext const&) = delete;
  CycContext& operator=(CycContext const&) = delete;

 private:
  explicit CycContext(int order);
  int order_;
  std::vector<long> modulus_;
};

std::vector<long> cyclotomic_polynomial(int n);

class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long n);  // NOLINT: integers embed implicitly
  explicit CycScalar(mpq_class const& r);
  CycScalar(CycContext const& ctx, std::vector<mpq_class> const& coeffs);

  static CycScalar zero(CycContext const& ctx);
  static CycScalar one(CycContext const& ctx);
  static CycScalar q_power(CycContext const& ctx, long e);

  // Null for context-free rationals.
  CycContext const* context() const { return ctx_; }
  int length() const;
  mpq_class coefficient(int i) const;
  std::vector<mpq_class> coefficients() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return length() <= 1; }

  CycScalar operator-() const;
  friend CycScalar operator+(CycScalar const& a, CycScalar const& b);
  friend CycScalar operator-(CycScalar const& a, CycScalar const& b);
  friend CycScalar operator*(CycScalar const& a, CycScalar const& b);
  friend CycScalar operator/(CycScalar const& a, CycScalar const& b);
  CycScalar& operator+=(CycScalar const& b) { return *this = *this + b; }
  CycScalar& operator-=(CycScalar const& b) { return *this = *this - b; }
  CycScalar& operator*=(CycScalar const& b) { return *this = *this * b; }
  CycScalar& operator/=(CycScalar const& b) { return *this = *this / b; }
  friend bool operator==(CycScalar const& a, CycScalar const& b);
  friend bool operator!=(CycScalar const& a, CycScalar const& b) { return !(a == b); }

  CycScalar inverse() const;
  CycScalar pow(long e) const;
  // this * q^e, cheaper than a general product.
  CycScalar mul_qpow(long e) const;

  std::string str() const;

 private:
  static constexpr int kInline = 8;
  struct Big {
    std::vector<mpz_class> num;
    mpz_class den;
  };
  friend struct ScalarKernel;

  CycContext const* ctx_ = nullptr;
  std::int64_t den_ = 1;
  std::array<std::int64_t, kInline> num_{};
  std::uint8_t len_ = 0;
  std::shared_ptr<Big const> big_;
};

std::ostream& operator<<(std::ostream& os, CycScalar const& s);

// (m)_t = (1 - t^m)/(1 - t); t = 1 is rejected.
CycScalar q_integer(long m, CycScalar const& t);
CycScalar q_factorial(long m, CycScalar const& t);
CycScalar q_binomial(long n, long i, CycScalar const& t);

CycScalar parse_scalar(std::string_view text, CycContext const& ctx);
std::string format_scalar(CycScalar const& s);

// Multiplicative order of a root of unity, 0 if s is not one.
int root_order(CycScalar const& s);

}  // namespace qcsa
