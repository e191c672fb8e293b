#include "qcsa/cyclofield.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace qcsa {

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  // X^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<long> f = cyclotomic_polynomial(d);
    int df = static_cast<int>(f.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<long> quot(dp - df + 1, 0);
    for (int k = dp; k >= df; --k) {
      long c = p[k];
      quot[k - df] = c;
      if (c == 0) continue;
      for (int i = 0; i <= df; ++i) p[k - df + i] -= c * f[i];
    }
    p = quot;
  }
  return p;
}

CycContext::CycContext(int order) : order_(order), modulus_(cyclotomic_polynomial(order)) {}

CycContext const& CycContext::get(int order) {
  if (order < 3 || order % 2 == 0)
    throw std::invalid_argument("cyclotomic order must be odd and greater than 1, got " +
                                std::to_string(order));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) slot.reset(new CycContext(order));
  return *slot;
}

namespace {

struct Overflow {};

// Checked 128-bit integer; any overflow aborts the fast path.
struct W {
  __int128 v = 0;
  W() = default;
  W(long long x) : v(x) {}  // NOLINT
  static W raw(__int128 x) {
    W w;
    w.v = x;
    return w;
  }
};
inline W operator+(W a, W b) {
  __int128 r;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
  return W::raw(r);
}
inline W operator-(W a, W b) {
  __int128 r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
  return W::raw(r);
}
inline W operator*(W a, W b) {
  __int128 r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
  return W::raw(r);
}
inline W operator-(W a) { return W(0) - a; }
inline W operator/(W a, W b) { return W::raw(a.v / b.v); }
inline bool operator==(W a, W b) { return a.v == b.v; }
inline bool operator!=(W a, W b) { return a.v != b.v; }
inline bool is_zero(W a) { return a.v == 0; }
inline bool is_zero(mpz_class const& a) { return sgn(a) == 0; }
inline bool is_unit_abs(W a) { return a.v == 1 || a.v == -1; }
inline bool is_unit_abs(mpz_class const& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
inline W gcd_of(W a, W b) {
  unsigned __int128 x = a.v < 0 ? -static_cast<unsigned __int128>(a.v) : a.v;
  unsigned __int128 y = b.v < 0 ? -static_cast<unsigned __int128>(b.v) : b.v;
  while (y) {
    unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  return W::raw(static_cast<__int128>(x));
}
inline mpz_class gcd_of(mpz_class const& a, mpz_class const& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline mpz_class to_mpz(W a) {
  bool neg = a.v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(a.v) : a.v;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(u & ~0UL));
  return neg ? mpz_class(-r) : r;
}

constexpr int kFastCap = 32;

template <class I>
void trim(I* p, int& len) {
  while (len > 0 && is_zero(p[len - 1])) --len;
}

template <class I>
void reduce_mod(std::vector<long> const& phi, I* p, int& len) {
  int d = static_cast<int>(phi.size()) - 1;
  for (int k = len - 1; k >= d; --k) {
    if (is_zero(p[k])) continue;
    I c = p[k];
    for (int i = 0; i < d; ++i)
      if (phi[i] != 0) p[k - d + i] = p[k - d + i] - c * I(phi[i]);
    p[k] = I(0);
  }
  if (len > d) len = d;
  trim(p, len);
}

template <class I>
void normalize(I* num, int& len, I& den) {
  trim(num, len);
  if (len == 0) {
    den = I(1);
    return;
  }
  if (is_unit_abs(den)) return;
  I g = den;
  for (int i = 0; i < len && !is_unit_abs(g); ++i)
    if (!is_zero(num[i])) g = gcd_of(g, num[i]);
  if (is_unit_abs(g)) return;
  for (int i = 0; i < len; ++i) num[i] = num[i] / g;
  den = den / g;
}

}  // namespace

// Arithmetic kernel. Works on int128 buffers first and redoes the operation
// with mpz when anything overflows.
struct ScalarKernel {
  using S = CycScalar;

  static CycContext const* joint(S const& a, S const& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
      throw FieldError("cyclotomic context mismatch");
    return a.ctx_ ? a.ctx_ : b.ctx_;
  }

  static int len(S const& s) { return s.big_ ? static_cast<int>(s.big_->num.size()) : s.len_; }

  static void load(S const& s, W* out, W& den) {
    if (s.big_) throw Overflow{};
    for (int i = 0; i < s.len_; ++i) out[i] = W(s.num_[i]);
    den = W(s.den_);
  }

  static void load(S const& s, std::vector<mpz_class>& out, mpz_class& den) {
    if (s.big_) {
      out = s.big_->num;
      den = s.big_->den;
      return;
    }
    out.resize(s.len_);
    for (int i = 0; i < s.len_; ++i) out[i] = mpz_class(static_cast<long>(s.num_[i]));
    den = mpz_class(static_cast<long>(s.den_));
  }

  static bool fits(W w) { return w.v <= LLONG_MAX && w.v > LLONG_MIN; }

  static S pack(CycContext const* ctx, W const* num, int len, W den) {
    S r;
    r.ctx_ = ctx;
    bool ok = len <= S::kInline && fits(den);
    for (int i = 0; ok && i < len; ++i) ok = fits(num[i]);
    if (ok) {
      r.len_ = static_cast<std::uint8_t>(len);
      r.den_ = static_cast<std::int64_t>(den.v);
      for (int i = 0; i < len; ++i) r.num_[i] = static_cast<std::int64_t>(num[i].v);
      return r;
    }
    auto big = std::make_shared<S::Big>();
    big->num.reserve(len);
    for (int i = 0; i < len; ++i) big->num.push_back(to_mpz(num[i]));
    big->den = to_mpz(den);
    r.big_ = std::move(big);
    return r;
  }

  static S pack(CycContext const* ctx, std::vector<mpz_class>&& num, mpz_class&& den) {
    S r;
    r.ctx_ = ctx;
    int len = static_cast<int>(num.size());
    bool ok = len <= S::kInline && den.fits_slong_p();
    for (int i = 0; ok && i < len; ++i) ok = num[i].fits_slong_p() && num[i] != LONG_MIN;
    if (ok) {
      r.len_ = static_cast<std::uint8_t>(len);
      r.den_ = den.get_si();
      for (int i = 0; i < len; ++i) r.num_[i] = num[i].get_si();
      return r;
    }
    auto big = std::make_shared<S::Big>();
    big->num = std::move(num);
    big->den = std::move(den);
    r.big_ = std::move(big);
    return r;
  }

  template <class I, class Buf>
  static void add_into(CycContext const*, Buf const& a, int la, I const& da, Buf const& b, int lb,
                       I const& db, Buf& out, int& lo, I& dout) {
    lo = std::max(la, lb);
    if (da == db) {
      for (int i = 0; i < lo; ++i) out[i] = (i < la ? a[i] : I(0)) + (i < lb ? b[i] : I(0));
      dout = da;
    } else {
      for (int i = 0; i < lo; ++i)
        out[i] = (i < la ? a[i] * db : I(0)) + (i < lb ? b[i] * da : I(0));
      dout = da * db;
    }
    normalize(&out[0], lo, dout);
  }

  template <class I, class Buf>
  static void mul_into(CycContext const* ctx, Buf const& a, int la, I const& da, Buf const& b,
                       int lb, I const& db, Buf& out, int& lo, I& dout) {
    if (la == 0 || lb == 0) {
      lo = 0;
      dout = I(1);
      return;
    }
    lo = la + lb - 1;
    for (int i = 0; i < lo; ++i) out[i] = I(0);
    for (int i = 0; i < la; ++i) {
      if (is_zero(a[i])) continue;
      for (int j = 0; j < lb; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    if (ctx) reduce_mod(ctx->modulus(), &out[0], lo);
    dout = da * db;
    normalize(&out[0], lo, dout);
  }

  template <bool Mul>
  static S binary(S const& a, S const& b) {
    CycContext const* ctx = joint(a, b);
    int la = len(a), lb = len(b);
    if (la + lb <= kFastCap) {
      try {
        std::array<W, kFastCap> x, y, z;
        W dx, dy, dz;
        load(a, x.data(), dx);
        load(b, y.data(), dy);
        int lz;
        if constexpr (Mul)
          mul_into<W>(ctx, x, la, dx, y, lb, dy, z, lz, dz);
        else
          add_into<W>(ctx, x, la, dx, y, lb, dy, z, lz, dz);
        return pack(ctx, z.data(), lz, dz);
      } catch (Overflow const&) {
      }
    }
    std::vector<mpz_class> x, y, z(std::max(la + lb, 1));
    mpz_class dx, dy, dz;
    load(a, x, dx);
    load(b, y, dy);
    int lz;
    if constexpr (Mul)
      mul_into<mpz_class>(ctx, x, la, dx, y, lb, dy, z, lz, dz);
    else
      add_into<mpz_class>(ctx, x, la, dx, y, lb, dy, z, lz, dz);
    z.resize(lz);
    return pack(ctx, std::move(z), std::move(dz));
  }

  static S negate(S const& a) {
    if (!a.big_) {
      S r = a;
      for (int i = 0; i < a.len_; ++i) r.num_[i] = -a.num_[i];
      return r;
    }
    std::vector<mpz_class> n = a.big_->num;
    for (auto& v : n) v = -v;
    mpz_class d = a.big_->den;
    return pack(a.ctx_, std::move(n), std::move(d));
  }

  static S mul_qpow(S const& a, long e) {
    int l = len(a);
    if (l == 0) return a;
    if (!a.ctx_) throw FieldError("q-power of a context-free rational");
    int n = a.ctx_->order();
    long s = ((e % n) + n) % n;
    if (s == 0) return a;
    if (n <= kFastCap) {
      try {
        std::array<W, kFastCap> x, z;
        W dx;
        load(a, x.data(), dx);
        for (int i = 0; i < n; ++i) z[i] = W(0);
        for (int i = 0; i < l; ++i) z[(i + s) % n] = x[i];
        int lz = n;
        trim(z.data(), lz);
        reduce_mod(a.ctx_->modulus(), z.data(), lz);
        return pack(a.ctx_, z.data(), lz, dx);
      } catch (Overflow const&) {
      }
    }
    std::vector<mpz_class> x, z(n);
    mpz_class dx;
    load(a, x, dx);
    for (int i = 0; i < l; ++i) z[(i + s) % n] = x[i];
    int lz = n;
    trim(z.data(), lz);
    reduce_mod(a.ctx_->modulus(), z.data(), lz);
    z.resize(lz);
    return pack(a.ctx_, std::move(z), std::move(dx));
  }

  static S from_rationals(CycContext const* ctx, std::vector<mpq_class> const& c) {
    mpz_class den = 1;
    for (auto const& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> num(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) num[i] = c[i].get_num() * (den / c[i].get_den());
    int l = static_cast<int>(num.size());
    trim(num.data(), l);
    if (l > 1 && !ctx) throw FieldError("non-rational value needs a cyclotomic context");
    if (ctx) reduce_mod(ctx->modulus(), num.data(), l);
    normalize(num.data(), l, den);
    num.resize(l);
    return pack(ctx, std::move(num), std::move(den));
  }

  static bool equal(S const& a, S const& b) {
    joint(a, b);
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
    }
    if (a.len_ != b.len_ || a.den_ != b.den_) return false;
    for (int i = 0; i < a.len_; ++i)
      if (a.num_[i] != b.num_[i]) return false;
    return true;
  }
};

CycScalar::CycScalar(long n) {
  if (n == LONG_MIN) {
    *this = ScalarKernel::from_rationals(nullptr, {mpq_class(mpz_class(n))});
    return;
  }
  if (n != 0) {
    len_ = 1;
    num_[0] = n;
  }
}

CycScalar::CycScalar(mpq_class const& r) { *this = ScalarKernel::from_rationals(nullptr, {r}); }

CycScalar::CycScalar(CycContext const& ctx, std::vector<mpq_class> const& coeffs) {
  *this = ScalarKernel::from_rationals(&ctx, coeffs);
}

CycScalar CycScalar::zero(CycContext const& ctx) {
  CycScalar r;
  r.ctx_ = &ctx;
  return r;
}

CycScalar CycScalar::one(CycContext const& ctx) {
  CycScalar r(1);
  r.ctx_ = &ctx;
  return r;
}

CycScalar CycScalar::q_power(CycContext const& ctx, long e) { return one(ctx).mul_qpow(e); }

int CycScalar::length() const { return ScalarKernel::len(*this); }

mpq_class CycScalar::coefficient(int i) const {
  if (i < 0 || i >= length()) return 0;
  mpq_class r;
  if (big_) {
    r = mpq_class(big_->num[i], big_->den);
  } else {
    r = mpq_class(mpz_class(static_cast<long>(num_[i])), mpz_class(static_cast<long>(den_)));
  }
  r.canonicalize();
  return r;
}

std::vector<mpq_class> CycScalar::coefficients() const {
  std::vector<mpq_class> out(length());
  for (int i = 0; i < length(); ++i) out[i] = coefficient(i);
  return out;
}

bool CycScalar::is_zero() const { return length() == 0; }

bool CycScalar::is_one() const { return !big_ && len_ == 1 && num_[0] == 1 && den_ == 1; }

CycScalar CycScalar::operator-() const { return ScalarKernel::negate(*this); }

CycScalar operator+(CycScalar const& a, CycScalar const& b) {
  if (b.is_zero()) {
    CycScalar r = a;
    r.ctx_ = ScalarKernel::joint(a, b);
    return r;
  }
  if (a.is_zero()) {
    CycScalar r = b;
    r.ctx_ = ScalarKernel::joint(a, b);
    return r;
  }
  return ScalarKernel::binary<false>(a, b);
}

CycScalar operator-(CycScalar const& a, CycScalar const& b) { return a + (-b); }

CycScalar operator*(CycScalar const& a, CycScalar const& b) {
  if (a.is_one()) {
    CycScalar r = b;
    r.ctx_ = ScalarKernel::joint(a, b);
    return r;
  }
  if (b.is_one()) {
    CycScalar r = a;
    r.ctx_ = ScalarKernel::joint(a, b);
    return r;
  }
  return ScalarKernel::binary<true>(a, b);
}

CycScalar operator/(CycScalar const& a, CycScalar const& b) { return a * b.inverse(); }

bool operator==(CycScalar const& a, CycScalar const& b) { return ScalarKernel::equal(a, b); }

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void qdivmod(QPoly const& a, QPoly const& b, QPoly& quot, QPoly& rem) {
  rem = a;
  qtrim(rem);
  int db = static_cast<int>(b.size()) - 1;
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
  while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
    int k = static_cast<int>(rem.size()) - 1;
    mpq_class c = rem.back() / b.back();
    quot[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b[i];
    rem.pop_back();
    qtrim(rem);
  }
}

QPoly qsub_mul(QPoly const& a, QPoly const& q, QPoly const& b) {
  QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  qtrim(r);
  return r;
}

}  // namespace

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero in cyclotomic field");
  if (length() == 1) {
    mpq_class c = 1 / coefficient(0);
    CycScalar r(c);
    r.ctx_ = ctx_;
    return r;
  }
  QPoly r0(ctx_->modulus().begin(), ctx_->modulus().end());
  QPoly r1 = coefficients();
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    QPoly quot, rem;
    qdivmod(r0, r1, quot, rem);
    QPoly s2 = qsub_mul(s0, quot, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw FieldError("division by zero in cyclotomic field");
  for (auto& v : s1) v /= r1[0];
  return CycScalar(*ctx_, s1);
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar base = *this;
  CycScalar r(1);
  r.ctx_ = ctx_;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

CycScalar CycScalar::mul_qpow(long e) const { return ScalarKernel::mul_qpow(*this, e); }

std::string format_scalar(CycScalar const& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = s.length() - 1; k >= 0; --k) {
    mpq_class c = s.coefficient(k);
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    if (mono.empty())
      os << a.get_str();
    else if (a == 1)
      os << mono;
    else
      os << a.get_str() << "*" << mono;
  }
  return os.str();
}

std::string CycScalar::str() const { return format_scalar(*this); }

std::ostream& operator<<(std::ostream& os, CycScalar const& s) { return os << s.str(); }

CycScalar q_integer(long m, CycScalar const& t) {
  if ((t - CycScalar(1)).is_zero()) throw FieldError("q-integer at t = 1");
  CycScalar one = CycScalar(1) + (t - t);
  if (m >= 0) {
    CycScalar sum = one - one, p = one;
    for (long i = 0; i < m; ++i) {
      sum += p;
      p *= t;
    }
    return sum;
  }
  // (1 - t^m)/(1 - t) = -t^m (1 - t^{-m})/(1 - t)
  return -(t.pow(m) * q_integer(-m, t));
}

CycScalar q_factorial(long m, CycScalar const& t) {
  if (m < 0) throw std::invalid_argument("q_factorial of a negative integer");
  CycScalar r = CycScalar(1) + (t - t);
  for (long i = 1; i <= m; ++i) r *= q_integer(i, t);
  return r;
}

CycScalar q_binomial(long n, long i, CycScalar const& t) {
  CycScalar zero = t - t;
  if (n < 0 || i < 0 || i > n) return zero;
  // Pascal rows: [n,i] = [n-1,i-1] + t^i [n-1,i].
  std::vector<CycScalar> row{zero + CycScalar(1)};
  for (long k = 1; k <= n; ++k) {
    std::vector<CycScalar> next(k + 1, zero);
    CycScalar tp = zero + CycScalar(1);
    for (long j = 0; j <= k; ++j) {
      if (j > 0) next[j] += row[j - 1];
      if (j < k) next[j] += tp * row[j];
      tp *= t;
    }
    row = std::move(next);
  }
  return row[i];
}

int root_order(CycScalar const& s) {
  if (s.is_zero()) return 0;
  int bound = s.context() ? 2 * s.context()->order() : 2;
  CycScalar p = s;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, CycContext const& ctx) : text_(text), ctx_(ctx) {}

  CycScalar run() {
    CycScalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(std::string const& what) { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  long exponent() {
    bool paren = accept('(');
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    mpz_class v = integer();
    if (!v.fits_slong_p()) fail("exponent out of range");
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -v.get_si() : v.get_si();
  }

  CycScalar atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CycScalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      long e = 1;
      if (accept('^')) e = exponent();
      return CycScalar::q_power(ctx_, e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      mpq_class r(num, den);
      r.canonicalize();
      return CycScalar(r) + CycScalar::zero(ctx_);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  CycScalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return atom();
  }

  CycScalar term() {
    CycScalar v = factor();
    while (accept('*')) v *= factor();
    return v;
  }

  CycScalar expr() {
    CycScalar v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  std::string_view text_;
  CycContext const& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar parse_scalar(std::string_view text, CycContext const& ctx) {
  return ScalarParser(text, ctx).run() + CycScalar::zero(ctx);
}

}  // namespace qcsa
