#include <gtest/gtest.h>

#include <random>

#include "qcsa/cyclofield.hpp"
#include "qcsa/polynomial.hpp"

using namespace qcsa;

namespace {

// Reference arithmetic: plain mpq polynomials reduced by long division.
std::vector<mpq_class> naive_mul(std::vector<mpq_class> const& a, std::vector<mpq_class> const& b,
                                 std::vector<long> const& phi) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> p(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
  int d = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    mpq_class c = p[k];
    for (int i = 0; i <= d; ++i) p[k - d + i] -= c * phi[i];
  }
  if (static_cast<int>(p.size()) > d) p.resize(d);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<mpq_class> random_coeffs(std::mt19937_64& rng, int len, int bits) {
  std::vector<mpq_class> c(len);
  for (auto& v : c) {
    mpz_class num = 0, den = 0;
    for (int b = 0; b < bits; b += 30) {
      num = (num << 30) + static_cast<unsigned long>(rng() % (1u << 30));
      den = (den << 30) + static_cast<unsigned long>(rng() % (1u << 30));
    }
    if (rng() % 4 == 0) den = 1;
    if (den == 0) den = 1;
    if (rng() % 2) num = -num;
    if (rng() % 5 == 0) num = 0;
    v = mpq_class(num, den);
    v.canonicalize();
  }
  return c;
}

CycScalar random_scalar(std::mt19937_64& rng, CycContext const& ctx, int bits) {
  return CycScalar(ctx, random_coeffs(rng, ctx.degree(), bits));
}

std::vector<mpq_class> trimmed(std::vector<mpq_class> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST(Cyclotomic, PolynomialsMatchReference) {
  // Reference values from an independent computer algebra system.
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(5), (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<long>{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), (std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(21),
            (std::vector<long>{1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, RejectsEvenOrders) {
  EXPECT_THROW(CycContext::get(4), std::invalid_argument);
  EXPECT_THROW(CycContext::get(1), std::invalid_argument);
}

TEST(Cyclotomic, FrozenProducts) {
  auto const& c5 = CycContext::get(5);
  auto const& c3 = CycContext::get(3);
  auto const& c7 = CycContext::get(7);
  EXPECT_EQ(parse_scalar("(1+2*q)*(3-q^2)", c5), CycScalar(c5, {3, 6, -1, -2}));
  EXPECT_TRUE(parse_scalar("(1+q)*(1+q^2)", c3).is_one());
  CycScalar inv = parse_scalar("q^2 - 1/2", c7).inverse();
  EXPECT_EQ(inv, CycScalar(c7, {mpq_class(-14, 127), mpq_class(16, 127), mpq_class(-12, 127),
                                mpq_class(48, 127), mpq_class(-8, 127), mpq_class(112, 127)}));
  EXPECT_EQ(q_binomial(5, 2, CycScalar::q_power(c7, 1)), CycScalar(c7, {0, 0, 1, 1, 1}));
}

class FieldAxioms : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FieldAxioms, AgreeWithNaiveArithmetic) {
  auto [n, bits] = GetParam();
  auto const& ctx = CycContext::get(n);
  std::mt19937_64 rng(1234 + n * 7 + bits);
  for (int it = 0; it < 60; ++it) {
    auto ca = random_coeffs(rng, ctx.degree(), bits), cb = random_coeffs(rng, ctx.degree(), bits);
    CycScalar a(ctx, ca), b(ctx, cb), c = random_scalar(rng, ctx, bits);
    EXPECT_EQ(trimmed((a * b).coefficients()), trimmed(naive_mul(trimmed(ca), trimmed(cb), ctx.modulus())));
    std::vector<mpq_class> sum(ctx.degree());
    for (int i = 0; i < ctx.degree(); ++i) sum[i] = ca[i] + cb[i];
    EXPECT_EQ((a + b).coefficients(), trimmed(sum));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(a.mul_qpow(3), a * CycScalar::q_power(ctx, 3));
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms,
                         ::testing::Combine(::testing::Values(3, 5, 7, 9, 15),
                                            ::testing::Values(8, 40, 120)));

TEST(Cyclotomic, DivisionByZeroIsAnError) {
  auto const& ctx = CycContext::get(5);
  try {
    (void)(CycScalar::one(ctx) / CycScalar::zero(ctx));
    FAIL();
  } catch (FieldError const& e) {
    EXPECT_STREQ(e.what(), "division by zero in cyclotomic field");
  }
}

TEST(Cyclotomic, MixingContextsIsAnError) {
  EXPECT_THROW((void)(CycScalar::q_power(CycContext::get(3), 1) + CycScalar::q_power(CycContext::get(5), 1)),
               FieldError);
}

TEST(Cyclotomic, RootOfUnityOrder) {
  for (int n : {3, 5, 7, 9}) {
    auto const& ctx = CycContext::get(n);
    CycScalar q = CycScalar::q_power(ctx, 1);
    EXPECT_TRUE(q.pow(n).is_one());
    for (int k = 1; k < n; ++k) EXPECT_FALSE(q.pow(k).is_one()) << n << " " << k;
    EXPECT_EQ(root_order(q), n);
    EXPECT_EQ(root_order(-q), 2 * n);
  }
  EXPECT_EQ(root_order(CycScalar::q_power(CycContext::get(9), 3)), 3);
  EXPECT_EQ(root_order(CycScalar(2)), 0);
}

TEST(QIntegers, DefiningIdentity) {
  for (int n : {3, 5, 7}) {
    auto const& ctx = CycContext::get(n);
    for (int tp : {1, 2, -1}) {
      CycScalar t = CycScalar::q_power(ctx, tp);
      CycScalar one = CycScalar::one(ctx);
      for (int m = -2 * n; m <= 2 * n; ++m)
        EXPECT_EQ(q_integer(m, t) * (one - t), one - t.pow(m)) << n << " " << tp << " " << m;
    }
  }
}

TEST(QIntegers, SpecialValues) {
  auto const& ctx = CycContext::get(5);
  CycScalar q = CycScalar::q_power(ctx, 1), q2 = q * q;
  EXPECT_TRUE(q_integer(0, q).is_zero());
  EXPECT_TRUE(q_integer(5, q2).is_zero());
  EXPECT_EQ(q_integer(-1, q2), -q.pow(-2));
  EXPECT_THROW(q_integer(3, CycScalar::one(ctx)), FieldError);
}

TEST(QBinomials, PascalAndRange) {
  for (int n : {3, 5, 7}) {
    auto const& ctx = CycContext::get(n);
    CycScalar q = CycScalar::q_power(ctx, 1);
    for (CycScalar t : {q, q * q}) {
      EXPECT_TRUE(q_binomial(3, -1, t).is_zero());
      EXPECT_TRUE(q_binomial(3, 4, t).is_zero());
      for (int m = 1; m <= n + 1; ++m)
        for (int i = 1; i < m; ++i) {
          EXPECT_EQ(q_binomial(m, i, t), q_binomial(m - 1, i - 1, t) + t.pow(i) * q_binomial(m - 1, i, t));
          EXPECT_EQ(q_binomial(m, i, t), t.pow(m - i) * q_binomial(m - 1, i - 1, t) + q_binomial(m - 1, i, t));
        }
      // Product formula as an oracle while the denominators stay nonzero.
      for (int m = 0; m < n; ++m)
        for (int i = 0; i <= m; ++i)
          EXPECT_EQ(q_binomial(m, i, t), q_factorial(m, t) / (q_factorial(i, t) * q_factorial(m - i, t)));
    }
    EXPECT_EQ(q_binomial(2, 1, q), CycScalar::one(ctx) + q);
    for (int i = 1; i < n; ++i) EXPECT_TRUE(q_binomial(n, i, q * q).is_zero());
  }
}

TEST(ScalarParser, Grammar) {
  auto const& ctx = CycContext::get(7);
  CycScalar q = CycScalar::q_power(ctx, 1);
  EXPECT_EQ(parse_scalar("q^2 - 1/2", ctx), q * q - CycScalar(mpq_class(1, 2)));
  EXPECT_EQ(parse_scalar(" q ^ -1 ", ctx), q.inverse());
  EXPECT_EQ(parse_scalar("-(q+3)*2/4", ctx), -(q + CycScalar(3)) * CycScalar(mpq_class(1, 2)));
  EXPECT_EQ(parse_scalar("q^7", ctx), CycScalar::one(ctx));
  EXPECT_EQ(format_scalar(parse_scalar("q^2 - 1/2", ctx)), "q^2 - 1/2");
  EXPECT_EQ(format_scalar(CycScalar::zero(ctx)), "0");
}

TEST(ScalarParser, ErrorsCarryPositions) {
  auto const& ctx = CycContext::get(3);
  auto pos = [&](std::string const& s) {
    try {
      parse_scalar(s, ctx);
    } catch (ParseError const& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(pos("q + "), 4);
  EXPECT_EQ(pos("2 $ q"), 2);
  EXPECT_EQ(pos("(q"), 2);
  EXPECT_EQ(pos("1/0"), 2);
  EXPECT_EQ(pos("x"), 0);
}

TEST(ScalarParser, FormatRoundTrip) {
  std::mt19937_64 rng(99);
  for (int n : {3, 5, 7, 9}) {
    auto const& ctx = CycContext::get(n);
    for (int it = 0; it < 100; ++it) {
      CycScalar s = random_scalar(rng, ctx, it % 3 == 0 ? 90 : 10);
      EXPECT_EQ(parse_scalar(format_scalar(s), ctx), s) << format_scalar(s);
    }
  }
}

TEST(Polynomials, GcdAndSquarefree) {
  auto const& ctx = CycContext::get(5);
  CycScalar q = CycScalar::q_power(ctx, 1);
  Polynomial a = Polynomial::linear(q) * Polynomial::linear(q * q);
  Polynomial b = Polynomial::linear(q) * Polynomial::linear(CycScalar(3));
  EXPECT_EQ(gcd(a, b), Polynomial::linear(q));
  EXPECT_TRUE(is_squarefree(a));
  EXPECT_FALSE(is_squarefree(a * Polynomial::linear(q)));
  auto [quot, rem] = (a * b + Polynomial::constant(q)).divmod(b);
  EXPECT_EQ(quot, a);
  EXPECT_EQ(rem, Polynomial::constant(q));
  EXPECT_TRUE(a.evaluate(q).is_zero());
  EXPECT_EQ(a.derivative(), Polynomial::linear(q) + Polynomial::linear(q * q));
}
