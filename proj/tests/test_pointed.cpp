#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "qcsa/pointed.hpp"

using namespace qcsa;

namespace {

Datum small_quantum_datum(CycContext const& f, bool linked) {
  Datum d;
  d.group = AbelianGroup({f.order()});
  d.g = {1, 1};
  d.chi = {{2}, {-2}};
  d.lambda.assign(2, std::vector<CycScalar>(2, CycScalar::zero(f)));
  if (linked) d.lambda[0][1] = CycScalar::one(f);
  d.mu = {0, 0};
  return d;
}

// Z/9, x with chi(g) = q^3, g_1 = g, mu = 1: x^3 = 1 - g^3.
Datum nine_datum(CycContext const& f) {
  Datum d;
  d.group = AbelianGroup({9});
  d.g = {1};
  d.chi = {{3}};
  d.lambda = {{CycScalar::zero(f)}};
  d.mu = {1};
  return d;
}

Vec random_element(PointedHopfAlgebra const& u, std::mt19937_64& rng, int terms) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    long a = static_cast<long>(rng() % 7) - 3;
    long e = static_cast<long>(rng() % u.field().order());
    t.push_back({static_cast<int>(rng() % u.dimension()), CycScalar::q_power(u.field(), e) * CycScalar(a)});
  }
  return Vec::from_terms(t);
}

}  // namespace

TEST(Datum, Validation) {
  auto const& f = CycContext::get(5);
  EXPECT_NO_THROW(validate_datum(f, small_quantum_datum(f, true)));
  Datum bad = small_quantum_datum(f, true);
  bad.chi[0] = {0};
  EXPECT_THROW(validate_datum(f, bad), DatumError);
  bad = small_quantum_datum(f, true);
  bad.chi[1] = {1};
  EXPECT_THROW(validate_datum(f, bad), DatumError);
  bad = small_quantum_datum(f, true);
  bad.g = {1, 4};  // g_1 g_2 = e forces lambda = 0
  bad.chi = {{2}, {-2}};
  EXPECT_THROW(validate_datum(f, bad), DatumError);
  bad = small_quantum_datum(f, false);
  bad.mu = {1, 0};  // g^5 = e forces mu = 0
  EXPECT_THROW(validate_datum(f, bad), DatumError);
  EXPECT_NO_THROW(validate_datum(CycContext::get(9), nine_datum(CycContext::get(9))));
}

TEST(Datum, TextRoundTrip) {
  auto const& f = CycContext::get(7);
  Datum d = small_quantum_datum(f, true);
  d.lambda[0][1] = parse_scalar("q^3 - 2/3", f);
  std::string text = format_datum(d);
  Datum e = parse_datum(text, f);
  EXPECT_EQ(format_datum(e), text);
  EXPECT_EQ(e.lambda[0][1], d.lambda[0][1]);
  EXPECT_THROW(parse_datum("group: 7\ntheta: 1\ng1: 1\nchi1: 0\n", f), DatumError);
  EXPECT_THROW(parse_datum("group: 7\nbogus: 1\n", f), DatumError);
}

TEST(Pointed, DimensionAndRelations) {
  for (int n : {3, 5}) {
    auto const& f = CycContext::get(n);
    PointedHopfAlgebra u(f, small_quantum_datum(f, true));
    EXPECT_EQ(u.dimension(), n * n * n);
    Vec g = u.group_element(1), x1 = u.x(0), x2 = u.x(1);
    CycScalar q2 = CycScalar::q_power(f, 2);
    EXPECT_EQ(u.multiply(x2, x1) - q2 * u.multiply(x1, x2), u.one() - u.power(g, 2));
    EXPECT_EQ(u.multiply(g, x1), q2 * u.multiply(x1, g));
    EXPECT_EQ(u.multiply(g, x2), q2.inverse() * u.multiply(x2, g));
    EXPECT_TRUE(u.power(x1, n).is_zero());
    EXPECT_TRUE(u.power(x2, n).is_zero());
    EXPECT_EQ(u.power(g, n), u.one());
  }
  auto const& f9 = CycContext::get(9);
  PointedHopfAlgebra t(f9, nine_datum(f9));
  EXPECT_EQ(t.dimension(), 27);
  EXPECT_EQ(t.power(t.x(0), 3), t.one() - t.group_element(3));
}

TEST(Pointed, AssociativeOnAllBasisTriples) {
  auto const& f = CycContext::get(3);
  for (bool linked : {false, true}) {
    PointedHopfAlgebra u(f, small_quantum_datum(f, linked));
    int d = u.dimension();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Vec ab = u.basis_product(a, b);
        for (int c = 0; c < d; ++c)
          ASSERT_EQ(u.multiply(ab, Vec::unit(c)), u.multiply(Vec::unit(a), u.basis_product(b, c)));
      }
  }
  auto const& f9 = CycContext::get(9);
  PointedHopfAlgebra t(f9, nine_datum(f9));
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      for (int c = 0; c < 27; ++c)
        ASSERT_EQ(t.multiply(t.basis_product(a, b), Vec::unit(c)),
                  t.multiply(Vec::unit(a), t.basis_product(b, c)));
}

TEST(Pointed, HopfAxiomsOnRandomElements) {
  for (int n : {3, 5}) {
    auto const& f = CycContext::get(n);
    PointedHopfAlgebra u(f, small_quantum_datum(f, true));
    std::mt19937_64 rng(7 + n);
    for (int it = 0; it < 100; ++it) {
      Vec a = random_element(u, rng, 3), b = random_element(u, rng, 3);
      Vec da = u.comultiply(a);
      ASSERT_EQ(u.comultiply(u.multiply(a, b)), u.tensor_multiply(da, u.comultiply(b)));
      ASSERT_EQ(u.comultiply_left(da), u.comultiply_right(da));
      ASSERT_EQ(u.counit(u.multiply(a, b)), u.counit(a) * u.counit(b));
      ASSERT_EQ(u.antipode(u.multiply(a, b)), u.multiply(u.antipode(b), u.antipode(a)));
      Vec unit = u.scalar(u.counit(a));
      ASSERT_EQ(u.multiply_tensor(da, true, false), unit);
      ASSERT_EQ(u.multiply_tensor(da, false, true), unit);
      // (eps (x) id) Delta = id = (id (x) eps) Delta
      Vec l, r;
      for (auto const& t : da) {
        l = Vec::axpy(l, t.coef * u.basis_counit(t.key / u.dimension()), Vec::unit(t.key % u.dimension()));
        r = Vec::axpy(r, t.coef * u.basis_counit(t.key % u.dimension()), Vec::unit(t.key / u.dimension()));
      }
      ASSERT_EQ(l, a);
      ASSERT_EQ(r, a);
    }
  }
}

TEST(Pointed, GeneratorCoproducts) {
  auto const& f = CycContext::get(5);
  PointedHopfAlgebra u(f, small_quantum_datum(f, true));
  Vec g = u.group_element(1);
  for (int i = 0; i < 2; ++i)
    EXPECT_EQ(u.comultiply(u.x(i)), u.tensor(u.x(i), g) + u.tensor(u.one(), u.x(i)));
  EXPECT_EQ(u.comultiply(g), u.tensor(g, g));
  EXPECT_EQ(u.antipode(u.x(0)), -u.multiply(u.x(0), u.group_element(4)));
}

TEST(Pointed, SkewDerivationsMatchRepresentationFormula) {
  auto const& f = CycContext::get(5);
  PointedHopfAlgebra u(f, small_quantum_datum(f, true));
  int d = u.dimension();
  for (int i = 0; i < 2; ++i) {
    std::vector<int> ei(2, 0);
    ei[i] = 1;
    int xi_mono = u.mono_index(ei);
    for (int k = 0; k < d; ++k) {
      // u(1) xi_i(u(2)), xi_i(g x^m) = [m = e_i]
      Vec expect;
      for (auto const& t : u.basis_coproduct(k))
        if (u.key_mono(t.key % d) == xi_mono) expect = Vec::axpy(expect, t.coef, Vec::unit(t.key / d));
      ASSERT_EQ(u.partial(i, Vec::unit(k)), expect) << u.key_name(k);
    }
  }
}

TEST(Pointed, TwistedLeibnizInGradedAlgebra) {
  auto const& f = CycContext::get(5);
  PointedHopfAlgebra u(f, small_quantum_datum(f, false));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 60; ++it) {
    Vec a = random_element(u, rng, 3), b = random_element(u, rng, 3);
    for (int i = 0; i < 2; ++i)
      ASSERT_EQ(u.partial(i, u.multiply(a, b)),
                u.multiply(u.partial(i, a), u.tau(i, b)) + u.multiply(a, u.partial(i, b)));
  }
}

TEST(Pointed, GroupProjection) {
  auto const& f = CycContext::get(5);
  PointedHopfAlgebra u(f, small_quantum_datum(f, true));
  for (int h = 0; h < 5; ++h)
    for (int l = 0; l < 2; ++l) {
      Vec hx = u.multiply(u.group_element(h), u.x(l));
      for (int g = 0; g < 5; ++g) {
        bool hit = g == u.group().mul(h, u.datum().g[l]);
        EXPECT_EQ(u.project_eg(g, hx), hit ? hx : Vec());
      }
    }
}

TEST(Pointed, LeadingTerm) {
  auto const& f = CycContext::get(5);
  PointedHopfAlgebra u(f, small_quantum_datum(f, true));
  Vec g = u.group_element(1);
  Vec v = u.multiply(u.x(0), u.x(1)) + u.multiply(g, u.power(u.x(1), 2)) + CycScalar(3) * u.x(0) +
          u.multiply(u.group_element(2), u.power(u.x(1), 2));
  auto [c, m] = u.leading_term(v);
  EXPECT_EQ(m, (std::vector<int>{1, 1}));
  EXPECT_EQ(c, u.one());
  EXPECT_EQ(PointedHopfAlgebra::compare_mono({0, 2}, {1, 1}), -1);
  EXPECT_EQ(PointedHopfAlgebra::compare_mono({0, 3}, {1, 1}), 1);
  Vec w = u.multiply(g, u.power(u.x(1), 2)) + u.multiply(u.group_element(2), u.power(u.x(1), 2));
  EXPECT_EQ(u.leading_term(w).first, g + u.group_element(2));
}

TEST(Groups, SubgroupsPerpAndClasses) {
  EXPECT_EQ(all_subgroups(AbelianGroup({9})).size(), 3u);
  EXPECT_EQ(all_subgroups(AbelianGroup({3, 3})).size(), 6u);
  EXPECT_EQ(all_subgroups(AbelianGroup({15})).size(), 4u);
  auto const& f = CycContext::get(9);
  AbelianGroup g9({9});
  auto sub = subgroup_closure(g9, {3});
  EXPECT_EQ(sub, (std::vector<int>{0, 3, 6}));
  EXPECT_EQ(character_perp(f, g9, sub).size(), 3u);
  auto const& f5 = CycContext::get(5);
  PointedHopfAlgebra u(f5, small_quantum_datum(f5, true));
  EXPECT_EQ(sim_classes(u, {0}).size(), 1u);
  EXPECT_EQ(sim_classes(u, {0, 1, 2, 3, 4}).size(), 2u);
}

TEST(Pointed, ConstructionCostAtSeven) {
  auto const& f = CycContext::get(7);
  auto t0 = std::chrono::steady_clock::now();
  PointedHopfAlgebra u(f, small_quantum_datum(f, true));
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(u.dimension(), 343);
  EXPECT_LT(s, 20.0);
  std::cout << "construction at N=7: " << s << " s\n";
}
