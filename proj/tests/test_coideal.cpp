#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qcsa/coideal.hpp"

using namespace qcsa;

namespace {

Datum sl2_datum(CycContext const& f, bool linked) {
  Datum d;
  d.group = AbelianGroup({f.order()});
  d.g = {1, 1};
  d.chi = {{2}, {-2}};
  d.lambda.assign(2, std::vector<CycScalar>(2, CycScalar::zero(f)));
  if (linked) d.lambda[0][1] = CycScalar::one(f);
  d.mu = {0, 0};
  return d;
}

Datum taft_datum(CycContext const& f) {
  Datum d;
  d.group = AbelianGroup({f.order()});
  d.g = {1};
  d.chi = {{1}};
  d.lambda = {{CycScalar::zero(f)}};
  d.mu = {0};
  return d;
}

Datum nine_datum(CycContext const& f) {
  Datum d = taft_datum(f);
  d.chi = {{3}};
  d.mu = {1};
  return d;
}

struct Sl2 {
  explicit Sl2(int n, bool linked = true)
      : f(CycContext::get(n)), u(f, sl2_datum(f, linked)) {}
  CycContext const& f;
  PointedHopfAlgebra u;
  Vec K() const { return u.group_element(1); }
  Vec E() const { return u.x(0); }
  Vec Ft() const { return u.x(1); }
  Vec F() const { return u.right_group(u.x(1), u.group().inv(1)); }
  Vec Kpow(int r) const { return u.group_element(u.group().pow(1, r)); }
};

}  // namespace

TEST(Closure, Dimensions) {
  Sl2 s(3);
  EXPECT_EQ(span_closure(s.u, {s.K()}).dimension(), 3);
  EXPECT_EQ(span_closure(s.u, {s.E()}).dimension(), 3);
  EXPECT_EQ(span_closure(s.u, {s.K(), s.E(), s.Ft()}).dimension(), 27);
  EXPECT_EQ(span_closure(s.u, {}).dimension(), 1);
  Subspace full = span_closure(s.u, {s.K(), s.E(), s.Ft()});
  EXPECT_TRUE(is_subalgebra(full));
}

TEST(Subspace, Canonical) {
  Sl2 s(3);
  Subspace a(s.u, {s.E() + s.K(), s.E()});
  Subspace b(s.u, {s.K(), s.E() - s.K()});
  EXPECT_EQ(a, b);
  Subspace c(s.u, a.rows());
  EXPECT_EQ(a.rows(), c.rows());
  auto piv = a.pivots();
  auto const& prio = *s.u.key_order();
  for (std::size_t i = 1; i < piv.size(); ++i) EXPECT_LT(prio[piv[i - 1]], prio[piv[i]]);
}

TEST(Coideal, Membership) {
  Sl2 s(3);
  EXPECT_TRUE(is_right_coideal(span_closure(s.u, {s.E()})));
  EXPECT_FALSE(is_right_coideal(span_closure(s.u, {s.F()})));
  EXPECT_TRUE(is_right_coideal(span_closure(s.u, {s.K()})));
  EXPECT_TRUE(is_right_coideal(span_closure(s.u, {s.Kpow(3)})));
  auto gen = make_subalgebra(s.u, {s.E() + s.Ft() + s.K()});
  EXPECT_TRUE(gen.coideal_flag);
  EXPECT_TRUE(partial_stability(s.u, gen.space));
  EXPECT_TRUE(group_part_spans(s.u, gen.space));
}

TEST(Coideal, PartialStabilityOfNonCoideal) {
  Sl2 s(3);
  // d_2 F = d_2(x2 K^-1) picks up a K^-1 that is not in <F>.
  EXPECT_FALSE(partial_stability(s.u, span_closure(s.u, {s.F()})));
}

TEST(Coideal, GroupPart) {
  Sl2 s(9);
  auto a = make_subalgebra(s.u, {s.Kpow(3), s.E()});
  EXPECT_EQ(a.group_part, subgroup_closure(s.u.group(), {3}));
  EXPECT_EQ(a.space.dimension(), 27);
  EXPECT_TRUE(a.coideal_flag);
}

TEST(Xi, Elements) {
  Sl2 s(5);
  auto q = CycScalar::q_power(s.f, 1);
  EXPECT_EQ(xi_element(s.u, {0}, {CycScalar(1)}, CycScalar(0)), s.E());
  Vec xi = xi_element(s.u, {0, 1}, {CycScalar(1), q}, CycScalar(3));
  EXPECT_EQ(xi, s.E() + q * s.Ft() + CycScalar(3) * s.K());
  // Left factors of Delta(xi) lie in k xi + k Gamma.
  std::vector<Vec> allowed{xi};
  for (int g = 0; g < 5; ++g) allowed.push_back(s.u.group_element(g));
  Subspace span(s.u, allowed);
  for (auto const& [right, left] : s.u.split_by_right(s.u.comultiply(xi)))
    EXPECT_TRUE(span.contains(left));
}

TEST(Extract, LinearGenerator) {
  Sl2 s(3);
  auto beta = CycScalar::q_power(s.f, 1) + CycScalar(2);
  Subspace a = span_closure(s.u, {s.E() + beta * s.K()});
  auto e = extract_generators(s.u, a);
  EXPECT_EQ(e.subgroup, std::vector<int>{0});
  ASSERT_EQ(e.data.size(), 1u);
  EXPECT_EQ(e.data[0].cls, (std::vector<int>{0, 1}));
  EXPECT_EQ(e.data[0].c[0], (std::vector<CycScalar>{CycScalar(1), CycScalar(0), beta}));
  EXPECT_TRUE(e.data[0].c[1][0].is_zero() && e.data[0].c[1][2].is_zero());
  EXPECT_EQ(span_closure(s.u, extraction_generators(s.u, e)), a);
}

TEST(Extract, KrE) {
  Sl2 s(3);
  Subspace a = span_closure(s.u, {s.K(), s.E()});
  auto e = extract_generators(s.u, a);
  EXPECT_EQ(e.subgroup, (std::vector<int>{0, 1, 2}));
  ASSERT_EQ(e.data.size(), 2u);
  EXPECT_EQ(e.data[0].cls, std::vector<int>{0});
  EXPECT_EQ(e.data[0].c[0], (std::vector<CycScalar>{CycScalar(1), CycScalar(0)}));
  EXPECT_EQ(e.data[1].cls, std::vector<int>{1});
  EXPECT_TRUE(e.data[1].c[0][0].is_zero() && e.data[1].c[0][1].is_zero());
  EXPECT_EQ(span_closure(s.u, extraction_generators(s.u, e)), a);
}

TEST(Extract, Trivial) {
  Sl2 s(3);
  Subspace k = span_closure(s.u, {});
  auto e = extract_generators(s.u, k);
  EXPECT_EQ(e.subgroup, std::vector<int>{0});
  for (auto const& d : e.data)
    for (auto const& row : d.c)
      for (auto const& c : row) EXPECT_TRUE(c.is_zero());
}

TEST(Extract, RejectsNonCoideal) {
  Sl2 s(3);
  EXPECT_THROW(extract_generators(s.u, span_closure(s.u, {s.F()})), NotCoidealError);
}

TEST(Extract, ReducedDatumChecks) {
  Sl2 s(3);
  ReducedDatum d{{0, 1}, {{CycScalar(1), CycScalar(0), CycScalar(1)}, {0, 0, 0}}};
  EXPECT_EQ(reduced_datum_violation(s.u, {0}, d), "");
  EXPECT_NE(reduced_datum_violation(s.u, {0, 1, 2}, d), "");  // RD2
  ReducedDatum d3{{0, 1}, {{CycScalar(1), CycScalar(0), CycScalar(0)}, {0, 0, 1}}};
  EXPECT_EQ(reduced_datum_violation(s.u, {0}, d3).substr(0, 3), "RD3");
  ReducedDatum d1{{0, 1}, {{CycScalar(2), CycScalar(0), CycScalar(0)}, {0, 0, 0}}};
  EXPECT_EQ(reduced_datum_violation(s.u, {0}, d1).substr(0, 3), "RD1");
}

TEST(Extract, RandomRoundtrip) {
  auto const& f3 = CycContext::get(3);
  auto const& f5 = CycContext::get(5);
  auto const& f9 = CycContext::get(9);
  PointedHopfAlgebra sl2(f3, sl2_datum(f3, true));
  PointedHopfAlgebra gr(f3, sl2_datum(f3, false));
  PointedHopfAlgebra taft(f5, taft_datum(f5));
  PointedHopfAlgebra nine(f9, nine_datum(f9));
  int runs = 0;
  std::set<int> dims;
  for (auto const* u : {&sl2, &gr, &taft, &nine}) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
      auto data = random_reduced_data(*u, rng);
      for (auto const& d : data.data) ASSERT_EQ(reduced_datum_violation(*u, data.subgroup, d), "");
      Subspace a = span_closure(*u, extraction_generators(*u, data));
      ASSERT_TRUE(is_right_coideal(a));
      ASSERT_TRUE(partial_stability(*u, a));
      ASSERT_TRUE(group_part_spans(*u, a));
      auto e = extract_generators(*u, a);
      for (auto const& d : e.data) EXPECT_EQ(reduced_datum_violation(*u, e.subgroup, d), "");
      EXPECT_EQ(span_closure(*u, extraction_generators(*u, e)), a) << a.str();
      dims.insert(a.dimension());
      ++runs;
    }
  }
  EXPECT_GE(runs, 100);
  EXPECT_GE(dims.size(), 6u);
}

TEST(Integral, GroupAndNilpotent) {
  Sl2 s(5);
  Subspace g = span_closure(s.u, {s.K()});
  Vec sum;
  for (int k = 0; k < 5; ++k) sum += s.u.group_element(k);
  EXPECT_EQ(right_integral(g, {s.K()}), sum);
  Subspace e = span_closure(s.u, {s.E()});
  Vec lambda = right_integral(e, {s.E()});
  EXPECT_EQ(lambda, s.u.power(s.E(), 4));
  for (auto const& row : e.rows())
    EXPECT_EQ(s.u.multiply(lambda, row), s.u.counit(row) * lambda);
}

TEST(MinimalPolynomial, Basics) {
  Sl2 s(5);
  std::vector<CycScalar> xn(6, CycScalar(0));
  xn[5] = CycScalar(1);
  EXPECT_EQ(minimal_polynomial(s.u, s.E()), Polynomial(xn));
  xn[0] = CycScalar(-1);
  EXPECT_EQ(minimal_polynomial(s.u, s.K()), Polynomial(xn));
  EXPECT_EQ(minimal_polynomial(s.u, s.u.one()).degree(), 1);
}

TEST(Normal, TrivialAndE) {
  Sl2 s(3);
  std::vector<Vec> gens{s.K(), s.E(), s.Ft()};
  EXPECT_TRUE(is_normal(span_closure(s.u, gens), gens));
  EXPECT_TRUE(is_normal(span_closure(s.u, {}), gens));
  EXPECT_FALSE(is_normal(span_closure(s.u, {s.E()}), gens));
}

TEST(Taft, Presentations) {
  Sl2 s(5);
  auto q2 = CycScalar::q_power(s.f, 2);
  Subspace ke = span_closure(s.u, {s.K(), s.E()});
  EXPECT_TRUE(check_taft_presentation(ke, s.E(), s.K(), 5, 5, q2).ok);
  Subspace k = span_closure(s.u, {});
  auto cert = check_taft_presentation(k, Vec(), s.u.one(), 5, 5, q2);
  EXPECT_FALSE(cert.ok);
  EXPECT_EQ(cert.failure, "dim A != m n");
  EXPECT_THROW(check_taft_presentation(ke, s.E(), s.K(), 5, 3, q2), std::invalid_argument);
}

TEST(Lattice, Ops) {
  Sl2 s(3);
  Subspace e = span_closure(s.u, {s.E()});
  EXPECT_EQ(intersect(e, e), e);
  Subspace k = span_closure(s.u, {s.K()});
  Subspace ke = join(k, e);
  EXPECT_EQ(ke, span_closure(s.u, {s.K(), s.E()}));
  EXPECT_EQ(ke.dimension(), 9);
  EXPECT_EQ(join(span_closure(s.u, {s.Kpow(3)}), e).dimension(), 3);
  EXPECT_EQ(intersect(ke, span_closure(s.u, {s.Ft()})).dimension(), 1);
}
