#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "qcsa/oqsl2.hpp"

using namespace qcsa;

namespace {

CycScalar qint(CycScalar const& t, long m) { return (CycScalar(1) - t.pow(m)) / (CycScalar(1) - t); }

struct Pair3 {
  Uqsl2 uq{3};
  Oqsl2 oq{3};
  OqAction act{oq, uq};
};

Pair3 const& pair3() {
  static Pair3 p;
  return p;
}

}  // namespace

TEST(Oqsl2, RelationsAndProducts) {
  for (int n : {3, 5}) {
    for (int power : {1, -1}) {
      Oqsl2 o(n, power);
      EXPECT_EQ(o.dimension(), n * n * n);
      EXPECT_TRUE(o.relation_failures().empty());
    }
  }
  Oqsl2 o(5);
  EXPECT_EQ(o.multiply(o.d(), o.b()), o.q() * o.multiply(o.b(), o.d()));
  EXPECT_EQ(o.multiply(o.mono(4, 0, 0), o.b()), Vec());
  EXPECT_EQ(o.multiply(o.a(), o.d()), o.one() + o.q().inverse() * o.multiply(o.b(), o.c()));
  EXPECT_EQ(o.key_name(o.key(2, 0, 1)), "b^2 d");
  EXPECT_THROW(Oqsl2(4), std::invalid_argument);
}

TEST(Oqsl2, HopfStructure) {
  Oqsl2 o(3);
  EXPECT_EQ(o.comultiply(o.d()), o.tensor(o.c(), o.b()) + o.tensor(o.d(), o.d()));
  EXPECT_EQ(o.comultiply(o.a()), o.tensor(o.a(), o.a()) + o.tensor(o.b(), o.c()));
  EXPECT_EQ(o.antipode(o.a()), o.d());
  EXPECT_EQ(o.antipode(o.d()), o.a());
  EXPECT_EQ(o.antipode(o.b()), -o.q() * o.b());
  EXPECT_EQ(o.multiply(o.antipode(o.a()), o.a()) + o.multiply(o.antipode(o.b()), o.c()), o.one());
  std::mt19937_64 rng(17);
  EXPECT_EQ(hopf_axiom_failure(o, rng, 100), "");
  Oqsl2 inv(3, -1);
  EXPECT_EQ(hopf_axiom_failure(inv, rng, 30), "");
}

TEST(Oqsl2, XyzBasis) {
  for (int n : {3, 5}) {
    Oqsl2 o(n);
    std::vector<Vec> all;
    int printed_mismatch = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec prod = o.multiply(o.multiply(o.power(o.x(), i), o.power(o.y(), j)), o.power(o.z(), k));
          ASSERT_EQ(o.xyz(i, j, k), prod);
          if (o.xyz_printed(i, j, k) != prod) ++printed_mismatch;
          all.push_back(prod);
          Vec coords = o.to_xyz(prod);
          ASSERT_EQ(coords, Vec::unit(o.key(i, j, k), CycScalar::one(o.field())));
          ASSERT_EQ(o.from_xyz(coords), prod);
          ASSERT_EQ(o.v_degree(prod.terms()[0].key), k);
        }
    EXPECT_EQ(rank_of(all, o.dimension()), o.dimension());
    // The printed exponent differs from the product.
    EXPECT_GT(printed_mismatch, 0);
  }
}

TEST(Action, GeneratorTables) {
  auto const& p = pair3();
  auto const& o = p.oq;
  auto const& act = p.act;
  EXPECT_EQ(act.right_gen(o.a(), 'E'), o.c());
  EXPECT_EQ(act.right_gen(o.b(), 'E'), o.d());
  EXPECT_EQ(act.right_gen(o.c(), 'E'), Vec());
  EXPECT_EQ(act.right_gen(o.c(), 'F'), o.a());
  EXPECT_EQ(act.right_gen(o.d(), 'F'), o.b());
  EXPECT_EQ(act.right_gen(o.a(), 'K'), o.q() * o.a());
  EXPECT_EQ(act.right_gen(o.d(), 'K'), o.q().inverse() * o.d());
  EXPECT_EQ(act.left_gen('E', o.b()), o.a());
  EXPECT_EQ(act.left_gen('E', o.d()), o.c());
  EXPECT_EQ(act.left_gen('F', o.a()), o.b());
  EXPECT_EQ(act.left_gen('F', o.c()), o.d());
  EXPECT_EQ(act.left_gen('K', o.a()), o.q() * o.a());
  EXPECT_EQ(act.left_gen('K', o.b()), o.q().inverse() * o.b());
  EXPECT_EQ(act.right(o.a(), p.uq.E()), o.c());
  EXPECT_EQ(act.right(o.c(), p.uq.F()), o.a());
}

TEST(Action, PairingValues) {
  auto const& p = pair3();
  auto const& o = p.oq;
  EXPECT_EQ(p.act.pair(o.a(), p.uq.K()), o.q());
  EXPECT_EQ(p.act.pair(o.d(), p.uq.K()), o.q().inverse());
  EXPECT_EQ(p.act.pair(o.b(), p.uq.E()), CycScalar(1));
  EXPECT_EQ(p.act.pair(o.c(), p.uq.F()), CycScalar(1));
  EXPECT_EQ(p.act.pair(o.one(), p.uq.algebra().one()), CycScalar(1));
}

TEST(Action, ModuleAndPairingAxioms) {
  auto const& p = pair3();
  auto const& o = p.oq;
  auto const& h = p.uq.algebra();
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    Vec f = random_element(o, rng, 3), g = random_element(o, rng, 2);
    Vec u = random_element(h, rng, 3), v = random_element(h, rng, 2);
    ASSERT_EQ(p.act.right(p.act.right(f, u), v), p.act.right(f, h.multiply(u, v)));
    ASSERT_EQ(p.act.left(u, p.act.left(v, f)), p.act.left(h.multiply(u, v), f));
    // f <- u = (f_(1), u) f_(2) and u -> f = f_(1) (f_(2), u)
    Vec rhs_r, rhs_l;
    int d = o.dimension();
    for (auto const& t : o.comultiply(f)) {
      rhs_r = Vec::axpy(rhs_r, t.coef * p.act.pair(Vec::unit(t.key / d), u), Vec::unit(t.key % d));
      rhs_l = Vec::axpy(rhs_l, t.coef * p.act.pair(Vec::unit(t.key % d), u), Vec::unit(t.key / d));
    }
    ASSERT_EQ(p.act.right(f, u), rhs_r);
    ASSERT_EQ(p.act.left(u, f), rhs_l);
    // (fg, u) = (f, u_(1)) (g, u_(2)) and (f, uv) = (f_(1), u) (f_(2), v)
    CycScalar lhs = p.act.pair(o.multiply(f, g), u), rhs;
    for (auto const& t : h.comultiply(u))
      rhs += t.coef * p.act.pair(f, Vec::unit(t.key / h.dimension())) *
             p.act.pair(g, Vec::unit(t.key % h.dimension()));
    ASSERT_EQ(lhs, rhs);
    CycScalar lhs2 = p.act.pair(f, h.multiply(u, v)), rhs2;
    for (auto const& t : o.comultiply(f))
      rhs2 += t.coef * p.act.pair(Vec::unit(t.key / d), u) * p.act.pair(Vec::unit(t.key % d), v);
    ASSERT_EQ(lhs2, rhs2);
    ASSERT_EQ(p.act.pair(o.antipode(f), u), p.act.pair(f, h.antipode(u)));
  }
}

TEST(Action, PairingNondegenerate) {
  auto const& p = pair3();
  EXPECT_EQ(rank_of(p.act.pairing_rows(), 27), 27);
  std::ostringstream os;
  p.act.write_pairing_csv(os);
  std::string csv = os.str();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 28);
}

TEST(Action, ClosedForms) {
  for (int n : {3, 5, 7}) {
    Uqsl2 uq(n);
    Oqsl2 o(n);
    OqAction act(o, uq);
    CycScalar q = o.q(), q2 = q * q;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec f = o.xyz(i, j, k);
          ASSERT_EQ(act.right_gen(f, 'K'), o.xyz(i, j, k, q.pow(2 * (i - j - k))));
          ASSERT_EQ(act.right_gen(f, 'E'), o.xyz(i - 1, j, k, q.pow(-2 * (j + k) + 1) * qint(q2, i)));
          ASSERT_EQ(act.right_gen(f, 'F'), o.xyz(i + 1, j, k, qint(q2, -i + 2 * j + 2 * k)) +
                                               o.xyz(i, j - 1, k, q.pow(-2 * i) * qint(q2, j)));
          Vec m = o.mono(i, j, k);
          Vec second = o.mono(i + 1, j, k - 1, q.pow(-i - j) * qint(q2, j + k));
          Vec first = o.mono(i, j - 1, k - 1, q.pow(-i - j + 1) * qint(q2, j));
          ASSERT_EQ(act.right_gen(m, 'F'), first + second);
          if (n == 3 && (j + k) % 3 != 0 && i + 1 < n)
            EXPECT_NE(act.right_gen(m, 'F'), first + q * second);
          ASSERT_EQ(act.right_gen(m, 'E'), o.mono(i - 1, j, k + 1, q.pow(-k) * qint(q2, i)));
          ASSERT_EQ(act.left_gen('E', m), o.mono(i, j + 1, k - 1, q.pow(-2 * i - k + 1) * qint(q2, i + k)) +
                                              o.mono(i - 1, j, k - 1, q.pow(-2 * i - k + 2) * qint(q2, i)));
          ASSERT_EQ(act.left_gen('F', m), o.mono(i, j - 1, k + 1, q.pow(i - j + 1) * qint(q2, j)));
          ASSERT_EQ(act.left_gen('K', m), o.mono(i, j, k, q.pow(-i + j - k)));
        }
  }
}

TEST(Action, VSubmodules) {
  auto const& p = pair3();
  auto const& o = p.oq;
  EXPECT_TRUE(o.v_submodule(0).contains(o.one()));
  for (int k = 0; k < 3; ++k) {
    Subspace vk = o.v_submodule(k);
    EXPECT_EQ(vk.dimension(), 9);
    for (int l = 0; l < 3; ++l) {
      Subspace prod(o), vl = o.v_submodule(l);
      for (auto const& s : vk.rows())
        for (auto const& t : vl.rows()) prod.insert(o.multiply(s, t));
      EXPECT_EQ(prod, o.v_submodule(k + l));
    }
    // The cyclic module generated by x^{N-1} y^{N-1} z^k.
    Subspace gen(o, {o.xyz(2, 2, k)});
    std::vector<Vec> frontier = gen.rows();
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (auto const& f : frontier)
        for (char g : {'E', 'F', 'K'}) {
          Vec r = gen.insert(p.act.right_gen(f, g));
          if (!r.is_zero()) next.push_back(r);
        }
      frontier = next;
    }
    EXPECT_EQ(gen, vk);
  }
}

TEST(Dagger, BasicFamilies) {
  auto const& p = pair3();
  auto const& o = p.oq;
  auto const& uq = p.uq;
  auto const& h = uq.algebra();
  auto full = dagger(p.act, span_closure(h, uq.generators()), uq.generators());
  EXPECT_EQ(full.space, Subspace(o, {o.one()}));
  auto e = dagger(p.act, span_closure(h, {uq.E()}), {uq.E()});
  EXPECT_EQ(e.space, span_closure(o, {o.c(), o.d()}));
  for (int r : {1, 3}) {
    auto kr = dagger(p.act, span_closure(h, {uq.K(r)}), {uq.K(r)});
    EXPECT_EQ(kr.space.dimension(), r * 9);
  }
  Subspace trivial(h, {h.one()});
  EXPECT_EQ(dagger(p.act, trivial, {h.one()}).space.dimension(), 27);
}

TEST(Dagger, SigmaCompatibility) {
  Uqsl2 src(3, -1), dst(3, 1);
  Sigma sigma(src, dst);
  Oqsl2 oq(3, 1), oqi(3, -1);
  OqAction act(oq, dst), acti(oqi, src);
  SigmaCheck check(oq, oqi);
  std::vector<Vec> image;
  for (int k = 0; k < 27; ++k) image.push_back(check(Vec::unit(k, CycScalar::one(oq.field()))));
  EXPECT_EQ(rank_of(image, 27), 27);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    Vec f = random_element(oq, rng, 3), g = random_element(oq, rng, 2);
    Vec u = random_element(src.algebra(), rng, 3);
    ASSERT_EQ(act.pair(f, sigma(u)), acti.pair(check(f), u));
    ASSERT_EQ(check(oq.multiply(f, g)), oqi.multiply(check(f), check(g)));
  }
  EXPECT_EQ(act.pair(oq.b(), sigma(src.E())), acti.pair(check(oq.b()), src.E()));
}

TEST(Dagger, YzAtZeroAlpha) {
  auto const& p = pair3();
  auto const& o = p.oq;
  CycScalar q = o.q(), beta = q + CycScalar(2);
  auto yz = yz_alpha_beta(p.act, CycScalar(0), beta);
  Vec xy = o.multiply(o.x(), o.y());
  EXPECT_EQ(yz.y, o.y() + (q - q.inverse()) * beta * xy);
  EXPECT_EQ(yz.z, o.z() + (q - q.inverse()) * beta * o.multiply(o.x(), o.z()));
  // The coefficient (1 - q^-2) beta on xy leaves <E + beta K>^dagger.
  Vec u = p.uq.u(CycScalar(0), beta);
  Vec printed = o.y() + (CycScalar(1) - q.pow(-2)) * beta * xy;
  EXPECT_NE(p.act.right(printed, u), beta * printed);
  EXPECT_EQ(p.act.right(yz.y, u), beta * yz.y);
  EXPECT_THROW(yz_alpha_beta(p.act, CycScalar(0), CycScalar(0)), std::invalid_argument);
}

TEST(Dagger, WGenerator) {
  auto const& p = pair3();
  auto const& o = p.oq;
  CycScalar q = o.q(), lambda = q + CycScalar(2);
  CycScalar mu = ((CycScalar(1) - q * q) * lambda).inverse();
  auto wg = w_generator(p.act, lambda, mu);
  EXPECT_FALSE(wg.w.is_zero());
  CycScalar e = o.counit(wg.w);
  EXPECT_FALSE(e.is_zero());
  EXPECT_EQ(o.power(wg.w, 3), o.scalar(e.pow(3)));
  EXPECT_THROW(w_generator(p.act, lambda, lambda), FamilyError);
}

// g x = q^2 x g for both the line dagger and <u>^dagger; q^-2 only for g^-1.
TEST(Dagger, LineTaftParameter) {
  for (int n : {3, 5}) {
    Uqsl2 uq(n);
    Oqsl2 o(n);
    OqAction act(o, uq);
    auto const& h = uq.algebra();
    CycScalar q = o.q(), alpha(2), beta(3);
    Vec t = o.multiply(o.c(), o.d_inv());
    Vec g = o.power(o.d(), 2) + (q - q.inverse()) * alpha * o.multiply(o.b(), o.d());
    Vec v = uq.u(CycScalar(0), alpha);
    auto d = dagger(act, span_closure(h, {v}), {v}).space;
    EXPECT_TRUE(check_taft_presentation(d, t, g, n, n, q * q).ok) << n;
    EXPECT_FALSE(check_taft_presentation(d, t, g, n, n, q.pow(-2)).ok) << n;
    Vec g_inv = o.power(g, n - 1);
    EXPECT_TRUE(check_taft_presentation(d, t, g_inv, n, n, q.pow(-2)).ok) << n;

    Vec u = uq.u(alpha, beta);
    auto yz = yz_alpha_beta(act, alpha, beta);
    auto du = dagger(act, span_closure(h, {u}), {u}).space;
    EXPECT_TRUE(check_taft_presentation(du, yz.y, yz.z, n, n, q * q).ok) << n;
    EXPECT_FALSE(check_taft_presentation(du, yz.y, yz.z, n, n, q.pow(-2)).ok) << n;
  }
}
