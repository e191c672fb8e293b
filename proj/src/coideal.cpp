#include "qcsa/coideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcsa {

namespace {

Vec shifted(Vec const& v, int offset) {
  std::vector<Term> t;
  t.reserve(v.size());
  for (auto const& x : v) t.push_back({x.key + offset, x.coef});
  return Vec::from_terms(std::move(t));
}

}  // namespace

Subspace::Subspace(HopfAlgebra const& alg)
    : alg_(&alg), ech_(alg.dimension(), alg.key_order()) {}

Subspace::Subspace(HopfAlgebra const& alg, std::vector<Vec> const& spanning) : Subspace(alg) {
  for (auto const& v : spanning) ech_.insert(v);
}

std::vector<Vec> const& Subspace::rows() const {
  if (!rows_valid_) {
    rows_ = ech_.rows();
    rows_valid_ = true;
  }
  return rows_;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (auto const& r : rows()) out.push_back(ech_.pivot_of(r));
  return out;
}

Vec Subspace::insert(Vec const& v) {
  Vec added = ech_.insert(v);
  if (!added.is_zero()) rows_valid_ = false;
  return added;
}

std::string Subspace::str() const {
  std::ostringstream os;
  for (auto const& r : rows()) os << alg_->format(r) << "\n";
  return os.str();
}

bool operator==(Subspace const& a, Subspace const& b) {
  return a.alg_ == b.alg_ && a.rows() == b.rows();
}

Subspace span_closure(HopfAlgebra const& alg, std::vector<Vec> const& gens) {
  Subspace s(alg);
  std::deque<Vec> todo{s.insert(alg.one())};
  while (!todo.empty()) {
    Vec v = std::move(todo.front());
    todo.pop_front();
    for (auto const& g : gens) {
      Vec added = s.insert(alg.multiply(v, g));
      if (!added.is_zero()) todo.push_back(std::move(added));
    }
  }
  return s;
}

CoidealSubalgebra make_subalgebra(HopfAlgebra const& alg, std::vector<Vec> gens) {
  Subspace s = span_closure(alg, gens);
  bool flag = is_right_coideal(s);
  std::vector<int> group;
  if (auto const* u = dynamic_cast<PointedHopfAlgebra const*>(&alg))
    group = intersect_with_group(*u, s);
  return {std::move(s), std::move(gens), std::move(group), flag};
}

bool is_subalgebra(Subspace const& a) {
  auto const& alg = a.algebra();
  if (!a.contains(alg.one())) return false;
  for (auto const& x : a.rows())
    for (auto const& y : a.rows())
      if (!a.contains(alg.multiply(x, y))) return false;
  return true;
}

bool is_right_coideal(Subspace const& a) {
  auto const& alg = a.algebra();
  for (auto const& row : a.rows())
    for (auto const& [right, left] : alg.split_by_right(alg.comultiply(row)))
      if (!a.contains(left)) return false;
  return true;
}

bool partial_stability(PointedHopfAlgebra const& u, Subspace const& a) {
  for (int i = 0; i < u.theta(); ++i)
    for (auto const& row : a.rows())
      if (!a.contains(u.partial(i, row))) return false;
  return true;
}

std::vector<int> intersect_with_group(PointedHopfAlgebra const& u, Subspace const& a) {
  std::vector<int> g;
  for (int e = 0; e < u.group().size(); ++e)
    if (a.contains(u.group_element(e))) g.push_back(e);
  if (subgroup_closure(u.group(), g) != g)
    throw std::logic_error("grouplikes of a subalgebra do not form a subgroup");
  return g;
}

bool group_part_spans(PointedHopfAlgebra const& u, Subspace const& a) {
  std::vector<Vec> group_basis;
  for (int e = 0; e < u.group().size(); ++e) group_basis.push_back(u.group_element(e));
  auto common = intersect(a.rows(), group_basis, u.dimension());
  return static_cast<int>(common.size()) ==
         static_cast<int>(intersect_with_group(u, a).size());
}

Vec xi_element(PointedHopfAlgebra const& u, std::vector<int> const& cls,
               std::vector<CycScalar> const& c, CycScalar const& a) {
  if (c.size() != cls.size()) throw std::invalid_argument("xi: coefficient count mismatch");
  auto const& G = u.group();
  auto const& g = u.datum().g;
  int g1 = g[cls.front()];
  Vec out = a * u.group_element(g1);
  for (std::size_t s = 0; s < cls.size(); ++s) {
    if (c[s].is_zero()) continue;
    int h = G.mul(g1, G.inv(g[cls[s]]));
    out += c[s] * u.left_group(h, u.x(cls[s]));
  }
  return out;
}

std::vector<Vec> datum_elements(PointedHopfAlgebra const& u, ReducedDatum const& d) {
  std::vector<Vec> out;
  std::size_t n = d.cls.size();
  for (auto const& row : d.c) {
    std::vector<CycScalar> c(row.begin(), row.begin() + static_cast<long>(n));
    Vec v = xi_element(u, d.cls, c, row[n]);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::string reduced_datum_violation(PointedHopfAlgebra const& u, std::vector<int> const& subgroup,
                                    ReducedDatum const& d) {
  std::size_t n = d.cls.size();
  if (d.c.size() != n) return "matrix must have one row per class member";
  for (auto const& row : d.c)
    if (row.size() != n + 1) return "matrix must have n + 1 columns";
  Matrix m = d.c;
  rref(m);
  if (m != d.c) return "RD1: matrix is not in reduced row echelon form";
  bool trivial_on_g = true;
  for (int g : subgroup)
    if (u.chi_exp(d.cls.front(), g) != 0) trivial_on_g = false;
  if (!trivial_on_g)
    for (auto const& row : d.c)
      if (!row[n].is_zero()) return "RD2: last column must vanish";
  Matrix left = d.c;
  for (auto& row : left) row.pop_back();
  Matrix full = d.c;
  if (rref(left) != rref(full)) return "RD3: last column raises the rank";
  return "";
}

Extraction extract_generators(PointedHopfAlgebra const& u, Subspace const& a) {
  if (!is_right_coideal(a)) throw NotCoidealError("subspace is not a right coideal");
  if (!is_subalgebra(a)) throw NotCoidealError("subspace is not a subalgebra");
  auto const& G = u.group();
  auto const& gs = u.datum().g;
  CycContext const& f = u.field();
  Extraction out;
  out.subgroup = intersect_with_group(u, a);
  auto const& sub = out.subgroup;
  int theta = u.theta();

  std::vector<Vec> xhat(theta);
  auto const& rows = a.rows();
  auto pivots = a.pivots();
  auto const& prio = *u.key_order();
  for (int k = 0; k < theta; ++k) {
    int best = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (u.mono_exps(u.key_mono(pivots[r]))[k] == 0) continue;
      if (best < 0 || rows[r].size() < rows[best].size() ||
          (rows[r].size() == rows[best].size() && prio[pivots[r]] < prio[pivots[best]]))
        best = static_cast<int>(r);
    }
    if (best < 0) continue;
    Vec y = rows[best];
    auto m = u.mono_exps(u.key_mono(pivots[best]));
    m[k] -= 1;
    for (int i = 0; i < theta; ++i)
      for (int t = 0; t < m[i]; ++t) y = u.partial(i, y);
    auto [lead, exps] = u.leading_term(y);
    std::vector<int> ek(theta, 0);
    ek[k] = 1;
    if (exps != ek) throw std::logic_error("extraction: derivative lost the leading monomial");
    int g = u.key_group(lead.terms().front().key);
    if (!std::binary_search(sub.begin(), sub.end(), g))
      throw std::logic_error("extraction: leading coefficient outside A cap Gamma");
    Vec p = u.project_eg(G.mul(g, gs[k]), y);
    p = lead.terms().front().coef.inverse() * u.left_group(G.inv(g), p);
    Vec avg;
    for (int h : sub) {
      Vec conj = u.left_group(h, u.right_group(p, G.inv(h)));
      avg += u.chi_value(k, h).inverse() * conj;
    }
    avg = CycScalar(static_cast<long>(sub.size())).inverse() * avg;
    xhat[k] = avg;
  }

  for (auto const& cls : sim_classes(u, sub)) {
    std::size_t n = cls.size();
    ReducedDatum d{cls, Matrix(n, std::vector<CycScalar>(n + 1, CycScalar::zero(f)))};
    int g1 = gs[cls.front()];
    for (std::size_t r = 0; r < n; ++r) {
      Vec const& v = xhat[cls[r]];
      if (v.is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> e(theta, 0);
        e[cls[s]] = 1;
        int h = G.mul(g1, G.inv(gs[cls[s]]));
        d.c[r][s] = v.at(u.key(h, u.mono_index(e)));
      }
      d.c[r][n] = v.at(u.key(g1, 0));
      std::vector<CycScalar> c(d.c[r].begin(), d.c[r].begin() + static_cast<long>(n));
      if (xi_element(u, cls, c, d.c[r][n]) != v)
        throw std::logic_error("extraction: averaged element is not of xi form");
    }
    int full = rref(d.c);
    Matrix left = d.c;
    for (auto& row : left) row.pop_back();
    int partial = rref(left);
    // A dangling pivot in the last column stands for g_{i1}, already in k G.
    if (full > partial)
      std::fill(d.c[partial].begin(), d.c[partial].end(), CycScalar::zero(f));
    out.data.push_back(std::move(d));
  }
  return out;
}

std::vector<Vec> extraction_generators(PointedHopfAlgebra const& u, Extraction const& e) {
  std::vector<Vec> gens;
  for (int g : e.subgroup)
    if (g != 0) gens.push_back(u.group_element(g));
  for (auto const& d : e.data)
    for (auto& v : datum_elements(u, d)) gens.push_back(std::move(v));
  return gens;
}

Extraction random_reduced_data(PointedHopfAlgebra const& u, std::mt19937_64& rng) {
  CycContext const& f = u.field();
  std::vector<CycScalar> pool = {CycScalar(1), CycScalar(-1), CycScalar(2),
                                 CycScalar::q_power(f, 1), CycScalar::q_power(f, -1) + CycScalar(1),
                                 CycScalar(mpq_class(1, 2))};
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  auto subgroups = all_subgroups(u.group());
  Extraction out;
  out.subgroup = subgroups[pick(subgroups.size())];
  for (auto const& cls : sim_classes(u, out.subgroup)) {
    std::size_t n = cls.size();
    bool last_free = true;
    for (int g : out.subgroup)
      if (u.chi_exp(cls.front(), g) != 0) last_free = false;
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::size_t rank = pick(n + 1);
    std::vector<std::size_t> piv(cols.begin(), cols.begin() + static_cast<long>(rank));
    std::sort(piv.begin(), piv.end());
    ReducedDatum d{cls, Matrix(n, std::vector<CycScalar>(n + 1, CycScalar::zero(f)))};
    for (std::size_t r = 0; r < rank; ++r) {
      d.c[r][piv[r]] = CycScalar(1);
      for (std::size_t s = piv[r] + 1; s < n; ++s) {
        if (std::find(piv.begin(), piv.end(), s) != piv.end()) continue;
        if (pick(3) == 0) d.c[r][s] = pool[pick(pool.size())];
      }
      if (last_free && pick(2) == 0) d.c[r][n] = pool[pick(pool.size())];
    }
    out.data.push_back(std::move(d));
  }
  return out;
}

Vec right_integral(Subspace const& a, std::vector<Vec> const& generators) {
  auto const& alg = a.algebra();
  int dim = alg.dimension();
  std::vector<Vec> cols;
  for (auto const& row : a.rows()) {
    Vec col;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Vec e = alg.multiply(row, generators[j]) - alg.counit(generators[j]) * row;
      col += shifted(e, static_cast<int>(j) * dim);
    }
    cols.push_back(std::move(col));
  }
  auto ker = kernel(cols, static_cast<int>(generators.size()) * dim);
  if (ker.size() != 1)
    throw std::runtime_error("right integral space has dimension " + std::to_string(ker.size()));
  Vec lambda;
  for (auto const& t : ker.front()) lambda += t.coef * a.rows()[t.key];
  auto const& prio = *alg.key_order();
  Term const* first = nullptr;
  for (auto const& t : lambda)
    if (!first || prio[t.key] < prio[first->key]) first = &t;
  return first->coef.inverse() * lambda;
}

Polynomial minimal_polynomial(HopfAlgebra const& alg, Vec const& u) {
  int dim = alg.dimension();
  int space = 2 * dim + 2;
  auto prio = std::make_shared<std::vector<int>>(space);
  for (int i = 0; i < dim; ++i) (*prio)[i] = dim + 2 + i;
  for (int j = 0; j < dim + 2; ++j) (*prio)[dim + j] = j;
  Echelon e(space, prio);
  Vec p = alg.one();
  for (int k = 0; k <= dim + 1; ++k) {
    Vec added = e.insert(p + Vec::unit(dim + k));
    if (e.pivot_of(added) >= dim) {
      std::vector<CycScalar> c(k + 1, CycScalar::zero(alg.field()));
      for (auto const& t : added) c[t.key - dim] = t.coef;
      return Polynomial(std::move(c)).monic();
    }
    p = alg.multiply(p, u);
  }
  throw std::logic_error("minimal polynomial: no dependency found");
}

Vec adjoint(HopfAlgebra const& alg, Vec const& x, Vec const& h) {
  int dim = alg.dimension();
  Vec out;
  for (auto const& t : alg.comultiply(h)) {
    Vec left = alg.antipode(Vec::unit(t.key / dim));
    out = Vec::axpy(out, t.coef,
                    alg.multiply(alg.multiply(left, x), Vec::unit(t.key % dim)));
  }
  return out;
}

bool is_normal(Subspace const& a, std::vector<Vec> const& algebra_generators) {
  for (auto const& row : a.rows())
    for (auto const& h : algebra_generators)
      if (!a.contains(adjoint(a.algebra(), row, h))) return false;
  return true;
}

TaftCertificate check_taft_presentation(Subspace const& a, Vec const& x, Vec const& g, int m, int n,
                                        CycScalar const& xi) {
  if (root_order(xi) != n)
    throw std::invalid_argument("Taft presentation: xi must have order n");
  auto const& alg = a.algebra();
  auto fail = [](std::string s) { return TaftCertificate{false, std::move(s)}; };
  if (!a.contains(x)) return fail("x not in A");
  if (!a.contains(g)) return fail("g not in A");
  if (!alg.power(x, m).is_zero()) return fail("x^m != 0");
  if (alg.power(g, n) != alg.one()) return fail("g^n != 1");
  if (alg.multiply(g, x) != xi * alg.multiply(x, g)) return fail("g x != xi x g");
  if (a.dimension() != m * n) return fail("dim A != m n");
  Echelon e(alg.dimension());
  Vec xi_pow = alg.one();
  for (int i = 0; i < m; ++i) {
    Vec mono = xi_pow;
    for (int j = 0; j < n; ++j) {
      if (e.insert(mono).is_zero()) return fail("monomials x^i g^j are dependent");
      mono = alg.multiply(mono, g);
    }
    xi_pow = alg.multiply(xi_pow, x);
  }
  return {true, ""};
}

Subspace intersect(Subspace const& a, Subspace const& b) {
  return Subspace(a.algebra(), intersect(a.rows(), b.rows(), a.algebra().dimension()));
}

Subspace join(Subspace const& a, Subspace const& b) {
  std::vector<Vec> gens = a.rows();
  gens.insert(gens.end(), b.rows().begin(), b.rows().end());
  return span_closure(a.algebra(), gens);
}

}  // namespace qcsa
