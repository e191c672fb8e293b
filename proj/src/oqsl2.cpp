#include "qcsa/oqsl2.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcsa {

namespace {

// First letter of b^i c^j d^k and the remaining monomial; letter * rest has
// coefficient 1. Letters: 0 = b, 1 = c, 2 = d.
std::pair<int, std::array<int, 3>> split_letter(std::array<int, 3> e) {
  if (e[0] > 0) return {0, {e[0] - 1, e[1], e[2]}};
  if (e[1] > 0) return {1, {0, e[1] - 1, e[2]}};
  return {2, {0, 0, e[2] - 1}};
}

// Row and column of a letter in the matrix (a b; c d).
constexpr int kRow[3] = {0, 1, 1};
constexpr int kCol[3] = {1, 0, 1};

Vec shifted(Vec const& v, int offset) {
  std::vector<Term> t;
  t.reserve(v.size());
  for (auto const& x : v) t.push_back({x.key + offset, x.coef});
  return Vec::from_terms(std::move(t));
}

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

Oqsl2::Oqsl2(int n, int root)
    : field_(&CycContext::get(n)),
      n_(n),
      power_(root),
      q_(CycScalar::q_power(*field_, root)),
      order_(identity_priority(n * n * n)),
      half_((n + 1) / 2) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("N must be odd and > 1");
  if (std::gcd(root, n) != 1) throw std::invalid_argument("root power must be prime to N");
  a_ = mono(0, 0, -1) + qp(-1) * mono(1, 1, -1);
  a_inv_ = power(a_, n - 1);
  int dim = dimension();
  antipode_.resize(dim);
  antipode_[0] = one();
  Vec letter_s[3] = {-qp(1) * b(), -qp(-1) * c(), a_};
  for (int k = 1; k < dim; ++k) {
    auto [l, rest] = split_letter(exps(k));
    antipode_[k] = multiply(antipode_[key(rest[0], rest[1], rest[2])], letter_s[l]);
  }
  coproduct_.resize(dim);
  have_coproduct_.assign(dim, 0);
}

int Oqsl2::key(int i, int j, int k) const { return (i * n_ + j) * n_ + mod(k, n_); }

std::array<int, 3> Oqsl2::exps(int key) const {
  return {key / (n_ * n_), (key / n_) % n_, key % n_};
}

Vec Oqsl2::mono(int i, int j, int k, CycScalar const& c) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || c.is_zero()) return Vec();
  return Vec::unit(key(i, j, k), c.context() ? c : c * CycScalar::one(*field_));
}

std::string Oqsl2::key_name(int key) const {
  auto e = exps(key);
  std::string out;
  char const* names[3] = {"b", "c", "d"};
  for (int r = 0; r < 3; ++r) {
    if (e[r] == 0) continue;
    if (!out.empty()) out += " ";
    out += names[r];
    if (e[r] > 1) out += "^" + std::to_string(e[r]);
  }
  return out.empty() ? "1" : out;
}

Vec Oqsl2::basis_product(int a, int b) const {
  auto x = exps(a), y = exps(b);
  if (x[0] + y[0] >= n_ || x[1] + y[1] >= n_) return Vec();
  return mono(x[0] + y[0], x[1] + y[1], x[2] + y[2], qp(static_cast<long>(x[2]) * (y[0] + y[1])));
}

Vec Oqsl2::basis_coproduct(int k) const {
  if (have_coproduct_[k]) return coproduct_[k];
  Vec out;
  if (k == 0) {
    out = tensor(one(), one());
  } else {
    auto [l, rest] = split_letter(exps(k));
    // Delta(t_ij) = sum_m t_im (x) t_mj
    Vec entries[2][2] = {{a_, b()}, {c(), d()}};
    Vec dl = tensor(entries[kRow[l]][0], entries[0][kCol[l]]) +
             tensor(entries[kRow[l]][1], entries[1][kCol[l]]);
    out = tensor_multiply(dl, basis_coproduct(key(rest[0], rest[1], rest[2])));
  }
  coproduct_[k] = out;
  have_coproduct_[k] = 1;
  return out;
}

CycScalar Oqsl2::basis_counit(int a) const {
  auto e = exps(a);
  return CycScalar::one(*field_) * CycScalar(e[0] == 0 && e[1] == 0 ? 1 : 0);
}

Vec Oqsl2::basis_antipode(int a) const { return antipode_[a]; }

Vec Oqsl2::xyz(int i, int j, int k, CycScalar const& c) const {
  long e = -static_cast<long>(i) * (i - 1) / 2 + static_cast<long>(j) * (j - 1) / 2 -
           static_cast<long>(i) * j;
  return mono(i, j, -i + j + 2 * k, c * qp(e));
}

Vec Oqsl2::xyz_printed(int i, int j, int k) const {
  long e = static_cast<long>(i) * (i - 1) / 2 - static_cast<long>(j) * (j - 1) / 2 -
           static_cast<long>(i) * j;
  return mono(i, j, -i + j + 2 * k, qp(e));
}

int Oqsl2::v_degree(int key) const {
  auto e = exps(key);
  return mod(static_cast<long>(e[2] + e[0] - e[1]) * half_, n_);
}

Vec Oqsl2::to_xyz(Vec const& f) const {
  std::vector<Term> out;
  for (auto const& t : f) {
    auto e = exps(t.key);
    int k = v_degree(t.key);
    Vec unit = xyz(e[0], e[1], k);
    out.push_back({key(e[0], e[1], k), t.coef / unit.terms()[0].coef});
  }
  return Vec::from_terms(std::move(out));
}

Vec Oqsl2::from_xyz(Vec const& g) const {
  Vec out;
  for (auto const& t : g) {
    auto e = exps(t.key);
    out += xyz(e[0], e[1], e[2], t.coef);
  }
  return out;
}

Subspace Oqsl2::v_submodule(int k) const {
  std::vector<Vec> span;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) span.push_back(mono(i, j, -i + j + 2 * k));
  return Subspace(*this, span);
}

std::vector<std::string> Oqsl2::relation_failures() const {
  std::vector<std::string> out;
  auto check = [&](char const* name, Vec const& lhs, Vec const& rhs) {
    if (lhs != rhs) out.push_back(name);
  };
  Vec A = a(), B = b(), C = c(), D = d();
  auto m = [&](Vec const& s, Vec const& t) { return multiply(s, t); };
  CycScalar q = qp(1), qi = qp(-1);
  check("ba = q ab", m(B, A), q * m(A, B));
  check("ca = q ac", m(C, A), q * m(A, C));
  check("bc = cb", m(B, C), m(C, B));
  check("db = q bd", m(D, B), q * m(B, D));
  check("dc = q cd", m(D, C), q * m(C, D));
  check("ad - q^-1 bc = 1", m(A, D) - qi * m(B, C), one());
  check("da - q bc = 1", m(D, A) - q * m(B, C), one());
  check("a^N = 1", power(A, n_), one());
  check("d^N = 1", power(D, n_), one());
  check("b^N = 0", power(B, n_), Vec());
  check("c^N = 0", power(C, n_), Vec());
  check("a a^-1 = 1", m(A, a_inv_), one());
  return out;
}

OqAction::OqAction(Oqsl2 const& o, Uqsl2 const& u) : o_(&o), u_(&u) {
  if (o.n() != u.n() || o.root_power() != u.power())
    throw std::invalid_argument("O and u must share N and the root");
  int dim = o.dimension();
  re_.resize(dim);
  rf_.resize(dim);
  le_.resize(dim);
  lf_.resize(dim);
  rk_.assign(dim, 0);
  lk_.assign(dim, 0);
  Vec t[2][2] = {{o.a(), o.b()}, {o.c(), o.d()}};
  auto re_l = rho('E'), rf_l = rho('F');
  Vec letter[3], lre[3], lrf[3], lle[3], llf[3];
  int lrk[3], llk[3];
  for (int l = 0; l < 3; ++l) {
    int al = kRow[l], be = kCol[l];
    letter[l] = t[al][be];
    for (int g = 0; g < 2; ++g) {
      // t <- u = rho(u) T, u -> t = T rho(u)
      lre[l] += re_l[al * 2 + g] * t[g][be];
      lrf[l] += rf_l[al * 2 + g] * t[g][be];
      lle[l] += re_l[g * 2 + be] * t[al][g];
      llf[l] += rf_l[g * 2 + be] * t[al][g];
    }
    lrk[l] = al == 0 ? 1 : -1;
    llk[l] = be == 0 ? 1 : -1;
  }
  for (int k = 1; k < dim; ++k) {
    auto [l, r] = split_letter(o.exps(k));
    int rest = o.key(r[0], r[1], r[2]);
    Vec rv = Vec::unit(rest, CycScalar::one(o.field()));
    rk_[k] = rk_[rest] + lrk[l];
    lk_[k] = lk_[rest] + llk[l];
    // (st) <- E = (s <- E)(t <- K) + s (t <- E); (st) <- F = (s <- F) t + (s <- K^-1)(t <- F)
    re_[k] = o.qp(rk_[rest]) * o.multiply(lre[l], rv) + o.multiply(letter[l], re_[rest]);
    rf_[k] = o.multiply(lrf[l], rv) + o.qp(-lrk[l]) * o.multiply(letter[l], rf_[rest]);
    le_[k] = o.qp(lk_[rest]) * o.multiply(lle[l], rv) + o.multiply(letter[l], le_[rest]);
    lf_[k] = o.multiply(llf[l], rv) + o.qp(-llk[l]) * o.multiply(letter[l], lf_[rest]);
  }
}

std::array<CycScalar, 4> OqAction::rho(char gen, int e) const {
  CycScalar z = CycScalar::zero(o_->field()), one = CycScalar::one(o_->field());
  switch (gen) {
    case 'E':
      return {z, one, z, z};
    case 'F':
      return {z, z, one, z};
    case 'K':
      return {o_->qp(e), z, z, o_->qp(-e)};
  }
  throw std::invalid_argument("rho: unknown generator");
}

Vec OqAction::apply(Vec const& f, std::vector<Vec> const& table) const {
  Accumulator acc(o_->dimension());
  for (auto const& t : f) acc.add(table[t.key], t.coef);
  return acc.take();
}

Vec OqAction::k_power(Vec const& f, int e, bool left) const {
  if (e == 0) return f;
  auto const& k = left ? lk_ : rk_;
  std::vector<Term> out;
  for (auto const& t : f) out.push_back({t.key, t.coef * o_->qp(static_cast<long>(e) * k[t.key])});
  return Vec::from_terms(std::move(out));
}

Vec OqAction::right_gen(Vec const& f, char gen, int e) const {
  switch (gen) {
    case 'E':
      return apply(f, re_);
    case 'F':
      return apply(f, rf_);
    case 'K':
      return k_power(f, e, false);
    case 'T':
      return (o_->qp(1) - o_->qp(-1)) * apply(k_power(f, 1, false), rf_);
  }
  throw std::invalid_argument("unknown generator");
}

Vec OqAction::left_gen(char gen, Vec const& f, int e) const {
  switch (gen) {
    case 'E':
      return apply(f, le_);
    case 'F':
      return apply(f, lf_);
    case 'K':
      return k_power(f, e, true);
    case 'T':
      return (o_->qp(1) - o_->qp(-1)) * k_power(apply(f, lf_), 1, true);
  }
  throw std::invalid_argument("unknown generator");
}

Vec OqAction::right(Vec const& f, Vec const& u) const {
  // Basis word K^g E^m1 F~^m2 acts letter by letter from the left.
  auto const& h = u_->algebra();
  std::map<std::pair<int, int>, std::vector<std::pair<int, CycScalar>>> by;
  for (auto const& t : u) {
    auto m = h.mono_exps(h.key_mono(t.key));
    by[{h.key_group(t.key), m[0]}].push_back({m[1], t.coef});
  }
  Accumulator acc(o_->dimension());
  int g_at = -1, m1_at = 0;
  Vec fg;
  for (auto& [gm, list] : by) {
    if (gm.first != g_at) {
      g_at = gm.first;
      fg = k_power(f, g_at, false);
      m1_at = 0;
    }
    for (; m1_at < gm.second; ++m1_at) fg = apply(fg, re_);
    std::sort(list.begin(), list.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    Vec cur = fg;
    int m2_at = 0;
    for (auto const& [m2, c] : list) {
      for (; m2_at < m2; ++m2_at) cur = right_gen(cur, 'T');
      acc.add(cur, c);
    }
  }
  return acc.take();
}

Vec OqAction::left(Vec const& u, Vec const& f) const {
  auto const& h = u_->algebra();
  std::map<std::pair<int, int>, std::vector<std::pair<int, CycScalar>>> by;
  for (auto const& t : u) {
    auto m = h.mono_exps(h.key_mono(t.key));
    by[{m[1], m[0]}].push_back({h.key_group(t.key), t.coef});
  }
  Accumulator acc(o_->dimension());
  int m2_at = -1, m1_at = 0;
  Vec fm;
  for (auto const& [mm, list] : by) {
    if (mm.first != m2_at) {
      fm = f;
      for (int i = 0; i < mm.first; ++i) fm = left_gen('T', fm);
      m2_at = mm.first;
      m1_at = 0;
    }
    for (; m1_at < mm.second; ++m1_at) fm = apply(fm, le_);
    for (auto const& [g, c] : list) acc.add(k_power(fm, g, true), c);
  }
  return acc.take();
}

CycScalar OqAction::pair(Vec const& f, Vec const& u) const { return o_->counit(right(f, u)); }

std::vector<Vec> OqAction::pairing_rows() const {
  int dim = o_->dimension();
  std::vector<Vec> rows;
  for (int f = 0; f < dim; ++f) {
    Vec fv = Vec::unit(f, CycScalar::one(o_->field()));
    std::vector<Term> row;
    for (int u = 0; u < dim; ++u) {
      CycScalar c = pair(fv, Vec::unit(u, CycScalar::one(o_->field())));
      if (!c.is_zero()) row.push_back({u, c});
    }
    rows.push_back(Vec::from_terms(std::move(row)));
  }
  return rows;
}

void OqAction::write_pairing_csv(std::ostream& os) const {
  int dim = o_->dimension();
  auto const& h = u_->algebra();
  os << "f";
  for (int u = 0; u < dim; ++u) os << ",\"" << h.key_name(u) << "\"";
  os << "\n";
  auto rows = pairing_rows();
  for (int f = 0; f < dim; ++f) {
    os << "\"" << o_->key_name(f) << "\"";
    for (int u = 0; u < dim; ++u) os << ",\"" << rows[f].at(u).str() << "\"";
    os << "\n";
  }
}

Subspace dagger_by_integral(OqAction const& act, Vec const& lambda) {
  auto const& o = act.oq();
  Subspace out(o);
  for (int k = 0; k < o.dimension(); ++k)
    out.insert(act.right(Vec::unit(k, CycScalar::one(o.field())), lambda));
  return out;
}

Subspace dagger_by_annihilator(OqAction const& act, std::vector<Vec> const& generators) {
  auto const& o = act.oq();
  auto const& h = act.uq().algebra();
  int dim = o.dimension();
  std::vector<Vec> cols;
  for (int k = 0; k < dim; ++k) {
    Vec f = Vec::unit(k, CycScalar::one(o.field()));
    Vec col;
    for (std::size_t g = 0; g < generators.size(); ++g)
      col += shifted(act.right(f, generators[g]) - h.counit(generators[g]) * f,
                     static_cast<int>(g) * dim);
    cols.push_back(col);
  }
  int space = dim * std::max<int>(1, static_cast<int>(generators.size()));
  return Subspace(o, kernel(cols, space));
}

Dagger dagger(OqAction const& act, Subspace const& a, std::vector<Vec> const& generators) {
  auto const& o = act.oq();
  Vec lambda = right_integral(a, generators);
  Subspace by_integral = dagger_by_integral(act, lambda);
  Subspace by_kernel = dagger_by_annihilator(act, generators);
  if (by_integral != by_kernel)
    throw std::logic_error("dagger: integral sweep and annihilator disagree");
  if (a.dimension() * by_integral.dimension() != o.dimension())
    throw std::logic_error("dagger: dim(A) dim(A^dagger) != dim H");
  if (!is_subalgebra(by_integral) || !is_right_coideal(by_integral))
    throw std::logic_error("dagger: result is not a right coideal subalgebra");
  return {by_integral, lambda};
}

SigmaCheck::SigmaCheck(Oqsl2 const& source, Oqsl2 const& target) : src_(&source), dst_(&target) {
  if (source.n() != target.n() || source.root_power() != -target.root_power())
    throw std::invalid_argument("sigma-check needs O_q and O_{q^-1}");
  int dim = source.dimension();
  Vec letters[3] = {source.qp(1) * target.c(), source.qp(-1) * target.b(), target.a()};
  image_.resize(dim);
  image_[0] = target.one();
  for (int k = 1; k < dim; ++k) {
    auto [l, r] = split_letter(source.exps(k));
    image_[k] = target.multiply(letters[l], image_[source.key(r[0], r[1], r[2])]);
  }
}

Vec SigmaCheck::operator()(Vec const& f) const {
  return linear_map(f, [&](int key) { return image_[key]; });
}

YzPair yz_alpha_beta(OqAction const& act, CycScalar const& alpha, CycScalar const& beta) {
  if (alpha.is_zero() && beta.is_zero()) throw std::invalid_argument("(alpha, beta) = (0, 0)");
  auto const& uq = act.uq();
  auto const& o = act.oq();
  int n = o.n();
  Polynomial phi = phi_polynomial(uq, alpha, beta);
  auto [psi, rem] = phi.divmod(Polynomial::linear(beta));
  if (!rem.is_zero()) throw std::logic_error("beta is not a root of phi");
  Vec lambda = evaluate_polynomial(uq.algebra(), psi, uq.u(alpha, beta));
  CycScalar q2 = o.qp(2), fact = CycScalar::one(o.field());
  for (int m = 1; m < n; ++m) fact *= (CycScalar(1) - q2.pow(m)) / (CycScalar(1) - q2);
  CycScalar c = o.qp(-1) / fact;
  return {lambda, c * act.right(o.xyz(n - 1, 1, 0), lambda), c * act.right(o.xyz(n - 1, 0, 1), lambda)};
}

WGenerator w_generator(OqAction const& act, CycScalar const& lambda, CycScalar const& mu) {
  auto const& uq = act.uq();
  auto const& o = act.oq();
  if (!((CycScalar(1) - o.qp(2)) * lambda * mu).is_one())
    throw FamilyError("(1 - q^2) lambda mu != 1");
  std::vector<Vec> gens = {uq.v(lambda), uq.w(mu)};
  Subspace b = span_closure(uq.algebra(), gens);
  Vec integral = right_integral(b, gens);
  return {integral, act.right(o.xyz(o.n() - 1, o.n() - 1, 1), integral)};
}

bool in_x_ideal(Oqsl2 const& o, Vec const& f) {
  for (auto const& t : f)
    if (o.exps(t.key)[0] == 0) return false;
  return true;
}

}  // namespace qcsa
