#include "qcsa/pointed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qcsa {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 1) throw DatumError("cyclic factor orders must be positive");
    size_ *= n;
  }
  mul_.resize(static_cast<std::size_t>(size_) * size_);
  inv_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    auto ea = exps(a);
    for (int b = 0; b < size_; ++b) {
      auto eb = exps(b);
      for (std::size_t k = 0; k < ea.size(); ++k) eb[k] += ea[k];
      mul_[a * size_ + b] = index(eb);
    }
    for (auto& v : ea) v = -v;
    inv_[a] = index(ea);
  }
}

int AbelianGroup::index(std::vector<int> const& e) const {
  if (e.size() != orders_.size()) throw DatumError("group element has the wrong rank");
  int idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    int n = orders_[k];
    idx = idx * n + ((e[k] % n) + n) % n;
  }
  return idx;
}

std::vector<int> AbelianGroup::exps(int element) const {
  std::vector<int> e(orders_.size());
  for (int k = static_cast<int>(orders_.size()) - 1; k >= 0; --k) {
    e[k] = element % orders_[k];
    element /= orders_[k];
  }
  return e;
}

int AbelianGroup::pow(int a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 0;
  for (long i = 0; i < e % size_; ++i) r = mul(r, a);
  return r;
}

int AbelianGroup::element_order(int a) const {
  int r = a, k = 1;
  while (r != 0) {
    r = mul(r, a);
    ++k;
  }
  return k;
}

int character_exponent(CycContext const& field, AbelianGroup const& group, Character const& chi,
                       int g) {
  int m = field.order();
  auto e = group.exps(g);
  if (chi.size() != e.size()) throw DatumError("character has the wrong rank");
  long s = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    int n = group.orders()[k];
    if (m % n) throw DatumError("cyclic order does not divide the field order");
    s += static_cast<long>(chi[k]) * e[k] * (m / n);
  }
  return static_cast<int>(((s % m) + m) % m);
}

namespace {

bool trivial_character(CycContext const& field, AbelianGroup const& group, Character const& c) {
  for (int g = 0; g < group.size(); ++g)
    if (character_exponent(field, group, c, g) != 0) return false;
  return true;
}

Character char_mul(Character a, Character const& b, long times = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += static_cast<int>(times * b[k]);
  return a;
}

int order_of_exponent(int e, int m) { return m / std::gcd(((e % m) + m) % m, m); }

}  // namespace

void validate_datum(CycContext const& field, Datum const& d) {
  int theta = d.theta();
  auto const& G = d.group;
  for (int n : G.orders())
    if (field.order() % n) throw DatumError("cyclic order does not divide the field order");
  if (static_cast<int>(d.chi.size()) != theta) throw DatumError("need one character per g_i");
  if (static_cast<int>(d.mu.size()) != theta) throw DatumError("need one mu_i per g_i");
  if (static_cast<int>(d.lambda.size()) != theta) throw DatumError("lambda must be theta x theta");
  for (auto const& row : d.lambda)
    if (static_cast<int>(row.size()) != theta) throw DatumError("lambda must be theta x theta");
  for (int i = 0; i < theta; ++i) {
    if (d.g[i] < 0 || d.g[i] >= G.size()) throw DatumError("g_i outside the group");
    if (d.chi[i].size() != G.orders().size()) throw DatumError("character has the wrong rank");
  }
  for (int i = 0; i < theta; ++i) {
    int qi = character_exponent(field, G, d.chi[i], d.g[i]);
    if (qi == 0) throw DatumError("chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) +
                                  ") = 1");
    for (int j = 0; j < theta; ++j) {
      if (i == j) continue;
      int s = character_exponent(field, G, d.chi[i], d.g[j]) +
              character_exponent(field, G, d.chi[j], d.g[i]);
      if (s % field.order())
        throw DatumError("chi_i(g_j) chi_j(g_i) != 1 for i=" + std::to_string(i + 1) +
                         ", j=" + std::to_string(j + 1));
    }
    for (int j = 0; j < theta; ++j) {
      if (d.lambda[i][j].is_zero()) continue;
      if (j <= i) throw DatumError("lambda must be strictly upper triangular");
      bool gg = G.mul(d.g[i], d.g[j]) == 0;
      bool cc = trivial_character(field, G, char_mul(d.chi[i], d.chi[j]));
      if (gg || !cc)
        throw DatumError("lambda_" + std::to_string(i + 1) + std::to_string(j + 1) +
                         " must vanish");
    }
    if (d.mu[i] != 0 && d.mu[i] != 1) throw DatumError("mu_i must be 0 or 1");
    if (d.mu[i]) {
      int n = order_of_exponent(qi, field.order());
      bool gn = G.pow(d.g[i], n) == 0;
      bool cn = trivial_character(field, G, char_mul(Character(d.chi[i].size(), 0), d.chi[i], n));
      if (gn || !cn) throw DatumError("mu_" + std::to_string(i + 1) + " must vanish");
    }
  }
}

PointedHopfAlgebra::PointedHopfAlgebra(CycContext const& field, Datum datum)
    : field_(&field), datum_(std::move(datum)) {
  validate_datum(field, datum_);
  int theta = datum_.theta();
  int gs = datum_.group.size();
  int m = field.order();
  chi_exp_.resize(static_cast<std::size_t>(theta) * gs);
  for (int i = 0; i < theta; ++i)
    for (int g = 0; g < gs; ++g)
      chi_exp_[i * gs + g] = character_exponent(field, datum_.group, datum_.chi[i], g);
  nil_.resize(theta);
  stride_.resize(theta);
  for (int i = theta - 1; i >= 0; --i) {
    nil_[i] = order_of_exponent(chi_exp(i, datum_.g[i]), m);
    stride_[i] = monos_;
    monos_ *= nil_[i];
  }
  dim_ = gs * monos_;

  // With g x_i = chi_i(g) x_i g the coproduct expands in base chi_i(g_i)^{-1}.
  qint_.resize(theta);
  for (int i = 0; i < theta; ++i) {
    CycScalar qi = chi_value(i, datum_.g[i]).inverse();
    for (int k = 0; k <= nil_[i]; ++k) qint_[i].push_back(q_integer(k, qi));
  }

  std::map<std::pair<int, int>, Vec> memo;
  table_.assign(monos_, std::vector<Vec>(monos_));
  for (int a = 0; a < monos_; ++a)
    for (int b = 0; b < monos_; ++b) {
      Vec v = Vec::unit(key(0, a), CycScalar::one(field));
      auto eb = mono_exps(b);
      for (int i = 0; i < theta; ++i)
        for (int r = 0; r < eb[i]; ++r) v = right_letter(v, i, memo);
      table_[a][b] = std::move(v);
    }

  // Delta(g x^m) = sum c(m,i,j) g x^i (x) g g^i x^j.
  std::vector<std::vector<std::vector<CycScalar>>> binom(theta);
  for (int r = 0; r < theta; ++r) {
    CycScalar qr = chi_value(r, datum_.g[r]).inverse();
    binom[r].resize(nil_[r]);
    for (int n = 0; n < nil_[r]; ++n)
      for (int k = 0; k <= n; ++k) binom[r][n].push_back(q_binomial(n, k, qr));
  }
  coproduct_.resize(monos_);
  for (int mm = 0; mm < monos_; ++mm) {
    auto em = mono_exps(mm);
    for (int ii = 0; ii < monos_; ++ii) {
      auto ei = mono_exps(ii);
      bool ok = true;
      for (int r = 0; r < theta; ++r) ok = ok && ei[r] <= em[r];
      if (!ok) continue;
      std::vector<int> ej(theta);
      for (int r = 0; r < theta; ++r) ej[r] = em[r] - ei[r];
      CycScalar c = CycScalar::one(field);
      long qe = 0;
      int shift = 0;
      for (int r = 0; r < theta; ++r) {
        c *= binom[r][em[r]][ei[r]];
        for (int s = 0; s < r; ++s) qe -= static_cast<long>(chi_exp(s, datum_.g[r])) * ei[r] * ej[s];
        shift = datum_.group.mul(shift, datum_.group.pow(datum_.g[r], ei[r]));
      }
      c = c.mul_qpow(qe);
      if (!c.is_zero()) coproduct_[mm].push_back({ii, mono_index(ej), shift, c});
    }
  }

  // S(x^m) = S(x_theta)^m_theta ... S(x_1)^m_1 with S(x_i) = -x_i g_i^{-1}.
  antipode_mono_.resize(monos_);
  std::vector<Vec> sx(theta);
  for (int i = 0; i < theta; ++i) sx[i] = -right_group(x(i), datum_.group.inv(datum_.g[i]));
  for (int mm = 0; mm < monos_; ++mm) {
    auto em = mono_exps(mm);
    Vec v = one();
    for (int i = theta - 1; i >= 0; --i)
      for (int r = 0; r < em[i]; ++r) v = multiply(v, sx[i]);
    antipode_mono_[mm] = std::move(v);
  }

  std::vector<int> keys(dim_);
  std::iota(keys.begin(), keys.end(), 0);
  std::sort(keys.begin(), keys.end(), [&](int a, int b) {
    int c = compare_mono(mono_exps(key_mono(a)), mono_exps(key_mono(b)));
    if (c != 0) return c < 0;
    return datum_.group.exps(key_group(a)) < datum_.group.exps(key_group(b));
  });
  auto prio = std::make_shared<std::vector<int>>(dim_);
  for (int r = 0; r < dim_; ++r) (*prio)[keys[r]] = r;
  order_ = prio;
}

int PointedHopfAlgebra::mono_index(std::vector<int> const& m) const {
  int idx = 0;
  for (int i = 0; i < theta(); ++i) {
    if (m[i] < 0 || m[i] >= nil_[i]) throw std::out_of_range("exponent outside the PBW range");
    idx += m[i] * stride_[i];
  }
  return idx;
}

std::vector<int> PointedHopfAlgebra::mono_exps(int mono) const {
  std::vector<int> e(theta());
  for (int i = 0; i < theta(); ++i) e[i] = (mono / stride_[i]) % nil_[i];
  return e;
}

int PointedHopfAlgebra::key(int g, std::vector<int> const& m) const {
  return key(g, mono_index(m));
}

Vec PointedHopfAlgebra::x(int i) const {
  std::vector<int> m(theta(), 0);
  m[i] = 1;
  return Vec::unit(key(0, m), CycScalar::one(*field_));
}

std::string PointedHopfAlgebra::key_name(int k) const {
  std::ostringstream os;
  auto ge = datum_.group.exps(key_group(k));
  os << "g^(";
  for (std::size_t i = 0; i < ge.size(); ++i) os << (i ? "," : "") << ge[i];
  os << ")";
  auto me = mono_exps(key_mono(k));
  for (int i = 0; i < theta(); ++i) os << " x" << i + 1 << "^" << me[i];
  return os.str();
}

Vec PointedHopfAlgebra::left_group(int g, Vec const& v) const {
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto const& t : v) out.push_back({key(datum_.group.mul(g, key_group(t.key)), key_mono(t.key)), t.coef});
  return Vec::from_terms(std::move(out));
}

Vec PointedHopfAlgebra::right_group(Vec const& v, int g) const {
  // x^m g = chi(g)^{-m} g x^m
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto const& t : v) {
    auto me = mono_exps(key_mono(t.key));
    long e = 0;
    for (int i = 0; i < theta(); ++i) e -= static_cast<long>(me[i]) * chi_exp(i, g);
    out.push_back({key(datum_.group.mul(key_group(t.key), g), key_mono(t.key)), t.coef.mul_qpow(e)});
  }
  return Vec::from_terms(std::move(out));
}

Vec PointedHopfAlgebra::right_letter(Vec const& v, int k,
                                     std::map<std::pair<int, int>, Vec>& memo) const {
  Vec out;
  for (auto const& t : v)
    out = Vec::axpy(out, t.coef, left_group(key_group(t.key), times_letter(key_mono(t.key), k, memo)));
  return out;
}

// x^m x_k in normal form.
Vec PointedHopfAlgebra::times_letter(int mono, int k,
                                     std::map<std::pair<int, int>, Vec>& memo) const {
  auto it = memo.find({mono, k});
  if (it != memo.end()) return it->second;
  auto m = mono_exps(mono);
  int last = -1;
  for (int i = 0; i < theta(); ++i)
    if (m[i] > 0) last = i;
  CycScalar one = CycScalar::one(*field_);
  Vec r;
  if (last < k || (last == k && m[k] + 1 < nil_[k])) {
    m[k] += 1;
    r = Vec::unit(key(0, m), one);
  } else if (last == k) {
    // x_k^{N_k} = mu_k (1 - g_k^{N_k})
    m[k] = 0;
    if (datum_.mu[k]) {
      Vec base = Vec::unit(key(0, m), one);
      r = base - right_group(base, datum_.group.pow(datum_.g[k], nil_[k]));
    }
  } else {
    // x_j x_k = chi_k(g_j) x_k x_j + lambda_kj (1 - g_k g_j), j > k
    int j = last;
    m[j] -= 1;
    int m1 = mono_index(m);
    Vec swapped = right_letter(times_letter(m1, k, memo), j, memo);
    r = CycScalar::q_power(*field_, chi_exp(k, datum_.g[j])) * swapped;
    CycScalar lam = datum_.lambda[k][j];
    if (!lam.is_zero()) {
      Vec base = Vec::unit(key(0, m1), one);
      r = r + lam * (base - right_group(base, datum_.group.mul(datum_.g[k], datum_.g[j])));
    }
  }
  memo[{mono, k}] = r;
  return r;
}

Vec PointedHopfAlgebra::basis_product(int a, int b) const {
  int ga = key_group(a), gb = key_group(b);
  auto ma = mono_exps(key_mono(a));
  long e = 0;
  for (int i = 0; i < theta(); ++i) e -= static_cast<long>(ma[i]) * chi_exp(i, gb);
  Vec const& t = table_[key_mono(a)][key_mono(b)];
  int g = datum_.group.mul(ga, gb);
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto const& x : t)
    out.push_back({key(datum_.group.mul(g, key_group(x.key)), key_mono(x.key)), x.coef.mul_qpow(e)});
  return Vec::from_terms(std::move(out));
}

Vec PointedHopfAlgebra::basis_coproduct(int a) const {
  int g = key_group(a);
  std::vector<Term> out;
  for (auto const& c : coproduct_[key_mono(a)])
    out.push_back({key(g, c.left) * dim_ + key(datum_.group.mul(g, c.shift), c.right), c.coef});
  return Vec::from_terms(std::move(out));
}

CycScalar PointedHopfAlgebra::basis_counit(int a) const {
  return key_mono(a) == 0 ? CycScalar::one(*field_) : CycScalar::zero(*field_);
}

Vec PointedHopfAlgebra::basis_antipode(int a) const {
  return right_group(antipode_mono_[key_mono(a)], datum_.group.inv(key_group(a)));
}

Vec PointedHopfAlgebra::partial(int i, Vec const& u) const {
  std::vector<Term> out;
  for (auto const& t : u) {
    auto m = mono_exps(key_mono(t.key));
    if (m[i] == 0) continue;
    long e = 0;
    for (int r = i + 1; r < theta(); ++r) e -= static_cast<long>(m[r]) * chi_exp(i, datum_.g[r]);
    CycScalar c = qint_[i][m[i]].mul_qpow(e);
    m[i] -= 1;
    out.push_back({key(key_group(t.key), m), c * t.coef});
  }
  return Vec::from_terms(std::move(out));
}

Vec PointedHopfAlgebra::tau(int i, Vec const& u) const {
  std::vector<Term> out;
  for (auto const& t : u) {
    auto m = mono_exps(key_mono(t.key));
    long e = -chi_exp(i, key_group(t.key));
    for (int j = 0; j < theta(); ++j) e -= static_cast<long>(m[j]) * chi_exp(i, datum_.g[j]);
    out.push_back({t.key, t.coef.mul_qpow(e)});
  }
  return Vec::from_terms(std::move(out));
}

Vec PointedHopfAlgebra::project_eg(int g, Vec const& u) const {
  std::vector<Term> out;
  for (auto const& t : comultiply(u)) {
    int right = t.key % dim_;
    if (key_mono(right) == 0 && key_group(right) == g) out.push_back({t.key / dim_, t.coef});
  }
  return Vec::from_terms(std::move(out));
}

int PointedHopfAlgebra::compare_mono(std::vector<int> const& a, std::vector<int> const& b) {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  return 0;
}

std::pair<Vec, std::vector<int>> PointedHopfAlgebra::leading_term(Vec const& u) const {
  if (u.is_zero()) throw std::invalid_argument("leading term of zero");
  std::vector<int> best = mono_exps(key_mono(u.terms().front().key));
  for (auto const& t : u) {
    auto m = mono_exps(key_mono(t.key));
    if (compare_mono(m, best) > 0) best = m;
  }
  int bm = mono_index(best);
  std::vector<Term> c;
  for (auto const& t : u)
    if (key_mono(t.key) == bm) c.push_back({key(key_group(t.key), 0), t.coef});
  return {Vec::from_terms(std::move(c)), best};
}

std::vector<int> subgroup_closure(AbelianGroup const& group, std::vector<int> const& gens) {
  std::set<int> s{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        int b = group.mul(a, g);
        if (s.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> all_subgroups(AbelianGroup const& group) {
  std::set<std::vector<int>> found{{0}};
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const& h : frontier)
      for (int g = 0; g < group.size(); ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        auto gens = h;
        gens.push_back(g);
        auto k = subgroup_closure(group, gens);
        if (found.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Character> character_perp(CycContext const& field, AbelianGroup const& group,
                                      std::vector<int> const& subgroup) {
  std::vector<Character> out;
  for (int c = 0; c < group.size(); ++c) {
    Character chi = group.exps(c);
    bool ok = true;
    for (int g : subgroup) ok = ok && character_exponent(field, group, chi, g) == 0;
    if (ok) out.push_back(chi);
  }
  return out;
}

std::vector<std::vector<int>> sim_classes(PointedHopfAlgebra const& u,
                                          std::vector<int> const& subgroup) {
  auto const& G = u.group();
  auto const& d = u.datum();
  auto in_sub = [&](int g) { return std::binary_search(subgroup.begin(), subgroup.end(), g); };
  auto related = [&](int i, int j) {
    if (!in_sub(G.mul(d.g[i], G.inv(d.g[j])))) return false;
    for (int g : subgroup)
      if (u.chi_exp(i, g) != u.chi_exp(j, g)) return false;
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < u.theta(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (related(c.front(), i)) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

namespace {

std::vector<int> ints_of(std::string const& s) {
  std::istringstream is(s);
  std::vector<int> v;
  int x;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw DatumError("expected integers in '" + s + "'");
  return v;
}

}  // namespace

Datum parse_datum(std::string const& text, CycContext const& field) {
  std::istringstream in(text);
  std::string line;
  std::vector<int> orders;
  std::map<int, std::vector<int>> gs, chis;
  std::vector<std::pair<std::pair<int, int>, std::string>> lambdas;
  std::vector<int> mu;
  int theta = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw DatumError("malformed datum line '" + line + "'");
      continue;
    }
    std::string k = line.substr(0, colon);
    k.erase(std::remove_if(k.begin(), k.end(), ::isspace), k.end());
    std::string v = line.substr(colon + 1);
    if (k == "group") {
      orders = ints_of(v);
    } else if (k == "theta") {
      auto t = ints_of(v);
      if (t.size() != 1) throw DatumError("theta takes one integer");
      theta = t[0];
    } else if (k == "mu") {
      mu = ints_of(v);
    } else if (k == "lambda") {
      std::istringstream is(v);
      int i = 0, j = 0;
      std::string rest;
      if (!(is >> i >> j) || !std::getline(is, rest)) throw DatumError("lambda takes 'i j value'");
      lambdas.push_back({{i - 1, j - 1}, rest});
    } else if (k.rfind("chi", 0) == 0) {
      chis[std::stoi(k.substr(3)) - 1] = ints_of(v);
    } else if (k.rfind("g", 0) == 0) {
      gs[std::stoi(k.substr(1)) - 1] = ints_of(v);
    } else {
      throw DatumError("unknown datum key '" + k + "'");
    }
  }
  if (theta < 0) throw DatumError("missing theta");
  Datum d;
  d.group = AbelianGroup(orders);
  for (int i = 0; i < theta; ++i) {
    if (!gs.count(i) || !chis.count(i)) throw DatumError("missing g or chi for index " + std::to_string(i + 1));
    d.g.push_back(d.group.index(gs[i]));
    d.chi.push_back(chis[i]);
  }
  d.lambda.assign(theta, std::vector<CycScalar>(theta, CycScalar::zero(field)));
  for (auto const& [ij, s] : lambdas) {
    if (ij.first < 0 || ij.second < 0 || ij.first >= theta || ij.second >= theta)
      throw DatumError("lambda index out of range");
    d.lambda[ij.first][ij.second] = parse_scalar(s, field);
  }
  d.mu = mu.empty() ? std::vector<int>(theta, 0) : mu;
  validate_datum(field, d);
  return d;
}

std::string format_datum(Datum const& d) {
  std::ostringstream os;
  auto ints = [&](std::vector<int> const& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << "\n";
  };
  os << "group: ";
  ints(d.group.orders());
  os << "theta: " << d.theta() << "\n";
  for (int i = 0; i < d.theta(); ++i) {
    os << "g" << i + 1 << ": ";
    ints(d.group.exps(d.g[i]));
    os << "chi" << i + 1 << ": ";
    ints(d.chi[i]);
  }
  for (int i = 0; i < d.theta(); ++i)
    for (int j = i + 1; j < d.theta(); ++j)
      if (!d.lambda[i][j].is_zero())
        os << "lambda: " << i + 1 << " " << j + 1 << " " << format_scalar(d.lambda[i][j]) << "\n";
  os << "mu: ";
  ints(d.mu);
  return os.str();
}

}  // namespace qcsa
