#include "qcsa/uqsl2.hpp"

#include <numeric>
#include <sstream>

namespace qcsa {

namespace {

CycScalar qpow(CycScalar const& q, long e) { return q.pow(e); }

std::vector<int> cyclic_subgroup(AbelianGroup const& group, int generator) {
  return subgroup_closure(group, {generator});
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

Datum uqsl2_datum(CycContext const& field, int power, bool linked) {
  Datum d;
  d.group = AbelianGroup({field.order()});
  d.g = {1, 1};
  d.chi = {{2 * power}, {-2 * power}};
  d.lambda.assign(2, std::vector<CycScalar>(2, CycScalar::zero(field)));
  if (linked) d.lambda[0][1] = CycScalar::one(field);
  d.mu = {0, 0};
  return d;
}

Uqsl2::Uqsl2(int n, int power, bool linked)
    : field_(&CycContext::get(n)),
      power_(power),
      q_(CycScalar::q_power(*field_, power)),
      alg_(*field_, uqsl2_datum(*field_, power, linked)) {
  if (std::gcd(power, n) != 1) throw std::invalid_argument("root power must be prime to N");
}

Vec Uqsl2::K(int r) const { return alg_.group_element(alg_.group().pow(1, r)); }

Vec Uqsl2::F() const {
  CycScalar c = (q_ - q_.inverse()).inverse();
  return c * alg_.left_group(alg_.group().inv(1), Ft());
}

std::vector<std::string> uqsl2_relation_failures(Uqsl2 const& uq) {
  auto const& h = uq.algebra();
  CycScalar q = uq.q(), qi = q.inverse();
  int n = uq.n();
  Vec K = uq.K(), Ki = uq.K(-1), E = uq.E(), F = uq.F(), one = h.one();
  std::vector<std::string> bad;
  auto expect = [&](bool ok, char const* name) {
    if (!ok) bad.emplace_back(name);
  };
  expect(h.power(K, n) == one, "K^N = 1");
  expect(h.multiply(K, E) == (q * q) * h.multiply(E, K), "K E = q^2 E K");
  expect(h.multiply(K, F) == (qi * qi) * h.multiply(F, K), "K F = q^-2 F K");
  expect(h.power(E, n).is_zero(), "E^N = 0");
  expect(h.power(F, n).is_zero(), "F^N = 0");
  expect(h.multiply(E, F) - h.multiply(F, E) == (q - qi).inverse() * (K - Ki),
         "E F - F E = (K - K^-1)/(q - q^-1)");
  expect(h.comultiply(K) == h.tensor(K, K), "Delta(K) = K (x) K");
  expect(h.comultiply(E) == h.tensor(E, K) + h.tensor(one, E), "Delta(E) = E (x) K + 1 (x) E");
  expect(h.comultiply(F) == h.tensor(F, one) + h.tensor(Ki, F), "Delta(F) = F (x) 1 + K^-1 (x) F");
  expect(h.counit(K).is_one() && h.counit(E).is_zero() && h.counit(F).is_zero(), "counit");
  expect(h.antipode(K) == Ki, "S(K) = K^-1");
  expect(h.antipode(E) == -h.multiply(E, Ki), "S(E) = -E K^-1");
  expect(h.antipode(F) == -h.multiply(K, F), "S(F) = -K F");
  expect(uq.Ft() == (q - qi) * h.multiply(K, F), "F~ = (q - q^-1) K F");
  return bad;
}

FamilySpec parse_family(std::string const& text, CycContext const& field) {
  std::string t = trim(text);
  auto colon = t.find(':');
  std::string name = t.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : t.substr(colon + 1);
  std::vector<std::string> parts;
  if (colon != std::string::npos) {
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  }
  auto need = [&](std::size_t k) {
    if (parts.size() != k)
      throw FamilyError("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  auto as_int = [&](std::string const& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw FamilyError("expected an integer, got '" + s + "'");
    return v;
  };
  auto scalar = [&](std::string const& s) { return parse_scalar(s, field); };
  FamilySpec spec;
  if (name == "full" && parts.empty()) {
    spec.kind = Family::Full;
  } else if (name == "K" && parts.empty()) {
    spec = {Family::GroupPower, 1, {}, {}};
  } else if (name == "E" && parts.empty()) {
    spec = {Family::BorelE, field.order(), {}, {}};
  } else if (name == "F" && parts.empty()) {
    spec = {Family::BorelF, field.order(), {}, {}};
  } else if (name == "Kr") {
    need(1);
    spec = {Family::GroupPower, as_int(parts[0]), {}, {}};
  } else if (name == "KrE") {
    need(1);
    spec = {Family::BorelE, as_int(parts[0]), {}, {}};
  } else if (name == "KrF") {
    need(1);
    spec = {Family::BorelF, as_int(parts[0]), {}, {}};
  } else if (name == "pair") {
    need(2);
    spec = {Family::Pair, 1, scalar(parts[0]), scalar(parts[1])};
  } else if (name == "line") {
    need(2);
    spec = {Family::Line, 1, scalar(parts[0]), scalar(parts[1])};
  } else if (name == "fline") {
    need(1);
    spec = {Family::FLine, 1, scalar(parts[0]), CycScalar::zero(field)};
  } else {
    throw FamilyError("unknown family '" + t + "'");
  }
  return spec;
}

std::string family_label(FamilySpec const& s) {
  auto sc = [](CycScalar const& c) { return "(" + format_scalar(c) + ")"; };
  std::string r = std::to_string(s.r);
  switch (s.kind) {
    case Family::Full:
      return "U";
    case Family::GroupPower:
      return "<K^" + r + ">";
    case Family::BorelE:
      return "<K^" + r + ", E>";
    case Family::BorelF:
      return "<K^" + r + ", F~>";
    case Family::Pair:
      return "<E + " + sc(s.p1) + "K, F~ + " + sc(s.p2) + "K>";
    case Family::Line:
      return "<E + " + sc(s.p1) + "F~ + " + sc(s.p2) + "K>";
    case Family::FLine:
      return "<F~ + " + sc(s.p1) + "K>";
  }
  return "";
}

void validate_family(Uqsl2 const& uq, FamilySpec const& s) {
  int n = uq.n();
  switch (s.kind) {
    case Family::GroupPower:
    case Family::BorelE:
    case Family::BorelF:
      if (s.r < 1 || n % s.r != 0) throw FamilyError("r must be a positive divisor of N");
      break;
    case Family::Pair: {
      CycScalar one_q2 = CycScalar(1) - uq.q() * uq.q();
      if (!(one_q2 * s.p1 * s.p2).is_one()) throw FamilyError("requires (1 - q^2) lambda mu = 1");
      break;
    }
    case Family::Line:
      if (s.p1.is_zero() && s.p2.is_zero()) throw FamilyError("requires (alpha, beta) != (0, 0)");
      break;
    case Family::FLine:
      if (s.p1.is_zero()) throw FamilyError("requires beta != 0");
      break;
    case Family::Full:
      break;
  }
}

std::vector<Vec> family_generators(Uqsl2 const& uq, FamilySpec const& s) {
  switch (s.kind) {
    case Family::Full:
      return uq.generators();
    case Family::GroupPower:
      return {uq.K(s.r)};
    case Family::BorelE:
      return {uq.K(s.r), uq.E()};
    case Family::BorelF:
      return {uq.K(s.r), uq.Ft()};
    case Family::Pair:
      return {uq.v(s.p1), uq.w(s.p2)};
    case Family::Line:
      return {uq.u(s.p1, s.p2)};
    case Family::FLine:
      return {uq.w(s.p1)};
  }
  return {};
}

int expected_dimension(int n, FamilySpec const& s) {
  switch (s.kind) {
    case Family::Full:
      return n * n * n;
    case Family::GroupPower:
      return n / s.r;
    case Family::BorelE:
    case Family::BorelF:
      return n * n / s.r;
    case Family::Pair:
      return n * n;
    case Family::Line:
    case Family::FLine:
      return n;
  }
  return 0;
}

std::vector<int> expected_group_part(Uqsl2 const& uq, FamilySpec const& s) {
  auto const& G = uq.algebra().group();
  switch (s.kind) {
    case Family::Full:
      return cyclic_subgroup(G, 1);
    case Family::GroupPower:
    case Family::BorelE:
    case Family::BorelF:
      return cyclic_subgroup(G, G.pow(1, s.r));
    default:
      return {0};
  }
}

CoidealSubalgebra family_subalgebra(Uqsl2 const& uq, FamilySpec const& spec) {
  validate_family(uq, spec);
  return make_subalgebra(uq.algebra(), family_generators(uq, spec));
}

std::string family_mismatch(Uqsl2 const& uq, FamilySpec const& spec, CoidealSubalgebra const& a) {
  if (!a.coideal_flag) return "not a right coideal";
  int want = expected_dimension(uq.n(), spec);
  if (a.space.dimension() != want)
    return "dimension " + std::to_string(a.space.dimension()) + " != " + std::to_string(want);
  if (a.group_part != expected_group_part(uq, spec)) return "A cap Gamma differs from the table";
  return "";
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int r = 1; r <= n; ++r)
    if (n % r == 0) out.push_back(r);
  return out;
}

CycScalar sample_scalar(CycContext const& field, std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    std::vector<mpq_class> c(3);
    long den = rng() % 3 == 0 ? 2 : 1;
    for (auto& x : c) x = mpq_class(static_cast<long>(rng() % 5) - 2, den);
    // One in four samples is a bare integer, to cover rational points.
    if (rng() % 4 == 0) c[1] = c[2] = 0;
    for (auto& x : c) x.canonicalize();
    CycScalar s(field, c);
    if (!nonzero || !s.is_zero()) return s;
  }
}

FamilySpec sample_family(Uqsl2 const& uq, Family kind, int r, std::mt19937_64& rng) {
  CycContext const& f = uq.field();
  FamilySpec s{kind, r, CycScalar::zero(f), CycScalar::zero(f)};
  switch (kind) {
    case Family::Pair:
      s.p1 = sample_scalar(f, rng, true);
      s.p2 = ((CycScalar(1) - uq.q() * uq.q()) * s.p1).inverse();
      break;
    case Family::Line:
      s.p1 = sample_scalar(f, rng, false);
      s.p2 = sample_scalar(f, rng, s.p1.is_zero());
      break;
    case Family::FLine:
      s.p1 = sample_scalar(f, rng, true);
      break;
    default:
      break;
  }
  return s;
}

Polynomial phi_polynomial(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta) {
  CycScalar q = uq.q();
  CycScalar inv = (CycScalar(1) - q * q).inverse();
  Polynomial phi = Polynomial::linear(beta);
  for (int k = 1; k <= (uq.n() - 1) / 2; ++k) {
    CycScalar a = qpow(q, 2 * k), b = qpow(q, -2 * k);
    Polynomial quad({beta * beta + (a - b) * (a - b) * inv * alpha, -(beta * (a + b)), CycScalar(1)});
    phi = phi * quad;
  }
  return phi;
}

Discriminant discriminant(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta) {
  CycScalar q = uq.q();
  CycScalar inv = (CycScalar(1) - q * q).inverse();
  Discriminant d{CycScalar::one(uq.field()), {}};
  for (int k = 0; k < uq.n(); ++k) {
    CycScalar s = qpow(q, k) + qpow(q, -k);
    CycScalar dk = beta * beta - s * s * inv * alpha;
    d.parts.push_back(dk);
    d.value *= dk;
  }
  return d;
}

bool semisimplicity_check(Uqsl2 const& uq, CycScalar const& alpha, CycScalar const& beta) {
  bool by_d = !discriminant(uq, alpha, beta).value.is_zero();
  bool by_gcd = is_squarefree(phi_polynomial(uq, alpha, beta));
  if (by_d != by_gcd) throw std::logic_error("discriminant and squarefreeness disagree");
  return by_d;
}

CycScalar maschke_alpha(Uqsl2 const& uq, CycScalar const& beta) {
  return (CycScalar(1) - uq.q() * uq.q()) * beta * beta * CycScalar(mpq_class(1, 4));
}

Vec evaluate_polynomial(HopfAlgebra const& alg, Polynomial const& p, Vec const& x) {
  Vec acc;
  for (int i = p.degree(); i >= 0; --i) acc = alg.multiply(acc, x) + alg.scalar(p.coeff(i));
  return acc;
}

PairGenerators pair_generators(Uqsl2 const& uq, CycScalar const& lambda, CycScalar const& mu) {
  validate_family(uq, {Family::Pair, 1, lambda, mu});
  return {lambda.inverse() * uq.v(lambda), mu.inverse() * uq.w(mu)};
}

Vec idempotent_sum(Uqsl2 const& uq, Vec const& x, int k) {
  auto const& h = uq.algebra();
  Vec out, p = h.one();
  for (int i = 0; i < uq.n(); ++i) {
    out += qpow(uq.q(), -2L * i * k) * p;
    p = h.multiply(p, x);
  }
  return out;
}

Vec theta(Uqsl2 const& uq, CycScalar const& c, Vec const& x) {
  if (c.is_zero()) throw std::invalid_argument("theta_c needs c != 0");
  auto const& h = uq.algebra();
  CycScalar ci = c.inverse();
  std::vector<Term> out;
  for (auto const& t : x) {
    auto m = h.mono_exps(h.key_mono(t.key));
    out.push_back({t.key, t.coef * ci.pow(m[0]) * c.pow(m[1])});
  }
  return Vec::from_terms(std::move(out));
}

Sigma::Sigma(Uqsl2 const& source, Uqsl2 const& target) : src_(&source), dst_(&target) {
  if (source.n() != target.n()) throw std::invalid_argument("sigma: mismatched N");
  if ((source.power() + target.power()) % source.n() != 0)
    throw std::invalid_argument("sigma: source must be built at q^-1");
  auto const& s = source.algebra();
  auto const& t = target.algebra();
  Vec k = target.K();
  Vec e = t.multiply(target.K(), target.F());
  Vec f = t.multiply(target.E(), target.K(-1));
  CycScalar qs = source.q();
  Vec ft = (qs - qs.inverse()) * t.multiply(k, f);
  image_.resize(s.dimension());
  for (int key = 0; key < s.dimension(); ++key) {
    auto m = s.mono_exps(s.key_mono(key));
    Vec img = t.power(k, s.group().exps(s.key_group(key))[0]);
    img = t.multiply(img, t.power(e, m[0]));
    img = t.multiply(img, t.power(ft, m[1]));
    image_[key] = img;
  }
}

Vec Sigma::operator()(Vec const& x) const {
  return linear_map(x, [&](int key) { return image_[key]; });
}

bool is_hopf_subalgebra(Subspace const& a) {
  auto const& h = a.algebra();
  int dim = h.dimension();
  for (auto const& row : a.rows()) {
    if (!a.contains(h.antipode(row))) return false;
    Vec d = h.comultiply(row);
    for (auto const& [right, left] : h.split_by_right(d))
      if (!a.contains(left)) return false;
    std::vector<std::vector<Term>> by_left(dim);
    for (auto const& t : d) by_left[t.key / dim].push_back({t.key % dim, t.coef});
    for (auto& terms : by_left)
      if (!terms.empty() && !a.contains(Vec::from_terms(std::move(terms)))) return false;
  }
  return true;
}

Datum rank_one_datum(CycContext const& field, RankOneData const& r) {
  if (field.order() != r.n) throw std::invalid_argument("rank-one datum: field order must be n");
  Datum d;
  d.group = AbelianGroup({r.n});
  d.g = {((r.m % r.n) + r.n) % r.n};
  d.chi = {{r.e}};
  d.lambda = {{CycScalar::zero(field)}};
  d.mu = {r.mu};
  validate_datum(field, d);
  return d;
}

int rank_one_n1(RankOneData const& d) {
  long e = (static_cast<long>(d.e) * d.m) % d.n;
  if (e < 0) e += d.n;
  return d.n / std::gcd(static_cast<int>(e), d.n);
}

}  // namespace qcsa
