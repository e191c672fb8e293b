#include "qcsa/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qcsa {

Vec HopfAlgebra::multiply(Vec const& a, Vec const& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc(dimension());
  for (auto const& x : a)
    for (auto const& y : b) acc.add(basis_product(x.key, y.key), x.coef * y.coef);
  return acc.take();
}

Vec HopfAlgebra::comultiply(Vec const& a) const {
  std::vector<Term> out;
  for (auto const& x : a)
    for (auto const& t : basis_coproduct(x.key)) out.push_back({t.key, x.coef * t.coef});
  return Vec::from_terms(std::move(out));
}

CycScalar HopfAlgebra::counit(Vec const& a) const {
  CycScalar r = CycScalar::zero(field());
  for (auto const& x : a) r += x.coef * basis_counit(x.key);
  return r;
}

Vec HopfAlgebra::antipode(Vec const& a) const {
  Accumulator acc(dimension());
  for (auto const& x : a) acc.add(basis_antipode(x.key), x.coef);
  return acc.take();
}

Vec HopfAlgebra::power(Vec const& a, long n) const {
  Vec r = one();
  for (long i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

std::string HopfAlgebra::format(Vec const& v) const {
  if (v.is_zero()) return "0";
  std::vector<Term> terms(v.begin(), v.end());
  auto const& pr = *key_order();
  std::sort(terms.begin(), terms.end(),
            [&](Term const& a, Term const& b) { return pr[a.key] > pr[b.key]; });
  std::ostringstream os;
  bool first = true;
  for (auto const& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coef << ") * " << key_name(t.key);
  }
  return os.str();
}

Vec HopfAlgebra::tensor_multiply(Vec const& s, Vec const& t) const {
  int d = dimension();
  std::vector<Term> out;
  for (auto const& x : s) {
    int a = x.key / d, b = x.key % d;
    for (auto const& y : t) {
      int c = y.key / d, e = y.key % d;
      Vec left = basis_product(a, c);
      if (left.is_zero()) continue;
      Vec right = basis_product(b, e);
      CycScalar coef = x.coef * y.coef;
      for (auto const& l : left)
        for (auto const& r : right) out.push_back({l.key * d + r.key, coef * l.coef * r.coef});
    }
  }
  return Vec::from_terms(std::move(out));
}

Vec HopfAlgebra::tensor(Vec const& a, Vec const& b) const {
  int d = dimension();
  std::vector<Term> out;
  for (auto const& x : a)
    for (auto const& y : b) out.push_back({x.key * d + y.key, x.coef * y.coef});
  return Vec::from_terms(std::move(out));
}

Vec HopfAlgebra::multiply_tensor(Vec const& t, bool antipode_left, bool antipode_right) const {
  int d = dimension();
  Accumulator acc(d);
  for (auto const& x : t) {
    Vec l = antipode_left ? basis_antipode(x.key / d) : Vec::unit(x.key / d);
    Vec r = antipode_right ? basis_antipode(x.key % d) : Vec::unit(x.key % d);
    acc.add(multiply(l, r), x.coef);
  }
  return acc.take();
}

Vec HopfAlgebra::comultiply_left(Vec const& t) const {
  int d = dimension();
  std::vector<Term> out;
  for (auto const& x : t) {
    int a = x.key / d, b = x.key % d;
    for (auto const& y : basis_coproduct(a)) out.push_back({y.key * d + b, x.coef * y.coef});
  }
  return Vec::from_terms(std::move(out));
}

Vec HopfAlgebra::comultiply_right(Vec const& t) const {
  int d = dimension();
  std::vector<Term> out;
  for (auto const& x : t) {
    int a = x.key / d, b = x.key % d;
    for (auto const& y : basis_coproduct(b)) out.push_back({a * d * d + y.key, x.coef * y.coef});
  }
  return Vec::from_terms(std::move(out));
}

std::vector<std::pair<int, Vec>> HopfAlgebra::split_by_right(Vec const& t) const {
  int d = dimension();
  std::map<int, std::vector<Term>> parts;
  for (auto const& x : t) parts[x.key % d].push_back({x.key / d, x.coef});
  std::vector<std::pair<int, Vec>> out;
  for (auto& [k, terms] : parts) out.push_back({k, Vec::from_terms(std::move(terms))});
  return out;
}

Vec random_element(HopfAlgebra const& alg, std::mt19937_64& rng, int terms) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    long a = static_cast<long>(rng() % 7) - 3;
    long e = static_cast<long>(rng() % alg.field().order());
    t.push_back({static_cast<int>(rng() % alg.dimension()),
                 CycScalar::q_power(alg.field(), e) * CycScalar(a)});
  }
  return Vec::from_terms(std::move(t));
}

std::string hopf_axiom_failure(HopfAlgebra const& alg, std::mt19937_64& rng, int samples) {
  int d = alg.dimension();
  for (int it = 0; it < samples; ++it) {
    Vec a = random_element(alg, rng, 3), b = random_element(alg, rng, 3), c = random_element(alg, rng, 2);
    if (alg.multiply(alg.multiply(a, b), c) != alg.multiply(a, alg.multiply(b, c))) return "associativity";
    Vec da = alg.comultiply(a);
    if (alg.comultiply(alg.multiply(a, b)) != alg.tensor_multiply(da, alg.comultiply(b)))
      return "Delta multiplicative";
    if (alg.comultiply_left(da) != alg.comultiply_right(da)) return "coassociativity";
    if (alg.counit(alg.multiply(a, b)) != alg.counit(a) * alg.counit(b)) return "counit multiplicative";
    Vec l, r;
    for (auto const& t : da) {
      l = Vec::axpy(l, t.coef * alg.basis_counit(t.key / d), Vec::unit(t.key % d));
      r = Vec::axpy(r, t.coef * alg.basis_counit(t.key % d), Vec::unit(t.key / d));
    }
    if (l != a || r != a) return "counit";
    Vec unit = alg.scalar(alg.counit(a));
    if (alg.multiply_tensor(da, true, false) != unit || alg.multiply_tensor(da, false, true) != unit)
      return "antipode";
    if (alg.antipode(alg.multiply(a, b)) != alg.multiply(alg.antipode(b), alg.antipode(a)))
      return "antipode anti-multiplicative";
  }
  return "";
}

}  // namespace qcsa
