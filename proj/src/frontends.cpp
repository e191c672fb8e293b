// Text output for the table, minpoly and dagger commands.
#include <iomanip>
#include <random>
#include <sstream>

#include "qcsa/oqsl2.hpp"
#include "qcsa/workbench.hpp"
#include "suites.hpp"

namespace qcsa {

namespace {

struct Claimed {
  std::vector<std::string> names;
  std::vector<Vec> gens;
};

// The stated generators of A^dagger for each family.
Claimed claimed_dagger_generators(OqAction const& act, FamilySpec const& s) {
  auto const& o = act.oq();
  int n = o.n();
  CycScalar q = o.q();
  Vec t = o.multiply(o.c(), o.d_inv()), ainv_b = o.multiply(o.a_inv(), o.b());
  switch (s.kind) {
    case Family::Full:
      return {{"1"}, {o.one()}};
    case Family::GroupPower:
      return {{"a^" + std::to_string(n / s.r), "a^-1 b", "ac"},
              {o.power(o.a(), n / s.r), ainv_b, o.multiply(o.a(), o.c())}};
    case Family::BorelE:
      if (s.r == n) return {{"c", "d"}, {o.c(), o.d()}};
      return {{"d^" + std::to_string(n / s.r), "cd^-1"}, {o.power(o.d(), n / s.r), t}};
    case Family::BorelF:
      if (s.r == n) return {{"a", "b"}, {o.a(), o.b()}};
      return {{"a^" + std::to_string(n / s.r), "a^-1 b"}, {o.power(o.a(), n / s.r), ainv_b}};
    case Family::Pair:
      return {{"w"}, {w_generator(act, s.p1, s.p2).w}};
    case Family::Line: {
      auto yz = yz_alpha_beta(act, s.p1, s.p2);
      return {{"y_{alpha,beta}", "z_{alpha,beta}"}, {yz.y, yz.z}};
    }
    case Family::FLine:
      return {{"a^-1 b", "a^2 - q^2 beta ac"},
              {ainv_b, o.power(o.a(), 2) - q * q * s.p1 * o.multiply(o.a(), o.c())}};
  }
  return {};
}

int claimed_dagger_dimension(int n, FamilySpec const& s) {
  return n * n * n / expected_dimension(n, s);
}

std::string group_text(std::vector<int> const& g) {
  if (g.size() == 1) return "{1}";
  return "order " + std::to_string(g.size());
}

std::string yes(bool b) { return b ? "yes" : "NO"; }

}  // namespace

std::string render_tables(int n, std::uint64_t seed) {
  Uqsl2 uq(n);
  Oqsl2 oq(n);
  OqAction act(oq, uq);
  auto const& h = uq.algebra();
  std::mt19937_64 rng(seed);
  auto instances = suites::family_instances(uq, rng, 1);
  std::ostringstream os;
  os << "Right coideal subalgebras of u_q(sl2), N = " << n << "\n\n";
  os << std::left << std::setw(40) << "A" << std::setw(10) << "dim" << std::setw(10) << "table"
     << std::setw(14) << "A cap Gamma" << std::setw(14) << "table" << "match\n";
  for (auto const& s : instances) {
    auto a = family_subalgebra(uq, s);
    bool ok = family_mismatch(uq, s, a).empty();
    os << std::setw(40) << family_label(s) << std::setw(10) << a.space.dimension()
       << std::setw(10) << expected_dimension(n, s) << std::setw(14) << group_text(a.group_part)
       << std::setw(14) << group_text(expected_group_part(uq, s)) << yes(ok) << "\n";
  }
  os << "\nRight coideal subalgebras of O_q(SL2), N = " << n << "\n\n";
  os << std::setw(40) << "A" << std::setw(12) << "dim A^dag" << std::setw(10) << "table"
     << std::setw(8) << "match" << "generators\n";
  for (auto const& s : instances) {
    auto gens = family_generators(uq, s);
    auto d = dagger(act, span_closure(h, gens), gens);
    auto cl = claimed_dagger_generators(act, s);
    bool gen_ok = span_closure(oq, cl.gens) == d.space;
    bool dim_ok = d.space.dimension() == claimed_dagger_dimension(n, s);
    os << std::setw(40) << family_label(s) + "^dag" << std::setw(12) << d.space.dimension()
       << std::setw(10) << claimed_dagger_dimension(n, s) << std::setw(8) << yes(dim_ok) << "<"
       << suites::join_list(cl.names, ", ") << "> " << yes(gen_ok) << "\n";
  }
  return os.str();
}

std::string minpoly_text(int n, std::string const& alpha_text, std::string const& beta_text) {
  Uqsl2 uq(n);
  CycScalar alpha = parse_scalar(alpha_text, uq.field());
  CycScalar beta = parse_scalar(beta_text, uq.field());
  Polynomial phi = phi_polynomial(uq, alpha, beta);
  Polynomial m = minimal_polynomial(uq.algebra(), uq.u(alpha, beta));
  auto d = discriminant(uq, alpha, beta);
  bool ss = semisimplicity_check(uq, alpha, beta);
  std::ostringstream os;
  os << "u = E + (" << format_scalar(alpha) << ") F~ + (" << format_scalar(beta) << ") K, N = " << n
     << "\n";
  os << "phi(X)             = " << phi.str() << "\n";
  os << "minimal polynomial = " << m.str() << "\n";
  os << "equal              = " << yes(m == phi) << "\n";
  os << "D(alpha, beta)     = " << format_scalar(d.value) << "\n";
  os << "gcd(phi, phi')     = " << gcd(phi, phi.derivative()).monic().str() << "\n";
  os << "semisimple         = " << (ss ? "yes" : "no") << "\n";
  return os.str();
}

std::string dagger_text(int n, std::string const& family) {
  Uqsl2 uq(n);
  Oqsl2 oq(n);
  OqAction act(oq, uq);
  auto const& h = uq.algebra();
  FamilySpec s = parse_family(family, uq.field());
  validate_family(uq, s);
  auto gens = family_generators(uq, s);
  auto a = family_subalgebra(uq, s);
  auto d = dagger(act, a.space, gens);
  auto cl = claimed_dagger_generators(act, s);
  std::ostringstream os;
  os << "A = " << family_label(s) << ", N = " << n << "\n";
  os << "dim A = " << a.space.dimension() << ", dim A^dagger = " << d.space.dimension()
     << " (product " << a.space.dimension() * d.space.dimension() << ")\n";
  os << "right integral of A: " << h.format(d.integral) << "\n";
  os << "generators of A^dagger:\n";
  for (std::size_t i = 0; i < cl.gens.size(); ++i)
    os << "  " << cl.names[i] << " = " << oq.format(cl.gens[i]) << "\n";
  bool match = span_closure(oq, cl.gens) == d.space;
  os << "identity " << family_label(s) << "^dagger = <" << suites::join_list(cl.names, ", ")
     << ">: " << (match ? "holds" : "FAILS") << "\n";
  return os.str();
}

}  // namespace qcsa
