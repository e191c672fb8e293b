#include <map>
#include <random>
#include <sstream>

#include "qcsa/workbench.hpp"

namespace qcsa {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool contained(Subspace const& a, Subspace const& b) {
  for (auto const& r : a.rows())
    if (!b.contains(r)) return false;
  return true;
}

}  // namespace

std::vector<LatticeEdge> const& figure_edges(int n) {
  static std::map<int, std::vector<LatticeEdge>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<LatticeEdge> e = {{"full", "KE"}, {"full", "KF"}, {"full", "pair"}, {"KE", "v"},
                                {"KF", "w"},    {"pair", "v"},  {"pair", "w"},    {"pair", "u"},
                                {"v", "k"},     {"E", "k"},     {"F", "k"},       {"w", "k"},
                                {"u", "k"}};
  // The drawn <K^r, E>, <K^r, F~> and <K^r> stand for 1 < r < N; only the
  // instances that are covering relations in the divisor order are listed.
  for (int r : divisors(n)) {
    if (r == 1 || r == n) continue;
    std::string s = ":" + std::to_string(r);
    if (is_prime(r)) {
      e.push_back({"KE", "KrE" + s});
      e.push_back({"KF", "KrF" + s});
    }
    e.push_back({"KrE" + s, "Kr" + s});
    e.push_back({"KrF" + s, "Kr" + s});
    if (is_prime(n / r)) {
      e.push_back({"KrE" + s, "E"});
      e.push_back({"KrF" + s, "F"});
      e.push_back({"Kr" + s, "k"});
    }
  }
  return cache.emplace(n, std::move(e)).first->second;
}

Lattice build_lattice(Uqsl2 const& uq, std::uint64_t seed) {
  int n = uq.n();
  auto const& f = uq.field();
  auto const& h = uq.algebra();
  std::mt19937_64 rng(seed);
  CycScalar zero = CycScalar::zero(f);
  CycScalar lambda = sample_scalar(f, rng, true);
  CycScalar mu = ((CycScalar(1) - uq.q() * uq.q()) * lambda).inverse();
  CycScalar b = sample_scalar(f, rng, true);

  Lattice lat;
  auto add = [&](std::string id, std::string label, FamilySpec spec) {
    lat.nodes.push_back({std::move(id), std::move(label), spec, 0, false});
  };
  add("full", "u_q(sl2)", {Family::Full, 1, zero, zero});
  add("KE", "<K, E>", {Family::BorelE, 1, zero, zero});
  add("KF", "<K, F~>", {Family::BorelF, 1, zero, zero});
  add("pair", "<v, w>", {Family::Pair, 1, lambda, mu});
  for (int r : divisors(n)) {
    if (r == 1 || r == n) continue;
    std::string rs = std::to_string(r);
    add("KrE:" + rs, "<K^" + rs + ", E>", {Family::BorelE, r, zero, zero});
    add("KrF:" + rs, "<K^" + rs + ", F~>", {Family::BorelF, r, zero, zero});
  }
  add("v", "<v>", {Family::Line, 1, zero, lambda});
  add("E", "<E>", {Family::BorelE, n, zero, zero});
  add("F", "<F~>", {Family::BorelF, n, zero, zero});
  add("w", "<w>", {Family::FLine, 1, mu, zero});
  // v + b w = E + b F~ + (lambda + b mu) K
  add("u", "<v + b w>", {Family::Line, 1, b, lambda + b * mu});
  for (int r : divisors(n)) {
    if (r == n) continue;
    std::string rs = std::to_string(r);
    add("Kr:" + rs, r == 1 ? "<K>" : "<K^" + rs + ">", {Family::GroupPower, r, zero, zero});
  }
  add("k", "k", {Family::GroupPower, n, zero, zero});

  std::vector<Subspace> spaces;
  for (auto& node : lat.nodes) {
    spaces.push_back(span_closure(h, family_generators(uq, node.spec)));
    node.dimension = spaces.back().dimension();
    node.hopf = is_hopf_subalgebra(spaces.back());
  }
  std::size_t m = spaces.size();
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && spaces[j].dimension() < spaces[i].dimension())
        below[i][j] = contained(spaces[j], spaces[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k)
        if (below[i][k] && below[k][j]) cover = false;
      if (cover) lat.edges.push_back({lat.nodes[i].id, lat.nodes[j].id});
    }
  return lat;
}

std::string lattice_dot(Lattice const& lattice) {
  std::ostringstream os;
  os << "digraph csa {\n  rankdir=TB;\n  node [shape=box];\n";
  for (auto const& node : lattice.nodes)
    os << "  \"" << node.id << "\" [label=\"" << node.label << (node.hopf ? " *" : "")
       << "\", tooltip=\"" << family_label(node.spec) << "\", dim=" << node.dimension << "];\n";
  for (auto const& e : lattice.edges) os << "  \"" << e.upper << "\" -> \"" << e.lower << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcsa
