#include "specgraph/rewiring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "specgraph/spectral.hpp"

namespace specgraph {

void RewireSpec::validate(const Graph& g) const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("invalid rewire spec: " + what); };
  if (pivot < 0 || pivot >= g.order()) fail("pivot " + std::to_string(pivot) + " out of range");
  for (int d : del_set) {
    if (d < 0 || d >= g.order()) fail("del_set vertex " + std::to_string(d) + " out of range");
    if (!g.adjacent(pivot, d)) fail("del_set vertex " + std::to_string(d) + " is not a neighbour of the pivot");
  }
  for (int a : add_set) {
    if (a < 0 || a >= g.order()) fail("add_set vertex " + std::to_string(a) + " out of range");
    if (a == pivot) fail("add_set contains the pivot");
    if (g.adjacent(pivot, a)) fail("add_set vertex " + std::to_string(a) + " is already a neighbour of the pivot");
  }
  auto dup = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
  };
  if (dup(del_set)) fail("del_set has duplicates");
  if (dup(add_set)) fail("add_set has duplicates");
  for (int d : del_set)
    if (std::find(add_set.begin(), add_set.end(), d) != add_set.end())
      fail("vertex " + std::to_string(d) + " is in both del_set and add_set");
}

std::string RewireSpec::encode() const {
  std::ostringstream out;
  out << pivot << '|';
  for (std::size_t i = 0; i < del_set.size(); ++i) out << (i ? "," : "") << del_set[i];
  out << '|';
  for (std::size_t i = 0; i < add_set.size(); ++i) out << (i ? "," : "") << add_set[i];
  return out.str();
}

RewireSpec RewireSpec::decode(const std::string& text) {
  const auto a = text.find('|');
  const auto b = a == std::string::npos ? a : text.find('|', a + 1);
  if (b == std::string::npos) throw ParseError("rewire spec needs the form v|del|add, got '" + text + "'");
  auto ints = [&](const std::string& part) {
    std::vector<int> out;
    std::istringstream in(part);
    for (std::string tok; std::getline(in, tok, ',');) {
      if (tok.empty()) continue;
      try {
        out.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("rewire spec: bad index '" + tok + "'");
      }
    }
    return out;
  };
  RewireSpec s;
  try {
    s.pivot = std::stoi(text.substr(0, a));
  } catch (const std::exception&) {
    throw ParseError("rewire spec: bad pivot in '" + text + "'");
  }
  s.del_set = ints(text.substr(a + 1, b - a - 1));
  s.add_set = ints(text.substr(b + 1));
  return s;
}

Graph rewire(const Graph& g, const RewireSpec& s) {
  s.validate(g);
  Graph out = g;
  for (int d : s.del_set) out.remove_edge(s.pivot, d);
  for (int a : s.add_set) out.add_edge(s.pivot, a);
  return out;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::lt: return "lt";
    case Relation::eq: return "eq";
    case Relation::gt: return "gt";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
    case Verdict::premise_not_met: return "premise_not_met";
  }
  return "?";
}

namespace {

double mass(const std::vector<double>& x, const std::vector<int>& set) {
  double s = 0.0;
  for (int v : set) s += x[v];
  return s;
}

Relation relate(double a, double b, double tol) {
  if (std::abs(a - b) <= tol) return Relation::eq;
  return a < b ? Relation::lt : Relation::gt;
}

}  // namespace

PerronSums perron_sum_test(const Graph& g, const RewireSpec& s, double tol) {
  s.validate(g);
  const PerronPair pp = perron(g);
  PerronSums out;
  out.sum_del = mass(pp.vec, s.del_set);
  out.sum_add = mass(pp.vec, s.add_set);
  out.relation = relate(out.sum_del, out.sum_add, tol);
  return out;
}

MonotonicityReport verify_monotonicity(const Graph& g, const RewireSpec& s, const RewireTolerances& tol) {
  MonotonicityReport r;
  const Graph h = rewire(g, s);
  const PerronPair x = perron(g);
  r.rho_before = x.rho;
  r.sum_del = mass(x.vec, s.del_set);
  r.sum_add = mass(x.vec, s.add_set);
  // x^T (A(G*) - A(G)) x = 2 x_v (sum_add - sum_del).
  const double lhs = quadratic_form(h, x.vec) - quadratic_form(g, x.vec);
  const double rhs = 2.0 * x.vec[s.pivot] * (r.sum_add - r.sum_del);
  r.quad_form_residual = std::abs(lhs - rhs);

  if (!is_connected(h)) {
    r.verdict = Verdict::skip;
    r.reason = "rewired graph is disconnected";
    return r;
  }
  r.rho_after = perron(h).rho;
  if (r.sum_del > r.sum_add) {
    r.verdict = Verdict::premise_not_met;
    r.reason = "sum_del > sum_add";
    return r;
  }
  r.verdict = Verdict::pass;
  if (r.rho_before > r.rho_after + tol.weak) {
    r.verdict = Verdict::fail;
    r.reason = "rho decreased although sum_del <= sum_add";
  } else if (r.sum_add - r.sum_del > tol.premise_margin && !(r.rho_before < r.rho_after - tol.strict)) {
    r.verdict = Verdict::fail;
    r.reason = "strict premise but rho did not strictly increase";
  }
  return r;
}

CorollaryReport corollary_check(const Graph& g, const RewireSpec& s, const RewireTolerances& tol) {
  CorollaryReport r;
  const Graph h = rewire(g, s);
  if (!is_connected(h)) {
    r.verdict = Verdict::skip;
    r.reason = "rewired graph is disconnected";
    return r;
  }
  const PerronPair x = perron(g);
  r.sum_del_before = mass(x.vec, s.del_set);
  r.sum_add_before = mass(x.vec, s.add_set);
  if (r.sum_del_before > r.sum_add_before) {
    r.verdict = Verdict::premise_not_met;
    r.reason = "sum_del > sum_add for the original Perron vector";
    return r;
  }
  const PerronPair y = perron(h);
  r.sum_del_after = mass(y.vec, s.del_set);
  r.sum_add_after = mass(y.vec, s.add_set);
  r.verdict = Verdict::pass;
  if (r.sum_add_after < r.sum_del_after - tol.weak) {
    r.verdict = Verdict::fail;
    r.reason = "rewired Perron vector has sum_add < sum_del";
  } else if (r.sum_add_before - r.sum_del_before > tol.premise_margin && !(r.sum_add_after > r.sum_del_after)) {
    r.verdict = Verdict::fail;
    r.reason = "strict premise but rewired sums are not strictly ordered";
  }
  return r;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

RewireInstance sample_rewire_instance(std::mt19937_64& rng, int max_order) {
  if (max_order < 3) throw std::invalid_argument("sample_rewire_instance needs max_order >= 3");
  std::uniform_int_distribution<int> order(3, max_order);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  while (true) {
    const int n = order(rng);
    Graph g = random_connected_graph(rng, n, density(rng));
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<int> nbrs = g.neighbors(v);
    std::vector<int> non;
    for (int w = 0; w < n; ++w)
      if (w != v && !g.adjacent(v, w)) non.push_back(w);
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    std::shuffle(non.begin(), non.end(), rng);
    const auto k = std::uniform_int_distribution<std::size_t>(0, nbrs.size())(rng);
    const auto l = std::uniform_int_distribution<std::size_t>(0, non.size())(rng);
    if (k + l == 0) continue;
    RewireSpec s{v, {nbrs.begin(), nbrs.begin() + static_cast<std::ptrdiff_t>(k)},
                 {non.begin(), non.begin() + static_cast<std::ptrdiff_t>(l)}};
    std::sort(s.del_set.begin(), s.del_set.end());
    std::sort(s.add_set.begin(), s.add_set.end());
    if (!is_connected(rewire(g, s))) continue;
    return {std::move(g), std::move(s)};
  }
}

}  // namespace specgraph
