#include "specgraph/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace specgraph {

namespace {

/// Vertex-split network: node 2w is w_in, 2w+1 is w_out. Every vertex gets an
/// in->out arc of capacity 1 and every edge {a,b} gets a_out->b_in and
/// b_out->a_in of capacity n. Flow runs from s_out to t_in.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : n_(g.order()), head_(2 * g.order(), -1) {
    for (int w = 0; w < n_; ++w) add_arc(2 * w, 2 * w + 1, 1);
    for (auto [a, b] : g.edges()) {
      add_arc(2 * a + 1, 2 * b, n_);
      add_arc(2 * b + 1, 2 * a, n_);
    }
    parent_.resize(2 * n_);
  }

  /// Max flow from s to t capped at `cap` augmentations.
  int flow(int s, int t, int cap) {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = arcs_[i].init;
    const int src = 2 * s + 1;
    const int dst = 2 * t;
    int total = 0;
    while (total < cap && augment(src, dst)) ++total;
    return total;
  }

  /// After flow(): vertices whose in-node is reachable from s in the residual
  /// network but whose out-node is not.
  std::vector<int> min_cut(int s) {
    std::vector<char> seen(2 * n_, 0);
    std::vector<int> stack{2 * s + 1};
    seen[2 * s + 1] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = 1;
          stack.push_back(arcs_[e].to);
        }
    }
    std::vector<int> cut;
    for (int w = 0; w < n_; ++w)
      if (w != s && seen[2 * w] && !seen[2 * w + 1]) cut.push_back(w);
    return cut;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
    int init;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap, cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment(int src, int dst) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::queue<int> q;
    q.push(src);
    parent_[src] = -2;
    while (!q.empty() && parent_[dst] == -1) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = arcs_[e].next) {
        const int v = arcs_[e].to;
        if (arcs_[e].cap > 0 && parent_[v] == -1) {
          parent_[v] = e;
          q.push(v);
        }
      }
    }
    if (parent_[dst] == -1) return false;
    for (int v = dst; v != src;) {
      const int e = parent_[v];
      arcs_[e].cap -= 1;
      arcs_[e ^ 1].cap += 1;
      v = arcs_[e ^ 1].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> parent_;
};

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

struct PairSearch {
  int kappa;
  int s = -1;
  int t = -1;
};

/// Minimum s-t separator size over the reduced pair set. Assumes g connected
/// and not complete.
PairSearch search_pairs(const Graph& g, SplitNetwork& net, int floor) {
  const int n = g.order();
  int u = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(u)) u = v;
  PairSearch best{g.degree(u)};
  auto consider = [&](int s, int t) {
    const int f = net.flow(s, t, best.kappa);
    if (best.s < 0 || f < best.kappa) best = {f, s, t};
    return best.kappa <= floor;
  };
  for (int w = 0; w < n; ++w)
    if (w != u && !g.adjacent(u, w) && consider(u, w)) return best;
  const auto nb = g.neighbors(u);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      if (!g.adjacent(nb[a], nb[b]) && consider(nb[a], nb[b])) return best;
  return best;
}

}  // namespace

int vertex_disjoint_paths(const Graph& g, int s, int t) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("vertex_disjoint_paths needs distinct non-adjacent ends");
  SplitNetwork net(g);
  return net.flow(s, t, g.order());
}

int connectivity_number(const Graph& g, int floor) {
  if (is_complete(g)) return g.order() - 1;
  if (!is_connected(g)) return 0;
  SplitNetwork net(g);
  return search_pairs(g, net, floor).kappa;
}

Connectivity vertex_connectivity(const Graph& g) {
  Connectivity out;
  if (is_complete(g)) {
    out.kappa = g.order() - 1;
    out.complete = true;
    return out;
  }
  if (!is_connected(g)) {
    out.kappa = 0;
    out.witness.side_components = connected_components(g);
    return out;
  }
  SplitNetwork net(g);
  const PairSearch best = search_pairs(g, net, -1);
  out.kappa = best.kappa;
  net.flow(best.s, best.t, g.order());
  out.witness.cut = net.min_cut(best.s);
  // Components of G - S, reported in original vertex ids.
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v)
    if (!std::binary_search(out.witness.cut.begin(), out.witness.cut.end(), v)) rest.push_back(v);
  for (const auto& comp : connected_components(induced_subgraph(g, rest))) {
    std::vector<int> mapped;
    for (int i : comp) mapped.push_back(rest[i]);
    out.witness.side_components.push_back(std::move(mapped));
  }
  if (static_cast<int>(out.witness.cut.size()) != out.kappa || out.witness.side_components.size() < 2)
    throw std::logic_error("vertex_connectivity: recovered cut does not match the flow value");
  return out;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_connected needs k >= 1");
  if (g.order() == k + 1) return is_complete(g);
  if (g.order() < k + 2) return false;
  return connectivity_number(g, k - 1) >= k;
}

}  // namespace specgraph
