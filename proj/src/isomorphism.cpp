#include "specgraph/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace specgraph {

namespace {

using Signature = std::vector<int>;  // degree followed by sorted neighbour degrees

std::vector<Signature> signatures(const Graph& g) {
  const auto deg = degree_sequence(g);
  std::vector<Signature> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    out[v].push_back(deg[v]);
    for (int w : g.neighbors(v)) out[v].push_back(deg[w]);
    std::sort(out[v].begin() + 1, out[v].end());
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h) : g_(g), h_(h), sg_(signatures(g)), sh_(signatures(h)) {
    const int n = g.order();
    map_.assign(n, -1);
    used_.assign(n, false);
    // Most constrained first: rarest signature, then highest degree.
    order_.resize(n);
    for (int v = 0; v < n; ++v) order_[v] = v;
    auto freq = [&](int v) { return std::count(sg_.begin(), sg_.end(), sg_[v]); };
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const auto fa = freq(a), fb = freq(b);
      return fa != fb ? fa < fb : sg_[a][0] > sg_[b][0];
    });
  }

  bool prefilter() const {
    auto a = sg_, b = sh_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < h_.order(); ++w) {
      if (used_[w] || sh_[w] != sg_[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      used_[w] = false;
      map_[v] = -1;
    }
    return false;
  }

  std::vector<int> mapping() const { return map_; }

 private:
  const Graph& g_;
  const Graph& h_;
  std::vector<Signature> sg_, sh_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismMaxOrder || h.order() > kIsomorphismMaxOrder)
    throw std::invalid_argument("find_isomorphism: order exceeds the backtracking budget of " +
                                std::to_string(kIsomorphismMaxOrder));
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  Matcher m(g, h);
  if (!m.prefilter()) return std::nullopt;
  if (!m.search(0)) return std::nullopt;
  return m.mapping();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace specgraph
