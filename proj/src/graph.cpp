#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>

namespace specgraph {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_upper_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) g.set_bit(i, j, true);
  return g;
}

std::uint64_t Graph::upper_mask() const {
  if (n_ > 11) throw std::invalid_argument("upper_mask needs order <= 11");
  std::uint64_t mask = 0;
  int bit = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (adjacent(i, j)) mask |= std::uint64_t{1} << bit;
  return mask;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

void Graph::set_bit(int u, int v, bool on) {
  auto& a = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
  auto& b = bits_[static_cast<std::size_t>(v) * words_ + u / 64];
  const std::uint64_t ma = std::uint64_t{1} << (v % 64);
  const std::uint64_t mb = std::uint64_t{1} << (u % 64);
  if (on) {
    a |= ma;
    b |= mb;
  } else {
    a &= ~ma;
    b &= ~mb;
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  set_bit(u, v, true);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  set_bit(u, v, false);
}

namespace {

/// ORs the bit range [lo, hi) into a packed row.
void set_range(std::uint64_t* row, int lo, int hi) {
  while (lo < hi) {
    const int w = lo / 64;
    const int b = lo % 64;
    const int take = std::min(64 - b, hi - lo);
    const std::uint64_t m = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1) << b;
    row[w] |= m;
    lo += take;
  }
}

}  // namespace

void Graph::connect_ranges(int r0, int r1, int c0, int c1) {
  if (r0 < 0 || c0 < 0 || r1 > n_ || c1 > n_ || r0 > r1 || c0 > c1)
    throw std::out_of_range("connect_ranges: bad vertex range");
  for (int u = r0; u < r1; ++u) set_range(bits_.data() + static_cast<std::size_t>(u) * words_, c0, c1);
  for (int v = c0; v < c1; ++v) set_range(bits_.data() + static_cast<std::size_t>(v) * words_, r0, r1);
  // Clear any diagonal bits introduced by overlapping ranges.
  for (int v = std::max(r0, c0); v < std::min(r1, c1); ++v)
    bits_[static_cast<std::size_t>(v) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

void Graph::overlay(const Graph& h, int offset) {
  if (offset < 0 || offset + h.order() > n_) throw std::out_of_range("overlay: graph does not fit");
  const int shift = offset % 64;
  const int word_off = offset / 64;
  for (int v = 0; v < h.order(); ++v) {
    std::uint64_t* dst = bits_.data() + static_cast<std::size_t>(v + offset) * words_;
    auto src = h.row(v);
    for (int w = 0; w < h.words_per_row(); ++w) {
      if (!src[w]) continue;
      dst[w + word_off] |= src[w] << shift;
      if (shift && w + word_off + 1 < words_) dst[w + word_off + 1] |= src[w] >> (64 - shift);
    }
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

ExtremalParams ExtremalParams::make(int n, int k, int delta) {
  ExtremalParams p{n, k, delta};
  p.validate();
  return p;
}

void ExtremalParams::validate() const {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("invalid extremal parameters (n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + ", delta=" + std::to_string(delta) +
                                "): violates " + what);
  };
  if (k < 1) fail("1 <= k");
  if (delta < k) fail("k <= delta");
  if (delta > n - 2) fail("delta <= n-2 (clique B of order n-delta-1 would be empty)");
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1 (empty graph requested)");
  Graph g(n);
  g.connect_ranges(0, n, 0, n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  Graph out(g.order() + h.order());
  out.overlay(g, 0);
  out.overlay(h, offset);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  out.connect_ranges(0, g.order(), g.order(), out.order());
  return out;
}

Graph extremal_graph(const ExtremalParams& p) {
  p.validate();
  return join(complete(p.join_size()), disjoint_union(complete(p.small_clique()), complete(p.large_clique())));
}

Graph shiu_graph(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("shiu_graph needs 1 <= k <= n-1 (n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + ")");
  if (k == n - 1) return complete(n);
  return extremal_graph(ExtremalParams::make(n, k, k));
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  // Bitset BFS: frontier expansion by OR-ing rows.
  const int words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0), frontier(words, 0), next(words);
  seen[0] = frontier[0] = 1;
  bool grew = true;
  while (grew) {
    std::fill(next.begin(), next.end(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = frontier[w];
      while (word) {
        const int v = w * 64 + std::countr_zero(word);
        word &= word - 1;
        auto r = g.row(v);
        for (int x = 0; x < words; ++x) next[x] |= r[x];
      }
    }
    grew = false;
    for (int w = 0; w < words; ++w) {
      frontier[w] = next[w] & ~seen[w];
      if (frontier[w]) grew = true;
      seen[w] |= frontier[w];
    }
  }
  int count = 0;
  for (auto w : seen) count += std::popcount(w);
  return count == g.order();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced_subgraph needs a nonempty vertex set");
  std::vector<int> vs(vertices.begin(), vertices.end());
  for (int v : vs)
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("induced_subgraph vertex set has duplicates");
  Graph out(static_cast<int>(vs.size()));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (g.adjacent(vs[a], vs[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

Graph delete_vertices(const Graph& g, std::span<const int> vertices) {
  std::vector<bool> drop(g.order(), false);
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    drop[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto to_int = [&](const std::string& t) {
      std::size_t used = 0;
      long value = -1;
      try {
        value = std::stol(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || value < 0 || value > 1'000'000)
        throw ParseError("line " + std::to_string(lineno) + ": expected a vertex id, got '" + t + "'");
      return static_cast<int>(value);
    };
    if (tok.size() == 1) {
      if (declared >= 0 || !edges.empty())
        throw ParseError("line " + std::to_string(lineno) + ": order line must come first and only once");
      declared = to_int(tok[0]);
      if (declared < 1) throw ParseError("line " + std::to_string(lineno) + ": order must be positive");
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v', got " + std::to_string(tok.size()) +
                       " fields");
    const int u = to_int(tok[0]);
    const int v = to_int(tok[1]);
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + std::to_string(u));
    if (declared >= 0 && std::max(u, v) >= declared)
      throw ParseError("line " + std::to_string(lineno) + ": vertex id exceeds declared order");
    max_id = std::max({max_id, u, v});
    edges.emplace_back(u, v);
  }
  const int n = declared >= 0 ? declared : max_id + 1;
  if (n < 1) throw ParseError("edge list is empty");
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace specgraph
