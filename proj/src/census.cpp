#include "specgraph/census.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "specgraph/connectivity.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/isomorphism.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

ClassSpec ClassSpec::make(int n, int k, int delta) {
  ClassSpec c{n, k, delta};
  c.validate();
  return c;
}

void ClassSpec::validate() const {
  if (k < 1 || delta < k || delta > n - 2)
    throw std::invalid_argument("class spec needs 1 <= k <= delta <= n-2 (n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + ", delta=" + std::to_string(delta) + ")");
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > kCensusMaxOrder) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 8");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

LabeledGraphStream::LabeledGraphStream(int n, std::uint64_t begin)
    : LabeledGraphStream(n, begin, labeled_graph_count(n)) {}

LabeledGraphStream::LabeledGraphStream(int n, std::uint64_t begin, std::uint64_t end)
    : n_(n), pos_(begin), end_(std::min(end, labeled_graph_count(n))) {}

std::optional<Graph> LabeledGraphStream::next() {
  if (pos_ >= end_) return std::nullopt;
  return Graph::from_upper_mask(n_, pos_++);
}

LabeledGraphStream enumerate_labeled(int n, std::uint64_t begin) { return LabeledGraphStream(n, begin); }

bool in_class(const Graph& g, const ClassSpec& c) {
  if (g.order() != c.n) return false;
  if (min_degree(g) < c.delta) return false;
  if (!is_connected(g)) return false;
  return connectivity_number(g, c.k) <= c.k;
}

namespace {

struct Target {
  int k;
  int min_degree;
};

struct BandEntry {
  std::uint64_t mask;
  double rho;
};

struct Accumulator {
  std::uint64_t count = 0;
  double max = -std::numeric_limits<double>::infinity();
  std::vector<BandEntry> band;
  std::size_t compact_at = 64;

  double floor(double width) const { return max - width; }

  void offer(std::uint64_t mask, double rho, double width) {
    if (rho < max - width) return;
    max = std::max(max, rho);
    band.push_back({mask, rho});
    if (band.size() >= compact_at) {
      compact(width);
      compact_at = std::max<std::size_t>(64, 2 * band.size());
    }
  }

  void compact(double width) {
    const double lo = max - width;
    std::erase_if(band, [&](const BandEntry& e) { return e.rho < lo; });
  }
};

/// Per-vertex masks of the upper-triangle bits touching that vertex.
std::vector<std::uint64_t> incidence_masks(int n) {
  std::vector<std::uint64_t> m(n, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      m[i] |= std::uint64_t{1} << bit;
      m[j] |= std::uint64_t{1} << bit;
    }
  return m;
}

std::vector<Accumulator> scan_range(int n, std::span<const Target> targets, std::uint64_t begin, std::uint64_t end,
                                    double width) {
  std::vector<Accumulator> acc(targets.size());
  const auto inc = incidence_masks(n);
  int need_degree = std::numeric_limits<int>::max();
  int max_k = 0;
  for (const auto& t : targets) {
    need_degree = std::min(need_degree, t.min_degree);
    max_k = std::max(max_k, t.k);
  }
  need_degree = std::max(need_degree, n > 1 ? 1 : 0);

  for (std::uint64_t mask = begin; mask < end; ++mask) {
    int dmin = n;
    for (int v = 0; v < n && dmin >= need_degree; ++v) dmin = std::min(dmin, std::popcount(mask & inc[v]));
    if (dmin < need_degree) continue;
    const Graph g = Graph::from_upper_mask(n, mask);
    if (!is_connected(g)) continue;
    const int kappa = connectivity_number(g, -1);
    double rho = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (dmin < targets[t].min_degree || kappa > targets[t].k) continue;
      ++acc[t].count;
      if (std::isnan(rho)) rho = perron(g).rho;
      acc[t].offer(mask, rho, width);
    }
  }
  for (auto& a : acc) a.compact(width);
  return acc;
}

std::vector<Accumulator> sharded_scan(int n, std::span<const Target> targets, const CensusOptions& opts) {
  const std::uint64_t total = labeled_graph_count(n);
  const unsigned shards = std::max(1U, opts.shards);
  std::vector<std::vector<Accumulator>> parts(shards);
  {
    std::vector<std::jthread> workers;
    for (unsigned s = 0; s < shards; ++s) {
      const std::uint64_t lo = total / shards * s + std::min<std::uint64_t>(s, total % shards);
      const std::uint64_t hi = lo + total / shards + (s < total % shards ? 1 : 0);
      workers.emplace_back([&, s, lo, hi] { parts[s] = scan_range(n, targets, lo, hi, opts.band); });
    }
  }
  // Associative merge: sum counts, take the global max, keep the band of the
  // global max, order by mask.
  std::vector<Accumulator> merged(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    auto& m = merged[t];
    for (const auto& part : parts) {
      m.count += part[t].count;
      m.max = std::max(m.max, part[t].max);
      m.band.insert(m.band.end(), part[t].band.begin(), part[t].band.end());
    }
    m.compact(opts.band);
    std::sort(m.band.begin(), m.band.end(), [](const BandEntry& a, const BandEntry& b) { return a.mask < b.mask; });
  }
  return merged;
}

/// Exact resolution of the band: group by characteristic polynomial, keep the
/// polynomials with the largest root, then one graph per isomorphism class.
void resolve_band(int n, const Accumulator& acc, CensusResult& out) {
  out.class_size = acc.count;
  out.band_size = acc.band.size();
  if (acc.band.empty()) return;

  struct Group {
    IntPoly poly;
    std::vector<std::uint64_t> masks;
  };
  std::vector<Group> groups;
  for (const auto& e : acc.band) {
    IntPoly p = int_charpoly(Graph::from_upper_mask(n, e.mask));
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& gr) { return gr.poly == p; });
    if (it == groups.end()) {
      groups.push_back({std::move(p), {e.mask}});
    } else {
      it->masks.push_back(e.mask);
    }
  }
  std::vector<const Group*> best{&groups.front()};
  for (std::size_t i = 1; i < groups.size(); ++i) {
    switch (compare_charpoly_roots(groups[i].poly, best.front()->poly)) {
      case RhoOrder::greater: best = {&groups[i]}; break;
      case RhoOrder::equal_root:
      case RhoOrder::equal_poly: best.push_back(&groups[i]); break;
      case RhoOrder::less: break;
    }
  }
  std::vector<std::uint64_t> masks;
  for (const Group* gr : best) masks.insert(masks.end(), gr->masks.begin(), gr->masks.end());
  std::sort(masks.begin(), masks.end());
  for (std::uint64_t mask : masks) {
    Graph g = Graph::from_upper_mask(n, mask);
    const bool seen = std::any_of(out.maximizers.begin(), out.maximizers.end(),
                                  [&](const Graph& rep) { return is_isomorphic(rep, g); });
    if (!seen) out.maximizers.push_back(std::move(g));
  }
  out.max_rho = perron(out.maximizers.front()).rho;
  out.unique = out.maximizers.size() == 1;
}

void check_order(int n, const CensusOptions& opts) {
  if (n < 3 || n > kCensusMaxOrder) throw std::invalid_argument("census supports orders 3..8, got " + std::to_string(n));
  if (n == kCensusMaxOrder && !opts.allow_order8)
    throw std::invalid_argument("census at order 8 scans 2^28 graphs; enable allow_order8 explicitly");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<CensusResult> run_census_batch(int n, std::span<const ClassSpec> classes, const CensusOptions& opts) {
  check_order(n, opts);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Target> targets;
  for (const auto& c : classes) {
    c.validate();
    if (c.n != n) throw std::invalid_argument("run_census_batch: class order differs from batch order");
    targets.push_back({c.k, c.delta});
  }
  const auto acc = sharded_scan(n, targets, opts);
  const double scan_time = seconds_since(t0);
  std::vector<CensusResult> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto t1 = std::chrono::steady_clock::now();
    out[i].spec = classes[i];
    out[i].graphs_scanned = labeled_graph_count(n);
    resolve_band(n, acc[i], out[i]);
    if (!out[i].maximizers.empty()) {
      const Graph ref = extremal_graph(ExtremalParams::make(classes[i].n, classes[i].k, classes[i].delta));
      out[i].matches_extremal = is_isomorphic(out[i].maximizers.front(), ref);
    }
    out[i].elapsed_seconds = scan_time / static_cast<double>(classes.size()) + seconds_since(t1);
  }
  return out;
}

CensusResult run_census(const ClassSpec& c, const CensusOptions& opts) {
  return run_census_batch(c.n, std::span<const ClassSpec>(&c, 1), opts).front();
}

CensusResult verify_shiu(int n, int k, const CensusOptions& opts) {
  check_order(n, opts);
  if (k < 1 || k > n - 1) throw std::invalid_argument("verify_shiu needs 1 <= k <= n-1");
  const auto t0 = std::chrono::steady_clock::now();
  const Target target{k, 1};
  const auto acc = sharded_scan(n, std::span<const Target>(&target, 1), opts);
  CensusResult out;
  out.spec = ClassSpec{n, k, k};
  out.degree_unconstrained = true;
  out.graphs_scanned = labeled_graph_count(n);
  resolve_band(n, acc.front(), out);
  if (!out.maximizers.empty()) out.matches_extremal = is_isomorphic(out.maximizers.front(), shiu_graph(n, k));
  out.elapsed_seconds = seconds_since(t0);
  return out;
}

LemmaReport verify_lemma(int n, int k, const CensusOptions& opts) {
  check_order(n, opts);
  if (k < 1) throw std::invalid_argument("verify_lemma needs k >= 1");
  LemmaReport r;
  r.n = n;
  r.k = k;
  r.graphs_scanned = labeled_graph_count(n);
  const auto inc = incidence_masks(n);
  // Smallest delta satisfying 2 delta > n + k + 2.
  const int need = (n + k + 2) / 2 + 1;
  for (std::uint64_t mask = 0; mask < r.graphs_scanned; ++mask) {
    int dmin = n;
    for (int v = 0; v < n && dmin >= need; ++v) dmin = std::min(dmin, std::popcount(mask & inc[v]));
    if (!lemma_guarantee(n, k, dmin)) continue;
    ++r.premise_count;
    Graph g = Graph::from_upper_mask(n, mask);
    if (!is_k_connected(g, k + 1)) r.counterexamples.push_back(std::move(g));
  }
  return r;
}

nlohmann::json to_json(const CensusResult& r, bool include_timing) {
  nlohmann::json j;
  j["n"] = r.spec.n;
  j["k"] = r.spec.k;
  j["delta"] = r.degree_unconstrained ? nlohmann::json(nullptr) : nlohmann::json(r.spec.delta);
  j["class_size"] = r.class_size;
  j["max_rho"] = r.max_rho;
  j["maximizers"] = nlohmann::json::array();
  for (const auto& g : r.maximizers) j["maximizers"].push_back(g6_encode(g));
  j["matches_extremal"] = r.matches_extremal;
  j["unique"] = r.unique;
  j["graphs_scanned"] = r.graphs_scanned;
  j["band_size"] = r.band_size;
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

std::string census_csv_header() {
  return "n,k,delta,class_size,max_rho,maximizers,unique,matches_extremal,graphs_scanned,band_size";
}

std::string to_csv_row(const CensusResult& r) {
  std::ostringstream out;
  out.precision(15);
  out << r.spec.n << ',' << r.spec.k << ',';
  if (!r.degree_unconstrained) out << r.spec.delta;
  out << ',' << r.class_size << ',' << r.max_rho << ',';
  for (std::size_t i = 0; i < r.maximizers.size(); ++i) out << (i ? ";" : "") << g6_encode(r.maximizers[i]);
  out << ',' << (r.unique ? "true" : "false") << ',' << (r.matches_extremal ? "true" : "false") << ','
      << r.graphs_scanned << ',' << r.band_size;
  return out.str();
}

}  // namespace specgraph
