#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Membership test for connected graphs of order n with kappa <= k and
/// minimum degree >= delta.
struct ClassSpec {
  int n = 0;
  int k = 0;
  int delta = 0;

  /// Requires 1 <= k <= delta <= n-2.
  static ClassSpec make(int n, int k, int delta);
  void validate() const;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct CensusOptions {
  /// Disjoint mask ranges scanned by separate threads.
  unsigned shards = 1;
  /// Graphs within this distance of the float maximum go to exact comparison.
  double band = 1e-7;
  /// Order 8 means 2^28 masks and must be requested explicitly.
  bool allow_order8 = false;
};

struct CensusResult {
  ClassSpec spec;
  /// verify_shiu scans connected graphs with kappa <= k and no degree bound.
  bool degree_unconstrained = false;
  std::uint64_t class_size = 0;
  double max_rho = 0.0;
  /// One representative per isomorphism class attaining max_rho exactly,
  /// each the smallest mask of its class; ordered by mask.
  std::vector<Graph> maximizers;
  bool matches_extremal = false;
  bool unique = false;
  std::uint64_t graphs_scanned = 0;
  /// Labeled graphs that reached exact comparison.
  std::uint64_t band_size = 0;
  double elapsed_seconds = 0.0;
};

constexpr int kCensusMaxOrder = 8;

std::uint64_t labeled_graph_count(int n);

/// All 2^C(n,2) labeled graphs in ascending upper-triangle mask order.
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n, std::uint64_t begin = 0);
  LabeledGraphStream(int n, std::uint64_t begin, std::uint64_t end);

  std::optional<Graph> next();
  std::uint64_t position() const noexcept { return pos_; }

 private:
  int n_;
  std::uint64_t pos_;
  std::uint64_t end_;
};

LabeledGraphStream enumerate_labeled(int n, std::uint64_t begin = 0);

/// Connected, kappa <= c.k and min degree >= c.delta (degree checked first).
bool in_class(const Graph& g, const ClassSpec& c);

CensusResult run_census(const ClassSpec& c, const CensusOptions& opts = {});

/// Several classes of the same order in one pass over the stream.
std::vector<CensusResult> run_census_batch(int n, std::span<const ClassSpec> classes, const CensusOptions& opts = {});

/// Maximizer over all connected graphs of order n with kappa <= k, compared
/// against K_k + (K_1 u K_{n-k-1}). Requires 1 <= k <= n-1.
CensusResult verify_shiu(int n, int k, const CensusOptions& opts = {});

struct LemmaReport {
  int n = 0;
  int k = 0;
  /// Graphs with delta(G) > (n+k)/2 + 1.
  std::uint64_t premise_count = 0;
  std::vector<Graph> counterexamples;
  std::uint64_t graphs_scanned = 0;
};

/// Every labeled graph of order n with delta(G) > (n+k)/2 + 1 must be (k+1)-connected.
LemmaReport verify_lemma(int n, int k, const CensusOptions& opts = {});

/// Deterministic document; timing only on request.
nlohmann::json to_json(const CensusResult& r, bool include_timing = false);
std::string census_csv_header();
std::string to_csv_row(const CensusResult& r);

}  // namespace specgraph
