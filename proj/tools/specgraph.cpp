// specgraph command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specgraph/census.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/quotient.hpp"
#include "specgraph/rewiring.hpp"
#include "specgraph/spectral.hpp"
#include "specgraph/suites.hpp"

using namespace specgraph;
using nlohmann::json;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_shards() {
  if (const char* env = std::getenv("SPECGRAPH_SHARDS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SPECGRAPH_SHARDS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

json report(const std::string& command, json params) {
  return {{"command", command}, {"params", std::move(params)}, {"findings", json::array()}, {"failures", json::array()},
          {"timing", nullptr}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

json graph_summary(const Graph& g) {
  json j;
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  if (g.order() <= 258047) j["graph6"] = g6_encode(g);
  j["degrees"] = degree_sequence(g);
  j["min_degree"] = min_degree(g);
  j["kappa"] = vertex_connectivity(g).kappa;
  return j;
}

// ---- extremal --------------------------------------------------------------

struct ExtremalArgs {
  int n = 0, k = 0, delta = 0;
  std::string format = "text";
};

int cmd_extremal(const ExtremalArgs& a) {
  const ExtremalParams p = ExtremalParams::make(a.n, a.k, a.delta);
  const Graph g = extremal_graph(p);
  if (a.format == "g6") {
    std::cout << g6_encode(g) << "\n";
    return 0;
  }
  const double rho = perron(g).rho;
  const CubicCoeffs c = cubic_coefficients(p);
  const double root = largest_cubic_root(c);
  json j = graph_summary(g);
  j["realizes_min_degree"] = p.realizes_min_degree();
  j["rho"] = rho;
  j["cubic"] = {c.c2, c.c1, c.c0};
  j["cubic_root"] = root;
  j["difference"] = std::abs(rho - root);
  if (a.format == "json") {
    json r = report("extremal", {{"n", a.n}, {"k", a.k}, {"delta", a.delta}});
    r["findings"].push_back(j);
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << "graph6      " << j["graph6"].get<std::string>() << "\n";
    std::cout << "degrees    ";
    for (int d : degree_sequence(g)) std::cout << ' ' << d;
    std::cout << "\nmin degree  " << min_degree(g) << (p.realizes_min_degree() ? "" : " (below delta)") << "\n";
    std::cout << "kappa       " << j["kappa"].get<int>() << "\n";
    std::printf("rho         %.15g\ncubic root  %.15g\n|diff|      %.3e\n", rho, root, std::abs(rho - root));
  }
  return 0;
}

// ---- radius ----------------------------------------------------------------

struct RadiusArgs {
  std::string file;
  std::string input = "auto";
  std::string format = "text";
};

Graph load_graph(const RadiusArgs& a) {
  std::ifstream in(a.file);
  if (!in) throw UsageError("cannot read " + a.file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::string kind = a.input;
  if (kind == "auto") {
    std::string first;
    std::istringstream lines(text);
    while (std::getline(lines, first)) {
      if (const auto hash = first.find('#'); hash != std::string::npos) first.erase(hash);
      if (first.find_first_not_of(" \t\r") != std::string::npos) break;
      first.clear();
    }
    const bool g6_like = first.rfind(">>graph6<<", 0) == 0 ||
                         (first.find_first_of(" \t") == std::string::npos &&
                          first.find_first_not_of("0123456789\r") != std::string::npos);
    kind = g6_like ? "g6" : "edges";
  }
  if (kind == "g6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        return g6_decode(line);
      }
    throw ParseError("empty graph6 input");
  }
  std::istringstream in2(text);
  return read_edge_list(in2);
}

int cmd_radius(const RadiusArgs& a) {
  const Graph g = load_graph(a);
  json r = report("radius", {{"file", a.file}});
  const auto comps = connected_components(g);
  for (const auto& comp : comps) {
    const Graph h = induced_subgraph(g, comp);
    const PerronPair pp = perron(h);
    json c;
    c["vertices"] = comp;
    c["rho"] = pp.rho;
    c["perron_vector"] = pp.vec;
    c["kappa"] = vertex_connectivity(h).kappa;
    c["min_degree"] = min_degree(h);
    r["findings"].push_back(c);
  }
  json whole = graph_summary(g);
  whole["connected"] = comps.size() == 1;
  double rho = 0.0;
  for (const auto& c : r["findings"]) rho = std::max(rho, c["rho"].get<double>());
  whole["rho"] = rho;
  r["graph"] = whole;
  if (a.format == "json") {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  std::printf("order %d, %zu edges, %zu component(s), min degree %d, kappa %d\n", g.order(), g.edge_count(),
              comps.size(), min_degree(g), whole["kappa"].get<int>());
  std::printf("rho %.15g\n", rho);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = r["findings"][i];
    std::printf("component %zu: %zu vertices, rho %.15g, kappa %d\n  perron", i, comps[i].size(),
                c["rho"].get<double>(), c["kappa"].get<int>());
    for (double x : c["perron_vector"]) std::printf(" %.10f", x);
    std::printf("\n");
  }
  return 0;
}

// ---- census ----------------------------------------------------------------

struct CensusArgs {
  int n = 0, k = 0, delta = 0;
  unsigned shards = 1;
  bool allow_order8 = false;
  bool timing = false;
  std::string format = "json";
};

int cmd_census(const CensusArgs& a) {
  CensusOptions o;
  o.shards = a.shards;
  o.allow_order8 = a.allow_order8;
  const CensusResult r = run_census(ClassSpec::make(a.n, a.k, a.delta), o);
  if (a.format == "csv") {
    std::cout << census_csv_header() << "\n" << to_csv_row(r) << "\n";
  } else {
    std::cout << to_json(r, a.timing).dump(2) << "\n";
  }
  std::cerr << "class size " << r.class_size << ", max rho " << r.max_rho << ", " << r.maximizers.size()
            << " maximizer(s), matches extremal: " << (r.matches_extremal ? "yes" : "no") << "\n";
  return r.unique && r.matches_extremal ? 0 : kExitFailures;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int n_min = -1, n_max = -1;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  int max_order = 9;
  unsigned shards = 1;
  bool allow_order8 = false;
  bool timing = false;
  std::string output;
  std::string format = "json";
  std::string artifacts;
  double root_tol = 1e-9;
  double quad_tol = 1e-9;
  double band = 1e-7;
  RewireTolerances tol;
};

void check_range(const VerifyArgs& a, int lo_default, int hi_default, int& lo, int& hi) {
  lo = a.n_min < 0 ? lo_default : a.n_min;
  hi = a.n_max < 0 ? hi_default : a.n_max;
  if (lo > hi) throw UsageError("empty grid: --n-min " + std::to_string(lo) + " > --n-max " + std::to_string(hi));
}

void write_artifacts(const std::string& dir, const json& failures) {
  if (dir.empty() || failures.empty()) return;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < failures.size(); ++i) {
    const json& f = failures[i];
    std::ofstream out(std::filesystem::path(dir) / ("failure-" + std::to_string(i) + ".txt"));
    if (f.contains("graph6")) out << f["graph6"].get<std::string>() << "\n";
    if (f.contains("spec")) out << f["spec"].get<std::string>() << "\n";
    out << f.dump() << "\n";
  }
}

json census_failure(const CensusResult& r) {
  json f = to_json(r);
  f["reason"] = !r.unique ? "maximizer not unique" : "maximizer does not match the extremal graph";
  return f;
}

int cmd_verify(const VerifyArgs& a) {
  CensusOptions co;
  co.shards = a.shards;
  co.allow_order8 = a.allow_order8;
  co.band = a.band;
  const auto t0 = std::chrono::steady_clock::now();
  const std::string& th = a.theorem;
  int lo = 0, hi = 0;
  json params = {{"theorem", th}};
  std::vector<CensusResult> rows;
  json findings = json::array(), failures = json::array();

  if (th == "main" || th == "shiu" || th == "lemma") {
    check_range(a, th == "lemma" ? 3 : 4, 7, lo, hi);
    params["n_min"] = lo;
    params["n_max"] = hi;
    params["shards"] = a.shards;
    params["band"] = a.band;
  }
  if (th == "main") {
    for (int n = lo; n <= hi; ++n) {
      const auto grid = main_grid_classes(n);
      for (CensusResult& c : run_census_batch(n, grid, co)) {
        findings.push_back(to_json(c, a.timing));
        if (!(c.unique && c.matches_extremal)) failures.push_back(census_failure(c));
        rows.push_back(std::move(c));
      }
    }
  } else if (th == "shiu") {
    for (int n = lo; n <= hi; ++n)
      for (int k = 1; k <= n - 2; ++k) {
        CensusResult c = verify_shiu(n, k, co);
        findings.push_back(to_json(c, a.timing));
        if (!(c.unique && c.matches_extremal)) failures.push_back(census_failure(c));
        rows.push_back(std::move(c));
      }
  } else if (th == "lemma") {
    for (int n = lo; n <= hi; ++n)
      for (int k = 1; k <= n - 2; ++k) {
        const LemmaReport l = verify_lemma(n, k, co);
        findings.push_back({{"n", n}, {"k", k}, {"premise_count", l.premise_count},
                            {"graphs_scanned", l.graphs_scanned}, {"counterexamples", l.counterexamples.size()}});
        for (const Graph& g : l.counterexamples)
          failures.push_back({{"n", n}, {"k", k}, {"graph6", g6_encode(g)},
                              {"reason", "minimum degree above the bound but not (k+1)-connected"}});
      }
  } else if (th == "cubic") {
    check_range(a, 3, 200, lo, hi);
    params["n_min"] = lo;
    params["n_max"] = hi;
    params["root_tol"] = a.root_tol;
    const CubicGridReport g = verify_cubic_grid(lo, hi, a.root_tol);
    findings.push_back({{"triples", g.triples}, {"max_root_error", g.max_root_error}});
    for (const CubicCheck& c : g.failures) {
      json f = {{"n", c.params.n}, {"k", c.params.k}, {"delta", c.params.delta},
                {"formula", c.formula.poly().to_string()}, {"quotient_charpoly", c.quotient_charpoly.to_string()},
                {"cubic_root", c.cubic_root}, {"rho", c.rho}};
      std::string reason;
      if (!c.coefficients_match) reason += "formula differs from det(xI - Q); ";
      if (!c.quotient_matches_graph) reason += "closed-form quotient differs from the built graph; ";
      if (!c.root_matches) reason += "largest cubic root differs from rho; ";
      f["reason"] = reason.substr(0, reason.size() - 2);
      failures.push_back(f);
    }
  } else if (th == "rewire" || th == "corollary") {
    if (a.max_order < 3) throw UsageError("--max-order must be at least 3");
    params["trials"] = a.trials;
    params["seed"] = a.seed;
    params["max_order"] = a.max_order;
    params["weak_tol"] = a.tol.weak;
    params["premise_margin"] = a.tol.premise_margin;
    params["strict_tol"] = a.tol.strict;
    RewireSuiteReport s;
    if (th == "rewire") {
      params["quad_tol"] = a.quad_tol;
      s = run_rewire_suite(a.trials, a.seed, a.max_order, a.tol, a.quad_tol);
    } else {
      s = run_corollary_suite(a.trials, a.seed, a.max_order, a.tol);
    }
    json f = {{"trials", s.trials}, {"passed", s.passed}, {"premise_not_met", s.premise_not_met},
              {"skipped", s.skipped}};
    if (th == "rewire") f["max_quad_form_residual"] = s.max_quad_form_residual;
    findings.push_back(f);
    for (const RewireFailure& x : s.failures)
      failures.push_back({{"graph6", x.graph6}, {"spec", x.spec}, {"reason", x.reason}});
  } else {
    throw UsageError("unknown theorem '" + th + "'");
  }

  json r = report("verify", params);
  r["findings"] = std::move(findings);
  r["failures"] = std::move(failures);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (a.timing) r["timing"] = {{"elapsed_seconds", secs}};

  if (a.format == "csv") {
    if (th != "main" && th != "shiu") throw UsageError("--format csv is available for main and shiu only");
    std::string text = census_csv_header() + "\n";
    for (const CensusResult& c : rows) text += to_csv_row(c) + "\n";
    emit(text, a.output);
  } else {
    emit(r.dump(2) + "\n", a.output);
  }
  write_artifacts(a.artifacts, r["failures"]);
  std::cerr << "verify " << th << ": " << r["findings"].size() << " finding(s), " << r["failures"].size()
            << " failure(s)";
  if (a.timing) std::cerr << ", " << secs << " s";
  std::cerr << "\n";
  return r["failures"].empty() ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius and connectivity toolkit"};
  app.require_subcommand(1);

  unsigned shards = 1;
  try {
    shards = default_shards();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ExtremalArgs ex;
  auto* ext = app.add_subcommand("extremal", "Build K_k + (K_{delta-k+1} u K_{n-delta-1}) and report its radius");
  ext->add_option("--n", ex.n, "order")->required();
  ext->add_option("--k", ex.k, "join size")->required();
  ext->add_option("--delta", ex.delta, "minimum degree")->required();
  ext->add_option("--format", ex.format)->check(CLI::IsMember({"text", "json", "g6"}));

  RadiusArgs ra;
  auto* rad = app.add_subcommand("radius", "Spectral radius, Perron vector and connectivity of an input graph");
  rad->add_option("file", ra.file, "graph6 or edge-list file")->required();
  rad->add_option("--input", ra.input, "input format")->check(CLI::IsMember({"auto", "g6", "edges"}));
  rad->add_option("--format", ra.format, "output format")->check(CLI::IsMember({"text", "json"}));

  CensusArgs ce;
  ce.shards = shards;
  auto* cen = app.add_subcommand("census", "Exhaustive maximizer search for one (n, k, delta) class");
  cen->add_option("--n", ce.n)->required();
  cen->add_option("--k", ce.k)->required();
  cen->add_option("--delta", ce.delta)->required();
  cen->add_option("--shards", ce.shards)->check(CLI::PositiveNumber);
  cen->add_flag("--allow-order8", ce.allow_order8);
  cen->add_flag("--timing", ce.timing);
  cen->add_option("--format", ce.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs ve;
  ve.shards = shards;
  auto* ver = app.add_subcommand("verify", "Run a verification suite; exit 0 iff no failures");
  ver->add_option("--theorem", ve.theorem)
      ->required()
      ->check(CLI::IsMember({"main", "shiu", "lemma", "cubic", "rewire", "corollary"}));
  ver->add_option("--n-min", ve.n_min);
  ver->add_option("--n-max", ve.n_max);
  ver->add_option("--trials", ve.trials);
  ver->add_option("--seed", ve.seed);
  ver->add_option("--max-order", ve.max_order);
  ver->add_option("--shards", ve.shards)->check(CLI::PositiveNumber);
  ver->add_flag("--allow-order8", ve.allow_order8);
  ver->add_flag("--timing", ve.timing, "include wall-clock timing in the report");
  ver->add_option("--output", ve.output, "report path (default stdout)");
  ver->add_option("--format", ve.format)->check(CLI::IsMember({"json", "csv"}));
  ver->add_option("--artifacts", ve.artifacts, "directory for failure artifacts");
  ver->add_option("--root-tol", ve.root_tol)->capture_default_str();
  ver->add_option("--quad-tol", ve.quad_tol)->capture_default_str();
  ver->add_option("--band", ve.band)->capture_default_str();
  ver->add_option("--weak-tol", ve.tol.weak)->capture_default_str();
  ver->add_option("--premise-margin", ve.tol.premise_margin)->capture_default_str();
  ver->add_option("--strict-tol", ve.tol.strict)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ext) return cmd_extremal(ex);
    if (*rad) return cmd_radius(ra);
    if (*cen) return cmd_census(ce);
    if (*ver) return cmd_verify(ve);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kExitUsage;
}
