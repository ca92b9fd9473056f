// Acceptance gate: one line per criterion, exit code counts failures.
// Run with no arguments for all criteria, or pass criterion numbers.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "distribution.hpp"
#include "eating.hpp"
#include "experiments.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "starpath.hpp"
#include "structure.hpp"
#include "subgraph.hpp"
#include "tree.hpp"

using namespace mstlab;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExperimentConfig config(const std::string& command, std::vector<int> ns,
                        int trials, u64 seed) {
  ExperimentConfig cfg;
  cfg.command = command;
  cfg.n_values = std::move(ns);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.has_seed = true;
  return cfg;
}

json aggregates(const ExperimentConfig& cfg) {
  return json::parse(run_command(cfg).json)["aggregates"];
}

double induced_weight(const Graph& g, const Subgraph& h,
                      const std::vector<int>& s) {
  double w = 0.0;
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (h.has(s[a], s[b])) w += g.weight(s[a], s[b]);
  return w;
}

// 1. The small-instance oracle never beats a constructive trace, and every
//    construction ends at the exact MST edge set.
Outcome oracle_equivalence() {
  auto t0 = Clock::now();
  auto dist = parse_distribution("uniform");
  int bad = 0, instances = 0;
  for (auto [n, count] : {std::pair{5, 200}, std::pair{6, 50}}) {
    for (int i = 0; i < count; ++i) {
      u64 seed = derive_seed(0xacce5500ull + n, i);
      Graph g = Graph::sample(n, dist, seed);
      Subgraph t = mst(g);
      bool ok = true;

      Subgraph h = Subgraph::make_start(static_cast<StartKind>(i % 4), n,
                                        derive_seed(seed, 1));
      double cost_h = exact_cost(g, h);
      PipelineResult pr = full_pipeline(g, h);
      ok &= pr.trace.final == t && cost_h <= pr.trace.wt_max + 1e-12;
      ConstructionResult ce = eat(g, h, {0}, bfs_increment_order(h, {0}));
      ok &= ce.trace.final == t && cost_h <= ce.trace.wt_max + 1e-12;

      std::vector<int> region(n - 1);
      std::iota(region.begin(), region.end(), 0);
      int x = n - 1;
      Subgraph hc(n);
      for (u64 id : induced_mst_edges(g, region)) hc.set(id);
      if (i % 3 == 0) hc.add(x, 0);
      if (i % 3 == 1) { hc.add(x, 0); hc.add(x, 2); }
      if (i % 3 == 2) { hc.add(x, 1); hc.add(x, 2); hc.add(x, 3); }
      double cost_c = exact_cost(g, hc);
      ConstructionResult ca = absorb_vertex(g, hc, region, x);
      ok &= ca.trace.final == t && cost_c <= ca.trace.wt_max + 1e-12;

      Subgraph hd = t;
      int extras = 2 + i % 3;
      for (u64 c = 0; extras > 0; ++c) {
        u64 id = uniform_below(derive_seed(seed, 2), c, g.edges());
        if (hd.test(id)) continue;
        hd.set(id);
        --extras;
      }
      double cost_d = exact_cost(g, hd);
      ConstructionResult cr = remove_cycles(g, hd);
      ok &= cr.trace.final == t && cost_d <= cr.trace.wt_max + 1e-12;

      ++instances;
      bad += !ok;
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << instances << " instances, " << bad << " violations, " << secs << "s";
  return {bad == 0 && secs <= 120.0, d.str()};
}

// 2. Kruskal forest/graph coupling audited at every insertion step.
Outcome kruskal_coupling() {
  auto dist = parse_distribution("uniform");
  long long total = 0;
  for (int t = 0; t < 20; ++t) {
    Graph g = Graph::sample(50, dist, derive_seed(0xc09b1eull, t));
    total += coupling_violations(kruskal_trace(g));
  }
  std::ostringstream d;
  d << "20 graphs x 1225 steps, " << total << " violations";
  return {total == 0, d.str()};
}

// 3. Mean MST weight approaches zeta(3)/f(0).
Outcome zeta3_limit() {
  ExperimentConfig cfg = config("zeta3", {1000}, 50, 0x5e7a3ull);
  double mean1 = aggregates(cfg)["per_n"][0]["mean"].get<double>();
  cfg.dist = "uniform:0.5";
  double mean2 = aggregates(cfg)["per_n"][0]["mean"].get<double>();
  double err1 = std::abs(mean1 - kZeta3);
  double err2 = std::abs(mean2 - kZeta3 / 2.0);
  std::ostringstream d;
  d << "uniform mean " << mean1 << " (err " << err1 << "), f0=2 mean "
    << mean2 << " (err " << err2 << ")";
  return {err1 <= 0.05 && err2 <= 0.05, d.str()};
}

// 4. Success fraction of the pipeline at wt_max <= rho* + eps, per start
//    kind: at least 0.9 by n = 400 and nondecreasing within two sigma.
Outcome upper_trend() {
  auto t0 = Clock::now();
  bool all_ok = true;
  std::ostringstream d;
  for (const char* kind : {"path", "star", "clique", "tree"}) {
    ExperimentConfig cfg = config("upper", {50, 100, 200, 400}, 100, 0xa11ceull);
    cfg.start = kind;
    cfg.epsilon = 0.2;
    json per_n = aggregates(cfg)["per_n"];
    std::vector<double> rate, sig;
    for (const auto& e : per_n) {
      rate.push_back(e["success_rate"].get<double>());
      sig.push_back(e["sigma"].get<double>());
    }
    bool ok = rate.back() >= 0.9;
    for (size_t i = 1; i < rate.size(); ++i)
      ok = ok && rate[i] >= rate[i - 1] -
                     2.0 * std::sqrt(sig[i] * sig[i] + sig[i - 1] * sig[i - 1]);
    all_ok = all_ok && ok;
    d << kind << "=" << rate.back() << (ok ? " ok; " : " bad; ");
  }
  double secs = seconds_since(t0);
  d << secs << "s";
  return {all_ok && secs <= 600.0, d.str()};
}

// 5. Heavy-edge floor on path starts at n = 400.
Outcome lower_floor() {
  ExperimentConfig cfg = config("lower", {400}, 1000, 0x10e4ull);
  cfg.epsilon = 0.2;
  json e = aggregates(cfg)["per_n"][0];
  double count_rate = e["count_ok_rate"].get<double>();
  int ratio_bad = e["ratio_violations"].get<int>();
  std::ostringstream d;
  d << "count>=40 in " << count_rate * 100.0 << "% of trials, " << ratio_bad
    << " ratio violations";
  return {count_rate >= 0.95 && ratio_bad == 0, d.str()};
}

// 6. Weighted MST diameter decays in n and obeys the threshold-component
//    bound on every sample.
Outcome wdiam_decay() {
  ExperimentConfig cfg = config("wdiam-scan", {200, 1000, 5000}, 50, 0xd1a8ull);
  json per_n = aggregates(cfg)["per_n"];
  std::vector<double> median;
  int upper_bad = 0;
  for (const auto& e : per_n) {
    median.push_back(e["median_wdiam"].get<double>());
    upper_bad += e["upper_violations"].get<int>();
  }
  bool decreasing = median[0] > median[1] && median[1] > median[2];
  std::ostringstream d;
  d << "medians " << median[0] << " > " << median[1] << " > " << median[2]
    << ", " << upper_bad << " bound violations";
  return {decreasing && upper_bad == 0, d.str()};
}

// 7. Run-index tail under the disjoint-block bound at n = 10^4.
Outcome run_index_tail() {
  ExperimentConfig cfg = config("run-index", {10000}, 10000, 0x7a11ull);
  json agg = aggregates(cfg);
  bool ok = agg["ok"].get<bool>();
  std::ostringstream d;
  d << "w=" << agg["w"].get<double>() << " l=" << agg["l"].get<int>()
    << " over 10000 trials, tail " << (ok ? "within" : "exceeds")
    << " bound+3sigma";
  return {ok, d.str()};
}

int suite_step_operator() {
  auto dist = parse_distribution("uniform");
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 s = derive_seed(0x0b51ull, i);
    int n = 5 + static_cast<int>(uniform_below(s, 0, 36));
    Graph g = Graph::sample(n, dist, derive_seed(s, 1));
    Subgraph h = Subgraph::make_start(static_cast<StartKind>(i % 4), n,
                                      derive_seed(s, 2));
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
      if (uniform01(s, 100 + v) < 0.4) set.push_back(v);
    if (set.size() < 2) set = {0, 1};
    Subgraph h1 = phi(g, h, set);
    bad += phi(g, h1, set) != h1;
    bad += induced_weight(g, h1, set) > induced_weight(g, h, set) + 1e-12;
  }
  return bad;
}

int suite_persistence() {
  auto dist = parse_distribution("uniform");
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 s = derive_seed(0x9e45ull, i);
    int n = 5 + static_cast<int>(uniform_below(s, 0, 36));
    Graph g = Graph::sample(n, dist, derive_seed(s, 1));
    Subgraph h = Subgraph::make_start(static_cast<StartKind>(i % 4), n,
                                      derive_seed(s, 2));
    PipelineResult pr = full_pipeline(g, h, true);
    bad += !check_persistence(g, pr.trace).ok;
  }
  return bad;
}

int suite_reduced_mst() {
  auto dist = parse_distribution("uniform");
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 s = derive_seed(0x4ed5ull, i);
    int n = 6 + static_cast<int>(uniform_below(s, 0, 25));
    Graph g = Graph::sample(n, dist, derive_seed(s, 1));
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<ReducedEdge> reduced;
    if (i % 2 == 0) {
      // Reduced MST edges stay in the new MST, so the subtree form applies.
      for (u64 id : mst(g).edge_list()) {
        EdgeId e = edge_decode(id);
        tree_edges.push_back({e.u, e.v});
        reduced.push_back({e.u, e.v, g.weight_linear(id) * 0.5});
      }
    } else {
      int center = static_cast<int>(uniform_below(s, 2, n));
      int k = 3 + static_cast<int>(uniform_below(s, 3, 4));
      for (int leaf = 0; leaf < n && k > 0; ++leaf) {
        if (leaf == center) continue;
        tree_edges.push_back({center, leaf});
        reduced.push_back(
            {center, leaf, g.weight(center, leaf) * uniform01(s, 200 + leaf)});
        --k;
      }
    }
    ReducedMstReport rep = check_reduced_mst_bound(g, tree_edges, reduced);
    bad += !rep.holds;
    if (i % 2 == 0) {
      bad += !rep.subtree_case_applies;
      bad += rep.rhs_subtree_case > rep.rhs_general + 1e-12;
    }
  }
  return bad;
}

int suite_alpha_bracket() {
  int bad = 0;
  for (int j = 0; j < 1000; ++j) {
    double eps = 1e-4 * std::pow(100.0, j / 999.0);
    double a = alpha(1.0 + eps);
    bad += !(1.5 * eps <= a && a <= 2.0 * eps);
  }
  return bad;
}

int suite_witnesses() {
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 s = derive_seed(0x817ull, i);
    int n = 2 + static_cast<int>(uniform_below(s, 0, 127));
    Subgraph h =
        Subgraph::make_start(StartKind::random_spanning_tree, n, derive_seed(s, 1));
    // Half the cases add chords so the witness search sees dense pockets.
    if (i % 2 == 1)
      for (int extra = 0; extra < n / 4; ++extra)
        h.set(uniform_below(s, 300 + extra, edge_count(n)));
    StructuralWitness w = find_witness(h);
    bad += !certify_witness(h, w);
    bad += static_cast<int>(w.vertices.size()) < witness_size_bound(n);
  }
  return bad;
}

int suite_wdiam_sweep() {
  auto dist = parse_distribution("uniform");
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    u64 s = derive_seed(0xd1aull, i);
    int n = 2 + static_cast<int>(uniform_below(s, 0, 63));
    Graph g = Graph::sample(n, dist, derive_seed(s, 1));
    TreeView tv(g, mst(g));
    bad += std::abs(wdiam(tv) - wdiam_all_pairs(tv)) > 1e-9;
  }
  return bad;
}

// 8. Six property suites of 1000 cases each.
Outcome property_suites() {
  struct Suite {
    const char* name;
    int (*run)();
  };
  const Suite suites[] = {
      {"step-operator", suite_step_operator},
      {"persistence", suite_persistence},
      {"reduced-mst", suite_reduced_mst},
      {"alpha-bracket", suite_alpha_bracket},
      {"witnesses", suite_witnesses},
      {"wdiam-sweep", suite_wdiam_sweep},
  };
  int total = 0;
  std::ostringstream d;
  for (const Suite& s : suites) {
    int bad = s.run();
    total += bad;
    d << s.name << "=" << bad << " ";
  }
  d << "violations over 1000 cases each";
  return {total == 0, d.str()};
}

// 9. Re-running a config reproduces the CSV byte for byte.
Outcome reproducibility() {
  std::vector<ExperimentConfig> cfgs;
  cfgs.push_back(config("zeta3", {50}, 20, 0x9e9e01ull));
  ExperimentConfig pipe = config("pipeline", {20}, 10, 0x9e9e02ull);
  pipe.start = "star";
  cfgs.push_back(pipe);
  cfgs.push_back(config("wdiam-scan", {60}, 5, 0x9e9e03ull));
  int mismatches = 0;
  for (const auto& cfg : cfgs) {
    CommandResult a = run_command(cfg);
    CommandResult b = run_command(cfg);
    mismatches += a.csv != b.csv;
    mismatches +=
        json::parse(a.json)["aggregates"] != json::parse(b.json)["aggregates"];
  }
  std::ostringstream d;
  d << cfgs.size() << " configs re-run, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome run_criterion(int num) {
  switch (num) {
    case 1: return oracle_equivalence();
    case 2: return kruskal_coupling();
    case 3: return zeta3_limit();
    case 4: return upper_trend();
    case 5: return lower_floor();
    case 6: return wdiam_decay();
    case 7: return run_index_tail();
    case 8: return property_suites();
    case 9: return reproducibility();
    default: return {false, "unknown criterion"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  int failures = 0;
  for (int num : which) {
    Outcome o = run_criterion(num);
    std::printf("criterion %d %s (%s)\n", num, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures;
}
