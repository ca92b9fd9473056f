#pragma once

#include <vector>

#include "eating.hpp"
#include "graph.hpp"
#include "structure.hpp"
#include "subgraph.hpp"

namespace mstlab {

// Relabeling sigma_1..sigma_t of a star or path: canonical edge e_i joins
// sigma_i to sigma_{i+1} on a path, or sigma_i to the center sigma_t on a
// star. Indices below are 1-based to match the labeling.
struct CanonicalLabeling {
  WitnessKind kind = WitnessKind::path;
  std::vector<int> order;
  std::vector<u64> edge_ids;

  int size() const { return static_cast<int>(order.size()); }
  // V(i,j): vertices touched by canonical edges e_i..e_{j-1}, 1 <= i < j.
  std::vector<int> vertex_window(int i, int j) const;
};

CanonicalLabeling canonical_labeling(const StructuralWitness& w);
// Whole-graph form; classifies h as star (some vertex adjacent to all
// others, n >= 3) or path, and errors on anything else.
CanonicalLabeling canonical_labeling(const Subgraph& h);

struct RunIndex {
  double w_threshold = 0.0;
  int run_length = 0;
  // First 1-based i with canonical edges e_i..e_{i+L-1} all weighing at most
  // W, capped at t-L. found means index < t-L.
  int index = 0;
  bool found = false;
};

RunIndex run_index(const Graph& g, const CanonicalLabeling& lab,
                   double w_threshold, int run_length);

struct USequence {
  std::vector<int> u0;
  std::vector<int> additions;
  int right_count = 0;
  int right_minor_count = 0;
};

// The window chain V(I,I+L), ..., V(I,t), V(I-1,t), ..., V(1,t) as a start
// set plus singleton additions. Requires run.found.
USequence u_sequence(const RunIndex& run, const CanonicalLabeling& lab);

double default_w_threshold(int t, double rho_star);
int default_run_length(int t);

// First step U0 (weight <= W*L by the run), then eats the remaining windows.
ConstructionResult solve_star_or_path(const Graph& g, const Subgraph& h,
                                      double w_threshold, int run_length,
                                      bool keep_subgraphs = false);

struct PipelineResult {
  OptimizingSequence seq;
  SequenceTrace trace;
  WitnessKind witness_kind = WitnessKind::path;
  int witness_size = 0;
  // Single-step whole-graph replacement (witness too small or no run).
  bool fallback = false;
  int run_idx = -1;
};

// Witness extraction, witness-restricted solve, then absorption of the rest
// in BFS order. trace.wt_max is the max over all phases.
PipelineResult full_pipeline(const Graph& g, const Subgraph& h,
                             bool keep_subgraphs = false);

struct TailCheckReport {
  int n = 0;
  double w_threshold = 0.0;
  int run_length = 0;
  int trials = 0;
  std::vector<int> i_values;  // run index per trial
  std::vector<int> k_grid;
  std::vector<double> empirical;
  std::vector<double> bound;
  std::vector<double> sigma;
  bool ok = true;
};

// Empirical P(I >= kL+1) on path instances against the disjoint-block bound
// e^{-k q^L}, q = P(edge weight <= W); flags any k where the empirical tail
// exceeds bound + 3 sigma.
TailCheckReport run_index_tail_check(int n, double w_threshold, int run_length,
                                     int trials, u64 seed, const DistPtr& dist);

struct GoodSetsReport {
  int n = 0;
  double w_threshold = 0.0;
  int run_length = 0;
  double epsilon = 0.0;
  int trials = 0;
  int bad_trials = 0;
  double frequency = 0.0;
};

// Frequency of trials where some window U in the chain has
// wdiam(MST(G[U])) > epsilon, on path instances.
GoodSetsReport good_sets_scan(int n, double w_threshold, int run_length,
                              double epsilon, int trials, u64 seed,
                              const DistPtr& dist);

}  // namespace mstlab
