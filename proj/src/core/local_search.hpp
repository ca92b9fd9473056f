#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "subgraph.hpp"

namespace mstlab {

// List of vertex subsets applied in order through the improvement operator.
struct OptimizingSequence {
  std::vector<std::vector<int>> sets;
};

struct SequenceTrace {
  Subgraph h0;
  Subgraph final;
  std::vector<double> step_weights;
  std::vector<char> noop_steps;
  // H_0..H_m, populated only when requested at run time.
  std::vector<Subgraph> subgraphs;
  double wt_max = 0.0;
  bool reached_mst = false;

  size_t steps() const { return step_weights.size(); }
  bool has_subgraphs() const { return !subgraphs.empty(); }
};

// One improvement step: if H[S] is connected, replace it by the MST of the
// weighted induced graph on S; otherwise leave H unchanged.
Subgraph phi(const Graph& g, const Subgraph& h, const std::vector<int>& s);

// In-place step shared by the sequence constructions. Returns the replaced
// induced weight (0 on a no-op or an edgeless S); sets *noop when H[S] was
// disconnected.
double apply_phi_inplace(const Graph& g, Subgraph& h, const std::vector<int>& s,
                         bool* noop = nullptr);

// MST of the weighted graph induced on a sorted vertex subset, reported as
// host-graph edge ids.
std::vector<u64> induced_mst_edges(const Graph& g, const std::vector<int>& s);

SequenceTrace run_sequence(const Graph& g, const Subgraph& h0,
                           const OptimizingSequence& seq,
                           bool keep_subgraphs = false);

struct PersistenceReport {
  bool ok = true;
  // Index i of the first transition H_i -> H_{i+1} violating a check.
  int violation_step = -1;
  std::string detail;
};

// Verifies on a fully recorded trace that (1) every MST edge, once present,
// persists to the end, and (2) tree-ness, once attained, persists.
PersistenceReport check_persistence(const Graph& g, const SequenceTrace& trace);

// (sum of H's non-MST edge weights, total weight of H): bracket for the
// single-step optimum when H is replaced wholesale.
std::pair<double, double> cost1_bounds(const Graph& g, const Subgraph& h);

struct HeavyEdgeFloor {
  u64 count = 0;
  double threshold = 0.0;
  double weight_floor = 0.0;
};

// Counts H-edges heavier than rho* - epsilon; any sequence whose steps all
// weigh at most rho* - epsilon must keep every counted edge.
HeavyEdgeFloor heavy_edge_floor(const Graph& g, const Subgraph& h,
                                double epsilon);

// Replay check of the retention claim on a finished trace.
bool heavy_edges_retained(const Graph& g, const SequenceTrace& trace,
                          double epsilon);

}  // namespace mstlab
