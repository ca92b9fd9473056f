#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "subgraph.hpp"

namespace mstlab {

// Unique MST under the lexicographic (weight, edge index) order. Prim's scan,
// O(n^2) time and O(n) extra memory, no edge materialization.
Subgraph mst(const Graph& g);

// Full Kruskal history: edges in increasing (weight, index) order plus an
// acceptance flag per step. Forests and components at any step are rebuilt by
// replay. Materializes all n(n-1)/2 weights; meant for moderate n.
struct KruskalTrace {
  Graph graph;
  std::vector<u64> sorted_edges;
  std::vector<char> accepted;
  u64 total_edges = 0;

  Subgraph forest_at(u64 step) const;
  Subgraph graph_at(u64 step) const;
  Subgraph final_forest() const { return forest_at(total_edges); }
};

KruskalTrace kruskal_trace(const Graph& g);

// Audits the forest/graph coupling at every insertion step: the traced
// forest must equal a freshly computed minimum spanning forest of the first
// m sorted edges, with identical components. Returns the violation count.
long long coupling_violations(const KruskalTrace& trace);

// State of the threshold coupling at level p: the graph F(n,p) of edges with
// weight <= p, its component structure, and the MST quantities controlling
// the weighted diameter bound
//   wdiam(MST) <= p * (|t_max| - 1) + 2 * w_n * l_np.
struct ThresholdSnapshot {
  double p = 0.0;
  u64 m_p = 0;
  std::vector<std::vector<int>> components;
  std::vector<int> t_max;
  int runner_up_size = 0;
  double w_n = 0.0;
  int l_np = 0;
};

// Components are sorted internally and ordered by (size desc, smallest
// vertex asc), so components.front() == t_max.
ThresholdSnapshot snapshot_of(const Graph& g, const Subgraph& mst_edges,
                              double p);
ThresholdSnapshot snapshot_at(const KruskalTrace& trace, double p);

// Largest real solution of e^{-cx} = 1 - x; zero for c <= 1, else bisection
// to absolute tolerance 1e-12.
double alpha(double c);

// e^{n e^{-np/2}} - 1, an upper bound on P(G(n,p) disconnected).
double connectivity_probability_bound(double n, double p);

// Monte Carlo companion: fraction of seeded G(n,p) samples that are
// disconnected.
double empirical_disconnect_rate(int n, double p, int trials, u64 seed);

struct ReducedEdge {
  int u;
  int v;
  double weight;
};

struct ReducedMstReport {
  double lhs = 0.0;
  double rhs_general = 0.0;
  double rhs_subtree_case = 0.0;
  bool subtree_case_applies = false;
  bool holds = false;
};

// Lowers weights on edges of a tree T inside the complete graph and checks
//   wdiam(MST(G*)) <= w*(T) + |V(T)| * wdiam(MST(G)),
// plus the sharper 2 * wdiam form when T survives into MST(G*). The left
// side is measured in the reduced weights.
ReducedMstReport check_reduced_mst_bound(
    const Graph& g, const std::vector<std::pair<int, int>>& tree_edges,
    const std::vector<ReducedEdge>& reduced);

}  // namespace mstlab
