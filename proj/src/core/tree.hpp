#pragma once

#include <vector>

#include "graph.hpp"
#include "subgraph.hpp"

namespace mstlab {

// Adjacency view over an edge subset that must form a spanning tree of the
// host graph's vertex set. Validates tree-ness on construction.
class TreeView {
 public:
  TreeView(const Graph& g, const Subgraph& tree);

  int n() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  double weight(int u, int v) const { return g_->weight(u, v); }

  // Weighted distances from src to every vertex.
  std::vector<double> distances_from(int src) const;
  double dist(int u, int v) const;

 private:
  const Graph* g_;
  std::vector<std::vector<int>> adj_;
};

// Weighted diameter by double sweep (exact on trees with positive weights).
double wdiam(const TreeView& t);

// Edge-count diameter by double BFS.
int diam(const TreeView& t);

// Unique u-v path, endpoints inclusive. u == v is rejected.
std::vector<int> tree_path(const TreeView& t, int u, int v);

// Brute-force oracles for cross-checking the sweep-based routines.
double wdiam_all_pairs(const TreeView& t);
int diam_all_pairs(const TreeView& t);

}  // namespace mstlab
