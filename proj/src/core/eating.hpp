#pragma once

#include <vector>

#include "graph.hpp"
#include "local_search.hpp"
#include "subgraph.hpp"

namespace mstlab {

// A construction returns the sets it chose together with the trace produced
// by applying them. For ops confined to a vertex subset, trace.reached_mst
// refers to that subset's induced instance.
struct ConstructionResult {
  OptimizingSequence seq;
  SequenceTrace trace;
};

struct VoronoiPartition {
  std::vector<int> sources;
  // Vertex -> position in sources; -1 outside the region.
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;
};

// Nearest-source partition of `region` under weighted distance in the tree
// `tree_adj` (adjacency confined to the region). Distance ties go to the
// smaller source position.
VoronoiPartition voronoi_cells(const Graph& g,
                               const std::vector<std::vector<int>>& tree_adj,
                               const std::vector<int>& region,
                               const std::vector<int>& sources);

// x hangs off the tree H[u_set] by a single edge; walks paths from x to each
// u_set vertex in increasing label, ending with the exact MST on
// u_set + {x}.
ConstructionResult absorb_leaf(const Graph& g, const Subgraph& h,
                               const std::vector<int>& u_set, int x,
                               bool keep_subgraphs = false);

// General absorption: x may attach to H[u_set] = MST by any nonempty edge
// set. Splits u_set into Voronoi cells around x's neighbors, absorbs x into
// each cell, then removes the leftover cycles.
ConstructionResult absorb_vertex(const Graph& g, const Subgraph& h,
                                 const std::vector<int>& u_set, int x,
                                 bool keep_subgraphs = false);

// H contains the MST plus extra edges; deletes each extra edge via the
// vertex set of its MST path, shortest paths first (ties by edge index).
ConstructionResult remove_cycles(const Graph& g, const Subgraph& h,
                                 bool keep_subgraphs = false);

// Same, confined to the induced instance on `active`.
ConstructionResult remove_cycles_within(const Graph& g, const Subgraph& h,
                                        const std::vector<int>& active,
                                        bool keep_subgraphs = false);

// Absorbs `order` one vertex at a time into u0, on which H must already
// agree with the MST. Each ordered vertex needs an H-edge into the region
// grown so far.
ConstructionResult eat(const Graph& g, const Subgraph& h,
                       const std::vector<int>& u0,
                       const std::vector<int>& order,
                       bool keep_subgraphs = false);

// Ordering of the vertices outside v0 such that each is H-adjacent to v0 or
// an earlier vertex: BFS layers from v0, ties by vertex index.
std::vector<int> bfs_increment_order(const Subgraph& h,
                                     const std::vector<int>& v0);

}  // namespace mstlab
