#pragma once

#include <vector>

#include "subgraph.hpp"

namespace mstlab {

enum class WitnessKind { clique, star, path };

const char* witness_kind_name(WitnessKind kind);

// Induced clique, star, or path inside an abstract graph. Path vertices are
// listed in path order; star vertices are the leaves with the center last;
// clique vertices ascend.
struct StructuralWitness {
  WitnessKind kind = WitnessKind::path;
  std::vector<int> vertices;
  int center = -1;
};

// Exact induced-subgraph check of the claimed structure.
bool certify_witness(const Subgraph& h, const StructuralWitness& w);

// Guaranteed witness size for a connected graph on n vertices.
int witness_size_bound(int n);

// Pivot recursion on the graph induced by verts: returns a clique or an
// independent set of at least ceil(log2(|verts|) / 2) vertices, reported
// ascending. `clique` tells which one was produced.
std::vector<int> pivot_ramsey(const Subgraph& h, const std::vector<int>& verts,
                              bool* clique);

// Extracts a certified induced clique, star, or path of at least
// witness_size_bound(n) vertices from a connected graph: an eccentric-pair
// shortest path when the maximum degree is small, otherwise the pivot
// recursion on a highest-degree neighborhood; the larger certified candidate
// wins.
StructuralWitness find_witness(const Subgraph& h);

}  // namespace mstlab
