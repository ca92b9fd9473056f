#pragma once

#include "graph.hpp"
#include "subgraph.hpp"

namespace mstlab {

// Exact minimum over replacement sequences of the maximum step weight,
// from h0 to the MST state. States are edge subsets of the complete graph;
// transitions replace a connected induced subgraph by the induced MST.
// Best-first search on the bottleneck value. n <= 6 unless force (n = 7
// costs a 2^21-entry table, about 16 MiB, plus the queue).
double exact_cost(const Graph& g, const Subgraph& h0, bool force = false);

// Whether the MST state is reachable from h0 using only transitions of
// weight at most rho. Monotone in rho; flips to true exactly at
// exact_cost(g, h0).
bool reachable_under(const Graph& g, const Subgraph& h0, double rho,
                     bool force = false);

}  // namespace mstlab
