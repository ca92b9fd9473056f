#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <queue>
#include <vector>

#include "common.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"

namespace mstlab {

namespace {

struct SubsetMove {
  u64 edge_mask = 0;   // bits of pair indices inside S
  u64 mst_mask = 0;    // induced MST of the full graph on S
  int size = 0;
  // per inside-pair: bit, local endpoints, weight
  std::vector<std::array<int, 2>> ends;
  std::vector<u64> bits;
  std::vector<double> weights;
};

struct StateSpace {
  int n = 0;
  u64 states = 0;
  u64 mst_mask = 0;
  std::vector<SubsetMove> moves;
};

u64 mask_of(const Subgraph& h) {
  u64 m = 0;
  for (u64 id : h.edge_list()) m |= u64(1) << id;
  return m;
}

StateSpace build_space(const Graph& g, const Subgraph& h0, bool force) {
  const int n = g.n();
  if (n < 2) fail_invalid("oracle: need n >= 2");
  if (n > 7 || (n == 7 && !force))
    fail_invalid("oracle: state space too large (n <= 6, or 7 with force)");
  if (h0.n() != n) fail_invalid("oracle: size mismatch");
  if (!h0.connected()) fail_invalid("oracle: start state is disconnected");

  StateSpace sp;
  sp.n = n;
  sp.states = u64(1) << edge_count(n);
  sp.mst_mask = mask_of(mst(g));

  for (int s = 1; s < (1 << n); ++s) {
    if (std::popcount(static_cast<unsigned>(s)) < 2) continue;
    SubsetMove mv;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) verts.push_back(v);
    mv.size = static_cast<int>(verts.size());
    for (int a = 0; a < mv.size; ++a)
      for (int b = a + 1; b < mv.size; ++b) {
        u64 id = edge_linear(verts[a], verts[b]);
        mv.edge_mask |= u64(1) << id;
        mv.bits.push_back(u64(1) << id);
        mv.ends.push_back({a, b});
        mv.weights.push_back(g.weight_linear(id));
      }
    for (u64 id : induced_mst_edges(g, verts)) mv.mst_mask |= u64(1) << id;
    sp.moves.push_back(std::move(mv));
  }
  return sp;
}

// Connectivity of the induced edge set on the subset, plus its weight.
// Returns false when the induced subgraph does not connect the subset.
bool induced_weight(const SubsetMove& mv, u64 state, double& weight) {
  if (std::popcount(state & mv.edge_mask) < mv.size - 1) return false;
  std::array<int, 8> parent;
  for (int i = 0; i < mv.size; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int merges = 0;
  weight = 0.0;
  for (size_t i = 0; i < mv.bits.size(); ++i) {
    if (!(state & mv.bits[i])) continue;
    weight += mv.weights[i];
    int ra = find(mv.ends[i][0]), rb = find(mv.ends[i][1]);
    if (ra != rb) {
      parent[ra] = rb;
      ++merges;
    }
  }
  return merges == mv.size - 1;
}

}  // namespace

double exact_cost(const Graph& g, const Subgraph& h0, bool force) {
  StateSpace sp = build_space(g, h0, force);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(sp.states, inf);
  using Item = std::pair<double, u64>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  u64 start = mask_of(h0);
  best[start] = 0.0;
  pq.push({0.0, start});
  while (!pq.empty()) {
    auto [d, state] = pq.top();
    pq.pop();
    if (d > best[state]) continue;
    if (state == sp.mst_mask) return d;
    for (const SubsetMove& mv : sp.moves) {
      double w = 0.0;
      if (!induced_weight(mv, state, w)) continue;
      u64 next = (state & ~mv.edge_mask) | mv.mst_mask;
      double nd = std::max(d, w);
      if (nd < best[next]) {
        best[next] = nd;
        pq.push({nd, next});
      }
    }
  }
  fail_internal("oracle: MST state unreachable");
}

bool reachable_under(const Graph& g, const Subgraph& h0, double rho,
                     bool force) {
  StateSpace sp = build_space(g, h0, force);
  std::vector<char> seen(sp.states, 0);
  std::vector<u64> stack;
  u64 start = mask_of(h0);
  seen[start] = 1;
  stack.push_back(start);
  while (!stack.empty()) {
    u64 state = stack.back();
    stack.pop_back();
    if (state == sp.mst_mask) return true;
    for (const SubsetMove& mv : sp.moves) {
      double w = 0.0;
      if (!induced_weight(mv, state, w) || w > rho) continue;
      u64 next = (state & ~mv.edge_mask) | mv.mst_mask;
      if (!seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace mstlab
