#include "kruskal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common.hpp"
#include "dsu.hpp"
#include "rng.hpp"
#include "tree.hpp"

namespace mstlab {

Subgraph mst(const Graph& g) {
  const int n = g.n();
  Subgraph t(n);
  if (n <= 1) return t;
  std::vector<char> in_tree(n, 0);
  std::vector<double> best_w(n, std::numeric_limits<double>::infinity());
  std::vector<u64> best_id(n, 0);
  in_tree[0] = 1;
  for (int v = 1; v < n; ++v) {
    best_id[v] = edge_linear(0, v);
    best_w[v] = g.weight_linear(best_id[v]);
  }
  for (int round = 1; round < n; ++round) {
    int pick = -1;
    for (int v = 1; v < n; ++v) {
      if (in_tree[v]) continue;
      if (pick < 0 || best_w[v] < best_w[pick] ||
          (best_w[v] == best_w[pick] && best_id[v] < best_id[pick]))
        pick = v;
    }
    in_tree[pick] = 1;
    t.set(best_id[pick]);
    for (int v = 1; v < n; ++v) {
      if (in_tree[v]) continue;
      u64 id = edge_linear(std::min(pick, v), std::max(pick, v));
      double w = g.weight_linear(id);
      if (w < best_w[v] || (w == best_w[v] && id < best_id[v])) {
        best_w[v] = w;
        best_id[v] = id;
      }
    }
  }
  return t;
}

KruskalTrace kruskal_trace(const Graph& g) {
  const int n = g.n();
  const u64 m = edge_count(n);
  KruskalTrace trace{g, {}, {}, m};
  trace.sorted_edges.resize(m);
  std::iota(trace.sorted_edges.begin(), trace.sorted_edges.end(), u64{0});
  std::vector<double> w(m);
  for (u64 e = 0; e < m; ++e) w[e] = g.weight_linear(e);
  std::sort(trace.sorted_edges.begin(), trace.sorted_edges.end(),
            [&](u64 a, u64 b) {
              if (w[a] != w[b]) return w[a] < w[b];
              return a < b;
            });
  trace.accepted.resize(m, 0);
  Dsu dsu(n);
  for (u64 i = 0; i < m; ++i) {
    auto [u, v] = edge_decode(trace.sorted_edges[i]);
    if (dsu.unite(u, v)) trace.accepted[i] = 1;
  }
  return trace;
}

Subgraph KruskalTrace::forest_at(u64 step) const {
  if (step > total_edges) fail_invalid("forest_at: step out of range");
  Subgraph f(graph.n());
  for (u64 i = 0; i < step; ++i)
    if (accepted[i]) f.set(sorted_edges[i]);
  return f;
}

Subgraph KruskalTrace::graph_at(u64 step) const {
  if (step > total_edges) fail_invalid("graph_at: step out of range");
  Subgraph gi(graph.n());
  for (u64 i = 0; i < step; ++i) gi.set(sorted_edges[i]);
  return gi;
}

ThresholdSnapshot snapshot_of(const Graph& g, const Subgraph& mst_edges,
                              double p) {
  const int n = g.n();
  if (p < 0.0) fail_invalid("snapshot: p must be nonnegative");
  ThresholdSnapshot snap;
  snap.p = p;

  Dsu dsu(n);
  const u64 m = edge_count(n);
  for (u64 e = 0; e < m; ++e) {
    if (g.weight_linear(e) <= p) {
      ++snap.m_p;
      auto [u, v] = edge_decode(e);
      dsu.unite(u, v);
    }
  }
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[dsu.find(v)].push_back(v);
  for (auto& comp : by_root)
    if (!comp.empty()) snap.components.push_back(std::move(comp));
  std::sort(snap.components.begin(), snap.components.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a.front() < b.front();
            });
  snap.t_max = snap.components.front();
  snap.runner_up_size = snap.components.size() > 1
                            ? static_cast<int>(snap.components[1].size())
                            : 0;

  for (u64 e : mst_edges.edge_list())
    snap.w_n = std::max(snap.w_n, g.weight_linear(e));

  auto adj = mst_edges.adjacency();
  std::vector<int> depth(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int v : snap.t_max) {
    depth[v] = 0;
    queue.push_back(v);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    snap.l_np = std::max(snap.l_np, depth[u]);
    for (int v : adj[u]) {
      if (depth[v] >= 0) continue;
      depth[v] = depth[u] + 1;
      queue.push_back(v);
    }
  }
  return snap;
}

ThresholdSnapshot snapshot_at(const KruskalTrace& trace, double p) {
  return snapshot_of(trace.graph, trace.final_forest(), p);
}

double alpha(double c) {
  if (!(c > 0.0)) fail_invalid("alpha: c must be positive");
  if (c <= 1.0) return 0.0;
  auto h = [c](double x) { return 1.0 - x - std::exp(-c * x); };
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double connectivity_probability_bound(double n, double p) {
  if (n < 1.0 || p < 0.0) fail_invalid("connectivity bound: bad arguments");
  return std::expm1(n * std::exp(-n * p / 2.0));
}

double empirical_disconnect_rate(int n, double p, int trials, u64 seed) {
  if (n < 1 || trials < 1) fail_invalid("disconnect rate: bad arguments");
  const u64 m = edge_count(n);
  int disconnected = 0;
  for (int t = 0; t < trials; ++t) {
    u64 s = derive_seed(seed, static_cast<u64>(t));
    Dsu dsu(n);
    int merges = 0;
    for (u64 e = 0; e < m && merges < n - 1; ++e) {
      if (uniform01(s, e) <= p) {
        auto [u, v] = edge_decode(e);
        if (dsu.unite(u, v)) ++merges;
      }
    }
    if (merges < n - 1) ++disconnected;
  }
  return static_cast<double>(disconnected) / trials;
}

ReducedMstReport check_reduced_mst_bound(
    const Graph& g, const std::vector<std::pair<int, int>>& tree_edges,
    const std::vector<ReducedEdge>& reduced) {
  const int n = g.n();
  if (tree_edges.empty()) fail_invalid("reduced bound: T must have an edge");

  std::vector<u64> t_ids;
  Dsu shape(n);
  std::vector<char> touched(n, 0);
  for (auto [u, v] : tree_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail_invalid("reduced bound: bad tree edge");
    if (!shape.unite(u, v)) fail_invalid("reduced bound: T has a cycle");
    touched[u] = touched[v] = 1;
    t_ids.push_back(edge_linear(std::min(u, v), std::max(u, v)));
  }
  int vt = 0, root = -1;
  for (int v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    ++vt;
    if (root < 0) root = v;
  }
  for (int v = 0; v < n; ++v)
    if (touched[v] && !shape.same(root, v))
      fail_invalid("reduced bound: T is disconnected");

  const u64 m = edge_count(n);
  std::vector<double> star(m);
  for (u64 e = 0; e < m; ++e) star[e] = g.weight_linear(e);
  std::sort(t_ids.begin(), t_ids.end());
  for (const auto& r : reduced) {
    if (r.u < 0 || r.v < 0 || r.u >= n || r.v >= n || r.u == r.v)
      fail_invalid("reduced bound: bad reduced edge");
    u64 id = edge_linear(std::min(r.u, r.v), std::max(r.u, r.v));
    if (!std::binary_search(t_ids.begin(), t_ids.end(), id))
      fail_invalid("reduced bound: reduction outside T");
    if (r.weight > star[id])
      fail_invalid("reduced bound: weight raised on T");
    star[id] = r.weight;
  }

  Graph gstar = Graph::fixed(n, star);
  Subgraph mst_star = mst(gstar);
  Subgraph mst_orig = mst(g);

  ReducedMstReport rep;
  rep.lhs = wdiam(TreeView(gstar, mst_star));
  double wd = wdiam(TreeView(g, mst_orig));
  double wt_star = 0.0;
  for (u64 id : t_ids) wt_star += star[id];
  rep.rhs_general = wt_star + vt * wd;
  rep.subtree_case_applies = true;
  for (u64 id : t_ids)
    if (!mst_star.test(id)) rep.subtree_case_applies = false;
  rep.holds = rep.lhs <= rep.rhs_general * (1.0 + 1e-12);
  if (rep.subtree_case_applies) {
    rep.rhs_subtree_case = wt_star + 2.0 * wd;
    rep.holds = rep.holds && rep.lhs <= rep.rhs_subtree_case * (1.0 + 1e-12);
  }
  return rep;
}

long long coupling_violations(const KruskalTrace& trace) {
  const int n = trace.graph.n();
  long long bad = 0;
  std::vector<u64> kept;
  for (u64 m = 1; m <= trace.total_edges; ++m) {
    kept.clear();
    Dsu fresh(n);
    for (u64 i = 0; i < m; ++i) {
      u64 id = trace.sorted_edges[i];
      auto [u, v] = edge_decode(id);
      if (fresh.unite(u, v)) kept.push_back(id);
    }
    std::vector<u64> traced = trace.forest_at(m).edge_list();
    std::sort(kept.begin(), kept.end());
    if (traced != kept) {
      ++bad;
      continue;
    }
    Dsu from_forest(n);
    for (u64 id : traced) {
      auto [u, v] = edge_decode(id);
      from_forest.unite(u, v);
    }
    Dsu from_graph(n);
    for (u64 i = 0; i < m; ++i) {
      auto [u, v] = edge_decode(trace.sorted_edges[i]);
      from_graph.unite(u, v);
    }
    for (int v = 0; v < n; ++v)
      if (from_forest.same(0, v) != from_graph.same(0, v) ||
          from_forest.component_size(v) != from_graph.component_size(v)) {
        ++bad;
        break;
      }
  }
  return bad;
}

}  // namespace mstlab
