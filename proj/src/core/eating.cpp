#include "eating.hpp"

#include <algorithm>
#include <limits>

#include "common.hpp"

namespace mstlab {

namespace {

using Adj = std::vector<std::vector<int>>;

void adj_link(Adj& adj, int u, int v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void adj_unlink(Adj& adj, int u, int v) {
  auto& a = adj[u];
  a.erase(std::find(a.begin(), a.end(), v));
  auto& b = adj[v];
  b.erase(std::find(b.begin(), b.end(), u));
}

Adj build_region_adj(const Subgraph& h, const std::vector<int>& verts) {
  Adj adj(h.n());
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (h.has(verts[a], verts[b])) adj_link(adj, verts[a], verts[b]);
  return adj;
}

// Host-graph edge ids of H's edges inside `verts`.
std::vector<u64> region_edges(const Subgraph& h, const std::vector<int>& verts) {
  std::vector<u64> out;
  for (size_t a = 0; a < verts.size(); ++a) {
    for (size_t b = a + 1; b < verts.size(); ++b) {
      int u = std::min(verts[a], verts[b]), v = std::max(verts[a], verts[b]);
      u64 id = edge_linear(u, v);
      if (h.test(id)) out.push_back(id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool region_is_mst(const Graph& g, const Subgraph& h,
                   const std::vector<int>& verts) {
  std::vector<u64> want = induced_mst_edges(g, verts);
  std::sort(want.begin(), want.end());
  return region_edges(h, verts) == want;
}

struct Recorder {
  const Graph* g;
  Subgraph h;
  bool keep;
  OptimizingSequence seq;
  std::vector<double> wts;
  std::vector<Subgraph> subs;
  double wt_max = 0.0;

  Recorder(const Graph& gg, const Subgraph& h0, bool keep_subgraphs)
      : g(&gg), h(h0), keep(keep_subgraphs) {
    if (keep) subs.push_back(h0);
  }

  void record(std::vector<int> s, double w) {
    std::sort(s.begin(), s.end());
    seq.sets.push_back(std::move(s));
    wts.push_back(w);
    wt_max = std::max(wt_max, w);
    if (keep) subs.push_back(h);
  }

  ConstructionResult finish(const Subgraph& h0, bool reached) {
    ConstructionResult out;
    out.trace.h0 = h0;
    out.trace.final = h;
    out.trace.noop_steps.assign(wts.size(), 0);
    out.trace.step_weights = std::move(wts);
    out.trace.subgraphs = std::move(subs);
    out.trace.wt_max = wt_max;
    out.trace.reached_mst = reached;
    out.seq = std::move(seq);
    return out;
  }
};

// BFS path from x to target along adj, using only vertices with allowed set.
std::vector<int> masked_path(const Adj& adj, int x, int target,
                             const std::vector<char>& allowed,
                             std::vector<int>& parent) {
  std::vector<int> queue{x};
  parent[x] = x;
  bool found = (x == target);
  for (size_t head = 0; head < queue.size() && !found; ++head) {
    int u = queue[head];
    for (int v : adj[u]) {
      if (!allowed[v] || parent[v] >= 0) continue;
      parent[v] = u;
      if (v == target) {
        found = true;
        break;
      }
      queue.push_back(v);
    }
  }
  if (!found) fail_internal("masked_path: target unreachable");
  std::vector<int> path{target};
  while (path.back() != x) path.push_back(parent[path.back()]);
  for (int v : queue) parent[v] = -1;
  parent[x] = -1;
  parent[target] = -1;
  std::reverse(path.begin(), path.end());
  return path;
}

// Walks paths from x to every cell vertex in increasing label, replacing
// each path by the MST of its vertex set. adj is kept in sync with h.
void absorb_into_cell(Recorder& r, const std::vector<int>& cell, int x,
                      Adj& adj, std::vector<char>& allowed,
                      std::vector<int>& parent) {
  const Graph& g = *r.g;
  allowed[x] = 1;
  for (int v : cell) allowed[v] = 1;
  for (int target : cell) {
    std::vector<int> path = masked_path(adj, x, target, allowed, parent);
    double w = 0.0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      w += g.weight(path[i], path[i + 1]);
      r.h.remove(path[i], path[i + 1]);
      adj_unlink(adj, path[i], path[i + 1]);
    }
    std::vector<int> sorted_path(path);
    std::sort(sorted_path.begin(), sorted_path.end());
    for (u64 id : induced_mst_edges(g, sorted_path)) {
      auto [u, v] = edge_decode(id);
      r.h.set(id);
      adj_link(adj, u, v);
    }
    r.record(std::move(sorted_path), w);
  }
  allowed[x] = 0;
  for (int v : cell) allowed[v] = 0;
}

// Deletes every H-edge of the region that is off the region's MST, shortest
// MST path first, ties by edge index. adj, when given, tracks the deletions.
void remove_cycles_steps(Recorder& r, const std::vector<int>& active,
                         Adj* mirror) {
  const Graph& g = *r.g;
  std::vector<u64> mst_ids = induced_mst_edges(g, active);
  std::sort(mst_ids.begin(), mst_ids.end());
  for (u64 id : mst_ids)
    if (!r.h.test(id))
      fail_invalid("remove_cycles: region is missing a spanning tree edge");

  std::vector<u64> extras;
  for (u64 id : region_edges(r.h, active))
    if (!std::binary_search(mst_ids.begin(), mst_ids.end(), id))
      extras.push_back(id);
  if (extras.empty()) return;

  Adj tree(r.h.n());
  for (u64 id : mst_ids) {
    auto [u, v] = edge_decode(id);
    adj_link(tree, u, v);
  }
  std::vector<char> allowed(r.h.n(), 0);
  for (int v : active) allowed[v] = 1;
  std::vector<int> parent(r.h.n(), -1);

  std::vector<std::pair<int, u64>> order;
  order.reserve(extras.size());
  for (u64 id : extras) {
    auto [u, v] = edge_decode(id);
    auto path = masked_path(tree, u, v, allowed, parent);
    order.emplace_back(static_cast<int>(path.size()) - 1, id);
  }
  std::sort(order.begin(), order.end());

  for (auto [len, id] : order) {
    auto [u, v] = edge_decode(id);
    std::vector<int> path = masked_path(tree, u, v, allowed, parent);
    double w = g.weight_linear(id);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      w += g.weight(path[i], path[i + 1]);
    r.h.reset(id);
    if (mirror) adj_unlink(*mirror, u, v);
    std::sort(path.begin(), path.end());
    r.record(std::move(path), w);
  }
}

// One absorption of x into the region u_sorted, on which H agrees with the
// MST. adj spans the region plus x's links into it.
void absorb_steps(Recorder& r, const std::vector<int>& u_sorted, int x,
                  Adj& adj, std::vector<char>& allowed,
                  std::vector<int>& parent) {
  std::vector<int> sources(adj[x]);
  std::sort(sources.begin(), sources.end());
  if (sources.empty())
    fail_invalid("absorb: vertex has no edge into the region");

  if (sources.size() == 1) {
    absorb_into_cell(r, u_sorted, x, adj, allowed, parent);
    return;
  }
  VoronoiPartition vor = voronoi_cells(*r.g, adj, u_sorted, sources);
  for (const auto& cell : vor.cells)
    absorb_into_cell(r, cell, x, adj, allowed, parent);

  std::vector<int> instance(u_sorted);
  instance.insert(std::lower_bound(instance.begin(), instance.end(), x), x);
  remove_cycles_steps(r, instance, &adj);
}

std::vector<int> checked_region(const Graph& g, const std::vector<int>& verts,
                                const char* who) {
  if (verts.empty()) fail_invalid(std::string(who) + ": empty vertex set");
  std::vector<int> out(verts);
  std::sort(out.begin(), out.end());
  if (out.front() < 0 || out.back() >= g.n() ||
      std::adjacent_find(out.begin(), out.end()) != out.end())
    fail_invalid(std::string(who) + ": bad vertex set");
  return out;
}

}  // namespace

VoronoiPartition voronoi_cells(const Graph& g,
                               const std::vector<std::vector<int>>& tree_adj,
                               const std::vector<int>& region,
                               const std::vector<int>& sources) {
  if (sources.empty()) fail_invalid("voronoi: no sources");
  VoronoiPartition out;
  out.sources = sources;
  out.cell_of.assign(g.n(), -1);
  out.cells.assign(sources.size(), {});

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(g.n(), inf);
  std::vector<char> in_region(g.n(), 0);
  for (int v : region) in_region[v] = 1;
  for (int v : sources)
    if (v < 0 || v >= g.n() || !in_region[v])
      fail_invalid("voronoi: source outside region");

  std::vector<double> dist(g.n());
  for (size_t si = 0; si < sources.size(); ++si) {
    std::vector<int> stack{sources[si]};
    dist[sources[si]] = 0.0;
    std::vector<char> seen(g.n(), 0);
    seen[sources[si]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (dist[u] < best[u]) {
        best[u] = dist[u];
        out.cell_of[u] = static_cast<int>(si);
      }
      for (int v : tree_adj[u]) {
        if (!in_region[v] || seen[v]) continue;
        seen[v] = 1;
        dist[v] = dist[u] + g.weight(u, v);
        stack.push_back(v);
      }
    }
  }
  for (int v : region) {
    if (out.cell_of[v] < 0) fail_invalid("voronoi: region is disconnected");
    out.cells[out.cell_of[v]].push_back(v);
  }
  for (auto& cell : out.cells) std::sort(cell.begin(), cell.end());
  return out;
}

ConstructionResult absorb_leaf(const Graph& g, const Subgraph& h,
                               const std::vector<int>& u_set, int x,
                               bool keep_subgraphs) {
  std::vector<int> u_sorted = checked_region(g, u_set, "absorb_leaf");
  if (x < 0 || x >= g.n() ||
      std::binary_search(u_sorted.begin(), u_sorted.end(), x))
    fail_invalid("absorb_leaf: bad absorbed vertex");
  if (!region_is_mst(g, h, u_sorted))
    fail_invalid("absorb_leaf: region does not carry its MST");

  std::vector<int> instance(u_sorted);
  instance.insert(std::lower_bound(instance.begin(), instance.end(), x), x);
  Adj adj = build_region_adj(h, instance);
  if (adj[x].size() != 1)
    fail_invalid("absorb_leaf: absorbed vertex is not a leaf");

  Recorder r(g, h, keep_subgraphs);
  std::vector<char> allowed(g.n(), 0);
  std::vector<int> parent(g.n(), -1);
  absorb_into_cell(r, u_sorted, x, adj, allowed, parent);
  bool reached = region_is_mst(g, r.h, instance);
  return r.finish(h, reached);
}

ConstructionResult absorb_vertex(const Graph& g, const Subgraph& h,
                                 const std::vector<int>& u_set, int x,
                                 bool keep_subgraphs) {
  std::vector<int> u_sorted = checked_region(g, u_set, "absorb_vertex");
  if (x < 0 || x >= g.n() ||
      std::binary_search(u_sorted.begin(), u_sorted.end(), x))
    fail_invalid("absorb_vertex: bad absorbed vertex");
  if (!region_is_mst(g, h, u_sorted))
    fail_invalid("absorb_vertex: region does not carry its MST");

  std::vector<int> instance(u_sorted);
  instance.insert(std::lower_bound(instance.begin(), instance.end(), x), x);
  Adj adj = build_region_adj(h, instance);

  Recorder r(g, h, keep_subgraphs);
  std::vector<char> allowed(g.n(), 0);
  std::vector<int> parent(g.n(), -1);
  absorb_steps(r, u_sorted, x, adj, allowed, parent);
  bool reached = region_is_mst(g, r.h, instance);
  return r.finish(h, reached);
}

ConstructionResult remove_cycles(const Graph& g, const Subgraph& h,
                                 bool keep_subgraphs) {
  std::vector<int> active(g.n());
  for (int v = 0; v < g.n(); ++v) active[v] = v;
  return remove_cycles_within(g, h, active, keep_subgraphs);
}

ConstructionResult remove_cycles_within(const Graph& g, const Subgraph& h,
                                        const std::vector<int>& active,
                                        bool keep_subgraphs) {
  std::vector<int> sorted = checked_region(g, active, "remove_cycles");
  Recorder r(g, h, keep_subgraphs);
  remove_cycles_steps(r, sorted, nullptr);
  bool reached = region_is_mst(g, r.h, sorted);
  return r.finish(h, reached);
}

ConstructionResult eat(const Graph& g, const Subgraph& h,
                       const std::vector<int>& u0,
                       const std::vector<int>& order, bool keep_subgraphs) {
  std::vector<int> u_sorted = checked_region(g, u0, "eat");
  std::vector<char> in_u(g.n(), 0);
  for (int v : u_sorted) in_u[v] = 1;
  for (int x : order) {
    if (x < 0 || x >= g.n() || in_u[x])
      fail_invalid("eat: order revisits or leaves the graph");
    in_u[x] = 1;
  }
  if (!region_is_mst(g, h, u_sorted))
    fail_invalid("eat: starting region does not carry its MST");

  Recorder r(g, h, keep_subgraphs);
  Adj adj = build_region_adj(h, u_sorted);
  std::vector<char> allowed(g.n(), 0);
  std::vector<int> parent(g.n(), -1);
  for (int x : order) {
    for (int u : u_sorted)
      if (r.h.has(std::min(u, x), std::max(u, x))) adj_link(adj, u, x);
    absorb_steps(r, u_sorted, x, adj, allowed, parent);
    u_sorted.insert(std::lower_bound(u_sorted.begin(), u_sorted.end(), x), x);
  }
  bool reached = region_is_mst(g, r.h, u_sorted);
  return r.finish(h, reached);
}

std::vector<int> bfs_increment_order(const Subgraph& h,
                                     const std::vector<int>& v0) {
  const int n = h.n();
  if (v0.empty()) fail_invalid("bfs_increment_order: empty start set");
  std::vector<char> seen(n, 0);
  for (int v : v0) {
    if (v < 0 || v >= n) fail_invalid("bfs_increment_order: bad start vertex");
    seen[v] = 1;
  }
  Adj adj = h.adjacency();
  std::vector<int> layer;
  for (int v : v0) layer.push_back(v);
  std::vector<int> out;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int u : layer)
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          next.push_back(v);
        }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) fail_invalid("bfs_increment_order: graph is disconnected");
  return out;
}

}  // namespace mstlab
