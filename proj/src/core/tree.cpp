#include "tree.hpp"

#include <algorithm>
#include <limits>

#include "common.hpp"

namespace mstlab {

namespace {

// Iterative traversal accumulating weighted distance and parents from src.
void sweep(const TreeView& t, int src, std::vector<double>& dist,
           std::vector<int>& parent) {
  const int n = t.n();
  dist.assign(n, -1.0);
  parent.assign(n, -1);
  std::vector<int> stack{src};
  dist[src] = 0.0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : t.neighbors(u)) {
      if (dist[v] >= 0.0) continue;
      dist[v] = dist[u] + t.weight(u, v);
      parent[v] = u;
      stack.push_back(v);
    }
  }
}

int bfs_depths(const TreeView& t, int src, std::vector<int>& depth) {
  const int n = t.n();
  depth.assign(n, -1);
  std::vector<int> queue{src};
  depth[src] = 0;
  int far = src;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    if (depth[u] > depth[far]) far = u;
    for (int v : t.neighbors(u)) {
      if (depth[v] >= 0) continue;
      depth[v] = depth[u] + 1;
      queue.push_back(v);
    }
  }
  return far;
}

}  // namespace

TreeView::TreeView(const Graph& g, const Subgraph& tree) : g_(&g) {
  const int n = g.n();
  if (tree.n() != n) fail_invalid("tree view: vertex count mismatch");
  if (tree.edge_count_set() != static_cast<u64>(n) - 1 || !tree.connected())
    fail_invalid("tree view: edge set is not a spanning tree");
  adj_ = tree.adjacency();
}

std::vector<double> TreeView::distances_from(int src) const {
  if (src < 0 || src >= n()) fail_invalid("distances_from: vertex out of range");
  std::vector<double> dist;
  std::vector<int> parent;
  sweep(*this, src, dist, parent);
  return dist;
}

double TreeView::dist(int u, int v) const { return distances_from(u)[v]; }

double wdiam(const TreeView& t) {
  if (t.n() <= 1) return 0.0;
  std::vector<double> dist;
  std::vector<int> parent;
  sweep(t, 0, dist, parent);
  int a = static_cast<int>(std::max_element(dist.begin(), dist.end()) -
                           dist.begin());
  sweep(t, a, dist, parent);
  return *std::max_element(dist.begin(), dist.end());
}

int diam(const TreeView& t) {
  if (t.n() <= 1) return 0;
  std::vector<int> depth;
  int a = bfs_depths(t, 0, depth);
  bfs_depths(t, a, depth);
  return *std::max_element(depth.begin(), depth.end());
}

std::vector<int> tree_path(const TreeView& t, int u, int v) {
  if (u == v) fail_invalid("tree_path: endpoints must differ");
  if (u < 0 || v < 0 || u >= t.n() || v >= t.n())
    fail_invalid("tree_path: vertex out of range");
  std::vector<double> dist;
  std::vector<int> parent;
  sweep(t, u, dist, parent);
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

double wdiam_all_pairs(const TreeView& t) {
  double best = 0.0;
  for (int u = 0; u < t.n(); ++u) {
    auto dist = t.distances_from(u);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

int diam_all_pairs(const TreeView& t) {
  int best = 0;
  for (int u = 0; u < t.n(); ++u) {
    std::vector<int> depth;
    bfs_depths(t, u, depth);
    best = std::max(best, *std::max_element(depth.begin(), depth.end()));
  }
  return best;
}

}  // namespace mstlab
