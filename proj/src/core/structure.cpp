#include "structure.hpp"

#include <algorithm>
#include <cmath>

#include "common.hpp"

namespace mstlab {

namespace {

// BFS depths; returns the deepest vertex, ties to the smallest index.
int bfs_farthest(const std::vector<std::vector<int>>& adj, int src,
                 std::vector<int>& parent, bool* all_reached) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> depth(n, -1);
  parent.assign(n, -1);
  std::vector<int> queue{src};
  depth[src] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : adj[u]) {
      if (depth[v] >= 0) continue;
      depth[v] = depth[u] + 1;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (all_reached)
    *all_reached = (static_cast<int>(queue.size()) == n);
  int far = src;
  for (int v = 0; v < n; ++v)
    if (depth[v] > depth[far]) far = v;
  return far;
}

StructuralWitness eccentric_path(const std::vector<std::vector<int>>& adj) {
  std::vector<int> parent;
  bool all = false;
  int a = bfs_farthest(adj, 0, parent, &all);
  if (!all) fail_invalid("find_witness: graph is disconnected");
  int b = bfs_farthest(adj, a, parent, nullptr);
  StructuralWitness w;
  w.kind = WitnessKind::path;
  w.vertices.push_back(b);
  while (w.vertices.back() != a) w.vertices.push_back(parent[w.vertices.back()]);
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

}  // namespace

const char* witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::clique: return "clique";
    case WitnessKind::star: return "star";
    case WitnessKind::path: return "path";
  }
  return "?";
}

bool certify_witness(const Subgraph& h, const StructuralWitness& w) {
  const int k = static_cast<int>(w.vertices.size());
  if (k == 0) return false;
  std::vector<int> sorted(w.vertices);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= h.n() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  switch (w.kind) {
    case WitnessKind::clique:
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (!h.has(w.vertices[a], w.vertices[b])) return false;
      return true;
    case WitnessKind::star: {
      if (k < 2 || w.center != w.vertices.back()) return false;
      for (int a = 0; a + 1 < k; ++a)
        if (!h.has(w.vertices[a], w.center)) return false;
      for (int a = 0; a + 1 < k; ++a)
        for (int b = a + 1; b + 1 < k; ++b)
          if (h.has(w.vertices[a], w.vertices[b])) return false;
      return true;
    }
    case WitnessKind::path: {
      if (k < 2) return false;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          bool adjacent = h.has(w.vertices[a], w.vertices[b]);
          if (adjacent != (b == a + 1)) return false;
        }
      return true;
    }
  }
  return false;
}

int witness_size_bound(int n) {
  if (n < 2) fail_invalid("witness_size_bound: need n >= 2");
  return std::max(
      1, static_cast<int>(std::ceil(0.5 * std::sqrt(std::log2(double(n))))));
}

std::vector<int> pivot_ramsey(const Subgraph& h, const std::vector<int>& verts,
                              bool* clique) {
  if (verts.empty()) fail_invalid("pivot_ramsey: empty vertex set");
  std::vector<int> cur(verts);
  std::sort(cur.begin(), cur.end());
  if (cur.front() < 0 || cur.back() >= h.n() ||
      std::adjacent_find(cur.begin(), cur.end()) != cur.end())
    fail_invalid("pivot_ramsey: bad vertex set");

  std::vector<int> clique_side, indep_side;
  while (!cur.empty()) {
    int p = cur.front();
    if (cur.size() == 1) {
      // The survivor is adjacent to every clique member and none of the
      // independent ones, so it extends both candidates.
      clique_side.push_back(p);
      indep_side.push_back(p);
      break;
    }
    std::vector<int> nb, nnb;
    for (size_t i = 1; i < cur.size(); ++i)
      (h.has(p, cur[i]) ? nb : nnb).push_back(cur[i]);
    if (nb.size() >= nnb.size()) {
      clique_side.push_back(p);
      cur = std::move(nb);
    } else {
      indep_side.push_back(p);
      cur = std::move(nnb);
    }
  }
  bool pick_clique = clique_side.size() >= indep_side.size();
  if (clique) *clique = pick_clique;
  return pick_clique ? clique_side : indep_side;
}

StructuralWitness find_witness(const Subgraph& h) {
  const int n = h.n();
  if (n < 2) fail_invalid("find_witness: need n >= 2");
  auto adj = h.adjacency();

  std::vector<StructuralWitness> candidates;
  candidates.push_back(eccentric_path(adj));

  int hub = 0;
  for (int v = 1; v < n; ++v)
    if (adj[v].size() > adj[hub].size()) hub = v;
  double m = std::pow(double(n), 1.0 / std::sqrt(std::log2(double(n))));
  if (static_cast<double>(adj[hub].size()) >= std::ceil(m)) {
    bool is_clique = false;
    std::vector<int> found = pivot_ramsey(h, adj[hub], &is_clique);
    StructuralWitness w;
    if (is_clique) {
      w.kind = WitnessKind::clique;
      w.vertices = std::move(found);
      w.vertices.insert(
          std::lower_bound(w.vertices.begin(), w.vertices.end(), hub), hub);
    } else {
      w.kind = WitnessKind::star;
      w.vertices = std::move(found);
      w.vertices.push_back(hub);
      w.center = hub;
    }
    candidates.push_back(std::move(w));
  }

  if (n <= 16) {
    StructuralWitness star;
    star.kind = WitnessKind::star;
    for (int u : adj[hub]) {
      bool independent = true;
      for (int kept : star.vertices)
        if (h.has(u, kept)) independent = false;
      if (independent) star.vertices.push_back(u);
    }
    star.vertices.push_back(hub);
    star.center = hub;
    candidates.push_back(std::move(star));

    StructuralWitness clique;
    clique.kind = WitnessKind::clique;
    clique.vertices.push_back(hub);
    for (int u = 0; u < n; ++u) {
      if (u == hub) continue;
      bool joined = true;
      for (int kept : clique.vertices)
        if (!h.has(u, kept)) joined = false;
      if (joined) clique.vertices.push_back(u);
    }
    std::sort(clique.vertices.begin(), clique.vertices.end());
    candidates.push_back(std::move(clique));
  }

  auto rank = [](WitnessKind kind) {
    switch (kind) {
      case WitnessKind::clique: return 2;
      case WitnessKind::star: return 1;
      case WitnessKind::path: return 0;
    }
    return -1;
  };
  const StructuralWitness* best = nullptr;
  for (const auto& w : candidates) {
    if (!certify_witness(h, w)) continue;
    if (!best || w.vertices.size() > best->vertices.size() ||
        (w.vertices.size() == best->vertices.size() &&
         rank(w.kind) > rank(best->kind)))
      best = &w;
  }
  if (!best) fail_internal("find_witness: no certified candidate");
  return *best;
}

}  // namespace mstlab
