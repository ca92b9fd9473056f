#include "subgraph.hpp"

#include <bit>

namespace mstlab {

std::size_t Subgraph::edge_count_set() const {
  std::size_t c = 0;
  for (u64 word : bits_) c += std::popcount(word);
  return c;
}

std::vector<u64> Subgraph::edge_list() const {
  std::vector<u64> out;
  out.reserve(edge_count_set());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    u64 word = bits_[i];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back((static_cast<u64>(i) << 6) + b);
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::vector<int>> Subgraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (u64 e : edge_list()) {
    EdgeId id = edge_decode(e);
    adj[id.u].push_back(id.v);
    adj[id.v].push_back(id.u);
  }
  return adj;
}

double Subgraph::total_weight(const Graph& g) const {
  double sum = 0.0;
  for (u64 e : edge_list()) sum += g.weight_linear(e);
  return sum;
}

bool Subgraph::connected() const {
  if (n_ == 0) return false;
  auto adj = adjacency();
  std::vector<char> seen(n_, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n_;
}

Subgraph Subgraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Subgraph h(n);
  for (auto [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) fail_invalid("bad edge in edge list");
    h.add(u, v);
  }
  return h;
}

Subgraph Subgraph::make_start(StartKind kind, int n, u64 seed) {
  if (n < 2) fail_invalid("start graph needs at least 2 vertices");
  Subgraph h(n);
  switch (kind) {
    case StartKind::path:
      for (int i = 0; i + 1 < n; ++i) h.add(i, i + 1);
      break;
    case StartKind::star:
      for (int i = 0; i + 1 < n; ++i) h.add(i, n - 1);
      break;
    case StartKind::clique:
      for (u64 e = 0; e < edge_count(n); ++e) h.set(e);
      break;
    case StartKind::random_spanning_tree: {
      // Uniform labeled tree by Pruefer decoding of a seeded code sequence.
      if (n == 2) {
        h.add(0, 1);
        break;
      }
      std::vector<int> code(n - 2);
      for (int i = 0; i < n - 2; ++i)
        code[i] = static_cast<int>(uniform_below(seed, 0x7ee5e5u + i, static_cast<u64>(n)));
      std::vector<int> degree(n, 1);
      for (int c : code) ++degree[c];
      int ptr = 0;
      while (degree[ptr] != 1) ++ptr;
      int leaf = ptr;
      for (int c : code) {
        h.add(leaf, c);
        if (--degree[c] == 1 && c < ptr) {
          leaf = c;
        } else {
          ++ptr;
          while (degree[ptr] != 1) ++ptr;
          leaf = ptr;
        }
      }
      h.add(leaf, n - 1);
      break;
    }
  }
  return h;
}

}  // namespace mstlab
