#pragma once

#include <vector>

#include "graph.hpp"

namespace mstlab {

// Spanning subgraph of the complete graph on [n]: a bitset over linear edge
// indices.  This is the evolving local-search state H.
class Subgraph {
 public:
  Subgraph() = default;
  explicit Subgraph(int n) : n_(n), bits_((edge_count(n) + 63) / 64, 0) {}

  int n() const { return n_; }

  bool test(u64 e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
  bool has(int u, int v) const { return u != v && test(u < v ? edge_linear(u, v) : edge_linear(v, u)); }
  void set(u64 e) { bits_[e >> 6] |= (1ULL << (e & 63)); }
  void reset(u64 e) { bits_[e >> 6] &= ~(1ULL << (e & 63)); }
  void add(int u, int v) { set(pair_index(u, v)); }
  void remove(int u, int v) { reset(pair_index(u, v)); }

  std::size_t edge_count_set() const;
  std::vector<u64> edge_list() const;
  std::vector<std::vector<int>> adjacency() const;

  double total_weight(const Graph& g) const;
  bool connected() const;
  bool is_spanning_tree() const { return edge_count_set() == static_cast<std::size_t>(n_ - 1) && connected(); }

  bool operator==(const Subgraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Subgraph& o) const { return !(*this == o); }

  static Subgraph make_start(StartKind kind, int n, u64 seed);
  static Subgraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

 private:
  u64 pair_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
      fail_invalid("subgraph: bad vertex pair");
    return u < v ? edge_linear(u, v) : edge_linear(v, u);
  }

  int n_ = 0;
  std::vector<u64> bits_;
};

}  // namespace mstlab
