#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "common.hpp"
#include "distribution.hpp"
#include "rng.hpp"

namespace mstlab {

// Vertices are 0-based internally; text formats and the C API use 1-based
// labels.  Edges of the complete graph are addressed by a linear index that
// enumerates pairs (u,v), u < v, in order of increasing v.
inline u64 edge_count(int n) { return static_cast<u64>(n) * (n - 1) / 2; }

inline u64 edge_linear(int u, int v) {
  // u < v assumed; equals (v-1)(v-2)/2 + (u-1) in 1-based labels.
  return static_cast<u64>(v) * (v - 1) / 2 + static_cast<u64>(u);
}

struct EdgeId {
  int u, v;  // u < v
};

EdgeId edge_decode(u64 linear);

// Complete graph on n vertices with one weight per unordered pair.  Weights
// are either materialized (fixed graphs) or derived on demand from (seed,
// linear index) through the distribution's inverse CDF.  Immutable.
class Graph {
 public:
  static Graph sample(int n, DistPtr dist, u64 seed);
  static Graph fixed(int n, std::vector<double> weights);
  static Graph load(const std::string& path);

  int n() const { return n_; }
  u64 edges() const { return edge_count(n_); }
  bool seeded() const { return !materialized_; }
  u64 seed() const { return seed_; }
  const DistPtr& dist() const { return dist_; }
  double rho_star() const { return dist_ ? dist_->rho_star() : rho_star_fixed_; }

  double weight_linear(u64 linear) const {
    if (materialized_) return weights_[linear];
    return dist_->inverse_cdf(uniform01(seed_, linear));
  }

  double weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    return weight_linear(edge_linear(u, v));
  }

  // Strict total order on edges: by (weight, linear index).  Restores the
  // paper-level assumption of generic (pairwise distinct) weights.
  bool edge_less(u64 a, u64 b) const {
    double wa = weight_linear(a), wb = weight_linear(b);
    if (wa != wb) return wa < wb;
    return a < b;
  }

  void save(const std::string& path) const;

 private:
  Graph() = default;

  int n_ = 0;
  bool materialized_ = false;
  u64 seed_ = 0;
  DistPtr dist_;
  double rho_star_fixed_ = 1.0;
  std::vector<double> weights_;
};

enum class StartKind { path, star, clique, random_spanning_tree };

StartKind parse_start_kind(const std::string& name);
const char* start_kind_name(StartKind kind);

}  // namespace mstlab
