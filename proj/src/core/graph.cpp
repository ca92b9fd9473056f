#include "graph.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mstlab {

EdgeId edge_decode(u64 linear) {
  // Invert v(v-1)/2 <= linear < (v+1)v/2.
  int v = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(linear))) / 2.0);
  while (static_cast<u64>(v) * (v - 1) / 2 > linear) --v;
  while (static_cast<u64>(v + 1) * v / 2 <= linear) ++v;
  int u = static_cast<int>(linear - static_cast<u64>(v) * (v - 1) / 2);
  return {u, v};
}

Graph Graph::sample(int n, DistPtr dist, u64 seed) {
  if (n < 2) fail_invalid("graph needs at least 2 vertices");
  if (!dist) fail_invalid("null distribution");
  Graph g;
  g.n_ = n;
  g.materialized_ = false;
  g.seed_ = seed;
  g.dist_ = std::move(dist);
  return g;
}

Graph Graph::fixed(int n, std::vector<double> weights) {
  if (n < 2) fail_invalid("graph needs at least 2 vertices");
  if (weights.size() != edge_count(n))
    fail_invalid("expected " + std::to_string(edge_count(n)) + " weights, got " + std::to_string(weights.size()));
  double hi = 0.0;
  for (double w : weights) {
    if (!(w > 0) || !std::isfinite(w)) fail_invalid("edge weights must be positive and finite");
    hi = std::max(hi, w);
  }
  Graph g;
  g.n_ = n;
  g.materialized_ = true;
  g.weights_ = std::move(weights);
  g.rho_star_fixed_ = hi;
  return g;
}

// Text format: first line n, then one "u v weight" triple per line with
// 1-based labels and u < v.  Every pair must be present.
Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_io("cannot open '" + path + "'");
  int n = 0;
  if (!(in >> n) || n < 2) fail_io("bad vertex count in '" + path + "'");
  std::vector<double> w(edge_count(n), -1.0);
  int u, v;
  double x;
  while (in >> u >> v >> x) {
    if (u < 1 || v < 1 || u > n || v > n || u >= v) fail_io("bad edge '" + std::to_string(u) + " " + std::to_string(v) + "'");
    w[edge_linear(u - 1, v - 1)] = x;
  }
  for (u64 i = 0; i < w.size(); ++i) {
    if (w[i] < 0) {
      EdgeId e = edge_decode(i);
      fail_io("missing weight for edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1));
    }
  }
  return fixed(n, std::move(w));
}

void Graph::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail_io("cannot write '" + path + "'");
  out << n_ << "\n";
  std::ostringstream line;
  line.precision(17);
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      line.str("");
      line << (u + 1) << " " << (v + 1) << " " << weight(u, v) << "\n";
      out << line.str();
    }
  }
}

StartKind parse_start_kind(const std::string& name) {
  if (name == "path") return StartKind::path;
  if (name == "star") return StartKind::star;
  if (name == "clique") return StartKind::clique;
  if (name == "tree" || name == "random_spanning_tree") return StartKind::random_spanning_tree;
  fail_invalid("unknown start graph '" + name + "'");
}

const char* start_kind_name(StartKind kind) {
  switch (kind) {
    case StartKind::path: return "path";
    case StartKind::star: return "star";
    case StartKind::clique: return "clique";
    case StartKind::random_spanning_tree: return "tree";
  }
  return "?";
}

}  // namespace mstlab
