#include "local_search.hpp"

#include <algorithm>
#include <limits>

#include "common.hpp"
#include "dsu.hpp"
#include "kruskal.hpp"

namespace mstlab {

namespace {

std::vector<int> checked_sorted_set(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) fail_invalid("phi: empty vertex set");
  std::vector<int> out(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.front() < 0 || out.back() >= g.n())
    fail_invalid("phi: vertex out of range");
  return out;
}

}  // namespace

std::vector<u64> induced_mst_edges(const Graph& g, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  std::vector<u64> out;
  if (k <= 1) return out;
  std::vector<char> in_tree(k, 0);
  std::vector<double> best_w(k, std::numeric_limits<double>::infinity());
  std::vector<u64> best_id(k, 0);
  in_tree[0] = 1;
  for (int j = 1; j < k; ++j) {
    best_id[j] = edge_linear(std::min(s[0], s[j]), std::max(s[0], s[j]));
    best_w[j] = g.weight_linear(best_id[j]);
  }
  for (int round = 1; round < k; ++round) {
    int pick = -1;
    for (int j = 1; j < k; ++j) {
      if (in_tree[j]) continue;
      if (pick < 0 || best_w[j] < best_w[pick] ||
          (best_w[j] == best_w[pick] && best_id[j] < best_id[pick]))
        pick = j;
    }
    in_tree[pick] = 1;
    out.push_back(best_id[pick]);
    for (int j = 1; j < k; ++j) {
      if (in_tree[j]) continue;
      u64 id = edge_linear(std::min(s[pick], s[j]), std::max(s[pick], s[j]));
      double w = g.weight_linear(id);
      if (w < best_w[j] || (w == best_w[j] && id < best_id[j])) {
        best_w[j] = w;
        best_id[j] = id;
      }
    }
  }
  return out;
}

double apply_phi_inplace(const Graph& g, Subgraph& h, const std::vector<int>& s,
                         bool* noop) {
  if (noop) *noop = false;
  std::vector<int> set = checked_sorted_set(g, s);
  const int k = static_cast<int>(set.size());
  if (k == 1) return 0.0;

  std::vector<u64> induced;
  double weight = 0.0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      u64 id = edge_linear(set[a], set[b]);
      if (h.test(id)) {
        induced.push_back(id);
        weight += g.weight_linear(id);
      }
    }
  }

  std::vector<int> pos(g.n(), -1);
  for (int j = 0; j < k; ++j) pos[set[j]] = j;
  Dsu dsu(k);
  int merges = 0;
  for (u64 id : induced) {
    auto [u, v] = edge_decode(id);
    if (dsu.unite(pos[u], pos[v])) ++merges;
  }
  if (merges != k - 1) {
    if (noop) *noop = true;
    return 0.0;
  }

  for (u64 id : induced) h.reset(id);
  for (u64 id : induced_mst_edges(g, set)) h.set(id);
  return weight;
}

Subgraph phi(const Graph& g, const Subgraph& h, const std::vector<int>& s) {
  if (h.n() != g.n()) fail_invalid("phi: subgraph size mismatch");
  Subgraph out(h);
  apply_phi_inplace(g, out, s);
  return out;
}

SequenceTrace run_sequence(const Graph& g, const Subgraph& h0,
                           const OptimizingSequence& seq,
                           bool keep_subgraphs) {
  if (h0.n() != g.n()) fail_invalid("run_sequence: subgraph size mismatch");
  SequenceTrace trace;
  trace.h0 = h0;
  Subgraph h(h0);
  if (keep_subgraphs) trace.subgraphs.push_back(h);
  trace.step_weights.reserve(seq.sets.size());
  trace.noop_steps.reserve(seq.sets.size());
  for (const auto& s : seq.sets) {
    bool noop = false;
    double w = apply_phi_inplace(g, h, s, &noop);
    trace.step_weights.push_back(w);
    trace.noop_steps.push_back(noop ? 1 : 0);
    trace.wt_max = std::max(trace.wt_max, w);
    if (keep_subgraphs) trace.subgraphs.push_back(h);
  }
  trace.final = h;
  trace.reached_mst = (h == mst(g));
  return trace;
}

PersistenceReport check_persistence(const Graph& g,
                                    const SequenceTrace& trace) {
  if (!trace.has_subgraphs())
    fail_invalid("check_persistence: trace lacks recorded subgraphs");
  PersistenceReport rep;
  Subgraph opt = mst(g);
  auto mst_edges = opt.edge_list();
  const int n = g.n();
  auto is_tree = [n](const Subgraph& h) {
    return h.edge_count_set() == static_cast<u64>(n) - 1 && h.connected();
  };
  bool was_tree = is_tree(trace.subgraphs.front());
  for (size_t i = 0; i + 1 < trace.subgraphs.size(); ++i) {
    const Subgraph& cur = trace.subgraphs[i];
    const Subgraph& nxt = trace.subgraphs[i + 1];
    for (u64 e : mst_edges) {
      if (cur.test(e) && !nxt.test(e)) {
        rep.ok = false;
        rep.violation_step = static_cast<int>(i);
        rep.detail = "mst edge dropped";
        return rep;
      }
    }
    bool next_tree = is_tree(nxt);
    if (was_tree && !next_tree) {
      rep.ok = false;
      rep.violation_step = static_cast<int>(i);
      rep.detail = "tree-ness lost";
      return rep;
    }
    was_tree = next_tree;
  }
  return rep;
}

std::pair<double, double> cost1_bounds(const Graph& g, const Subgraph& h) {
  if (h.n() != g.n()) fail_invalid("cost1_bounds: subgraph size mismatch");
  if (!h.connected()) fail_invalid("cost1_bounds: subgraph is disconnected");
  Subgraph opt = mst(g);
  double lower = 0.0, upper = 0.0;
  for (u64 e : h.edge_list()) {
    double w = g.weight_linear(e);
    upper += w;
    if (!opt.test(e)) lower += w;
  }
  return {lower, upper};
}

HeavyEdgeFloor heavy_edge_floor(const Graph& g, const Subgraph& h,
                                double epsilon) {
  double rho = g.rho_star();
  if (!(epsilon > 0.0) || !(epsilon < rho))
    fail_invalid("heavy_edge_floor: epsilon must lie in (0, rho*)");
  HeavyEdgeFloor out;
  out.threshold = rho - epsilon;
  for (u64 e : h.edge_list())
    if (g.weight_linear(e) > out.threshold) ++out.count;
  out.weight_floor = static_cast<double>(out.count) * out.threshold;
  return out;
}

bool heavy_edges_retained(const Graph& g, const SequenceTrace& trace,
                          double epsilon) {
  double threshold = g.rho_star() - epsilon;
  if (trace.wt_max > threshold) return true;
  for (u64 e : trace.h0.edge_list())
    if (g.weight_linear(e) > threshold && !trace.final.test(e)) return false;
  return true;
}

}  // namespace mstlab
