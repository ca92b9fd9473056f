#include "starpath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "dsu.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"
#include "rng.hpp"

namespace mstlab {

namespace {

void append_result(ConstructionResult& acc, ConstructionResult&& next) {
  for (auto& s : next.seq.sets) acc.seq.sets.push_back(std::move(s));
  acc.trace.step_weights.insert(acc.trace.step_weights.end(),
                                next.trace.step_weights.begin(),
                                next.trace.step_weights.end());
  acc.trace.noop_steps.insert(acc.trace.noop_steps.end(),
                              next.trace.noop_steps.begin(),
                              next.trace.noop_steps.end());
  acc.trace.wt_max = std::max(acc.trace.wt_max, next.trace.wt_max);
  if (!next.trace.subgraphs.empty()) {
    size_t skip = acc.trace.subgraphs.empty() ? 0 : 1;
    for (size_t i = skip; i < next.trace.subgraphs.size(); ++i)
      acc.trace.subgraphs.push_back(std::move(next.trace.subgraphs[i]));
  }
  acc.trace.final = next.trace.final;
  acc.trace.reached_mst = next.trace.reached_mst;
}

ConstructionResult solve_with_run(const Graph& g, const Subgraph& h,
                                  const CanonicalLabeling& lab,
                                  const RunIndex& run, bool keep_subgraphs) {
  USequence useq = u_sequence(run, lab);

  ConstructionResult out;
  out.trace.h0 = h;
  out.trace.final = h;
  Subgraph cur(h);
  bool noop = false;
  std::vector<int> first(useq.u0);
  std::sort(first.begin(), first.end());
  double w0 = apply_phi_inplace(g, cur, first, &noop);
  if (noop) fail_internal("solve_star_or_path: first window disconnected");
  out.seq.sets.push_back(first);
  out.trace.step_weights.push_back(w0);
  out.trace.noop_steps.push_back(0);
  out.trace.wt_max = w0;
  if (keep_subgraphs) {
    out.trace.subgraphs.push_back(h);
    out.trace.subgraphs.push_back(cur);
  }
  append_result(out, eat(g, cur, useq.u0, useq.additions, keep_subgraphs));
  return out;
}

}  // namespace

std::vector<int> CanonicalLabeling::vertex_window(int i, int j) const {
  const int t = size();
  if (i < 1 || j <= i || j > t) fail_invalid("vertex_window: bad range");
  std::vector<int> out;
  if (kind == WitnessKind::path) {
    for (int a = i; a <= j; ++a) out.push_back(order[a - 1]);
  } else {
    for (int a = i; a < j; ++a) out.push_back(order[a - 1]);
    out.push_back(order.back());
  }
  return out;
}

CanonicalLabeling canonical_labeling(const StructuralWitness& w) {
  const int t = static_cast<int>(w.vertices.size());
  if (t < 2) fail_invalid("canonical_labeling: need at least two vertices");
  CanonicalLabeling lab;
  switch (w.kind) {
    case WitnessKind::clique:
      fail_invalid("canonical_labeling: input must be a star or path");
    case WitnessKind::path: {
      lab.kind = WitnessKind::path;
      lab.order = w.vertices;
      if (lab.order.back() < lab.order.front())
        std::reverse(lab.order.begin(), lab.order.end());
      for (int a = 0; a + 1 < t; ++a) {
        int u = lab.order[a], v = lab.order[a + 1];
        lab.edge_ids.push_back(edge_linear(std::min(u, v), std::max(u, v)));
      }
      break;
    }
    case WitnessKind::star: {
      if (w.center != w.vertices.back())
        fail_invalid("canonical_labeling: star center must be last");
      lab.kind = WitnessKind::star;
      lab.order.assign(w.vertices.begin(), w.vertices.end() - 1);
      std::sort(lab.order.begin(), lab.order.end());
      lab.order.push_back(w.center);
      for (int a = 0; a + 1 < t; ++a) {
        int u = lab.order[a], v = w.center;
        lab.edge_ids.push_back(edge_linear(std::min(u, v), std::max(u, v)));
      }
      break;
    }
  }
  return lab;
}

CanonicalLabeling canonical_labeling(const Subgraph& h) {
  const int n = h.n();
  if (n < 2) fail_invalid("canonical_labeling: need n >= 2");
  if (h.edge_count_set() != static_cast<u64>(n) - 1)
    fail_invalid("canonical_labeling: not a star or path");
  auto adj = h.adjacency();

  if (n >= 3) {
    int center = -1;
    for (int v = 0; v < n; ++v)
      if (static_cast<int>(adj[v].size()) == n - 1) center = v;
    if (center >= 0) {
      StructuralWitness w;
      w.kind = WitnessKind::star;
      for (int v = 0; v < n; ++v)
        if (v != center) w.vertices.push_back(v);
      w.vertices.push_back(center);
      w.center = center;
      return canonical_labeling(w);
    }
  }

  std::vector<int> ends;
  for (int v = 0; v < n; ++v) {
    size_t d = adj[v].size();
    if (d == 1)
      ends.push_back(v);
    else if (d != 2)
      fail_invalid("canonical_labeling: not a star or path");
  }
  if (n == 2) ends = {0, 1};
  if (ends.size() != 2) fail_invalid("canonical_labeling: not a star or path");
  StructuralWitness w;
  w.kind = WitnessKind::path;
  int cur = std::min(ends[0], ends[1]), prev = -1;
  w.vertices.push_back(cur);
  while (static_cast<int>(w.vertices.size()) < n) {
    int next = -1;
    for (int u : adj[cur])
      if (u != prev) next = u;
    if (next < 0) fail_invalid("canonical_labeling: not a star or path");
    prev = cur;
    cur = next;
    w.vertices.push_back(cur);
  }
  return canonical_labeling(w);
}

RunIndex run_index(const Graph& g, const CanonicalLabeling& lab,
                   double w_threshold, int run_length) {
  const int t = lab.size();
  if (run_length < 2 || run_length >= t - 1)
    fail_invalid("run_index: run length out of range");
  if (!(w_threshold > 0.0) || !(w_threshold < g.rho_star()))
    fail_invalid("run_index: weight threshold out of range");
  RunIndex out;
  out.w_threshold = w_threshold;
  out.run_length = run_length;
  out.index = t - run_length;
  int run = 0;
  for (int j = 1; j <= t - 1; ++j) {
    if (g.weight_linear(lab.edge_ids[j - 1]) <= w_threshold)
      ++run;
    else
      run = 0;
    if (run >= run_length) {
      out.index = j - run_length + 1;
      break;
    }
  }
  out.found = out.index < t - run_length;
  return out;
}

USequence u_sequence(const RunIndex& run, const CanonicalLabeling& lab) {
  if (!run.found)
    fail_domain("u_sequence: run index at its cap, no qualifying run");
  const int t = lab.size();
  const int I = run.index;
  const int L = run.run_length;
  USequence out;
  out.u0 = lab.vertex_window(I, I + L);
  if (lab.kind == WitnessKind::path) {
    for (int a = I + L; a <= t - 1; ++a) out.additions.push_back(lab.order[a]);
  } else {
    for (int a = I + L - 1; a <= t - 2; ++a)
      out.additions.push_back(lab.order[a]);
  }
  out.right_count = static_cast<int>(out.additions.size());
  for (int i = I - 1; i >= 1; --i) out.additions.push_back(lab.order[i - 1]);
  double minor_cap = std::pow(double(L), 20.0);
  out.right_minor_count =
      minor_cap >= double(out.right_count)
          ? out.right_count
          : static_cast<int>(minor_cap);
  return out;
}

double default_w_threshold(int t, double rho_star) {
  if (t < 3) fail_invalid("default_w_threshold: need t >= 3");
  return rho_star / std::log(double(t));
}

int default_run_length(int t) {
  if (t < 3) fail_invalid("default_run_length: need t >= 3");
  return std::max(2, static_cast<int>(std::floor(std::log(std::log(double(t))))));
}

ConstructionResult solve_star_or_path(const Graph& g, const Subgraph& h,
                                      double w_threshold, int run_length,
                                      bool keep_subgraphs) {
  if (h.n() != g.n()) fail_invalid("solve_star_or_path: size mismatch");
  CanonicalLabeling lab = canonical_labeling(h);
  RunIndex run = run_index(g, lab, w_threshold, run_length);
  if (!run.found)
    fail_domain("solve_star_or_path: no qualifying run below the cap");
  return solve_with_run(g, h, lab, run, keep_subgraphs);
}

PipelineResult full_pipeline(const Graph& g, const Subgraph& h,
                             bool keep_subgraphs) {
  if (h.n() != g.n()) fail_invalid("full_pipeline: size mismatch");
  if (!h.connected()) fail_invalid("full_pipeline: subgraph is disconnected");

  PipelineResult res;
  StructuralWitness witness = find_witness(h);
  res.witness_kind = witness.kind;
  res.witness_size = static_cast<int>(witness.vertices.size());

  ConstructionResult acc;
  acc.trace.h0 = h;
  acc.trace.final = h;
  if (keep_subgraphs) acc.trace.subgraphs.push_back(h);

  bool fallback = false;
  if (witness.kind == WitnessKind::clique) {
    append_result(acc,
                  remove_cycles_within(g, h, witness.vertices, keep_subgraphs));
  } else {
    const int t = res.witness_size;
    bool solved = false;
    if (t >= 4) {
      CanonicalLabeling lab = canonical_labeling(witness);
      double w = default_w_threshold(t, g.rho_star());
      int l = default_run_length(t);
      RunIndex run = run_index(g, lab, w, l);
      res.run_idx = run.index;
      if (run.found) {
        append_result(acc, solve_with_run(g, h, lab, run, keep_subgraphs));
        solved = true;
      }
    }
    fallback = !solved;
  }

  if (fallback) {
    res.fallback = true;
    std::vector<int> everything(g.n());
    for (int v = 0; v < g.n(); ++v) everything[v] = v;
    Subgraph cur(h);
    bool noop = false;
    double w = apply_phi_inplace(g, cur, everything, &noop);
    if (noop) fail_internal("full_pipeline: fallback step disconnected");
    acc.seq.sets.push_back(std::move(everything));
    acc.trace.step_weights.push_back(w);
    acc.trace.noop_steps.push_back(0);
    acc.trace.wt_max = std::max(acc.trace.wt_max, w);
    if (keep_subgraphs) acc.trace.subgraphs.push_back(cur);
    acc.trace.final = cur;
  } else {
    std::vector<int> order = bfs_increment_order(h, witness.vertices);
    append_result(
        acc, eat(g, acc.trace.final, witness.vertices, order, keep_subgraphs));
  }

  acc.trace.reached_mst = (acc.trace.final == mst(g));
  res.seq = std::move(acc.seq);
  res.trace = std::move(acc.trace);
  return res;
}

TailCheckReport run_index_tail_check(int n, double w_threshold, int run_length,
                                     int trials, u64 seed,
                                     const DistPtr& dist) {
  if (n < 4 || trials < 1) fail_invalid("tail check: bad arguments");
  if (run_length < 2 || run_length >= n - 1)
    fail_invalid("tail check: run length out of range");
  if (!(w_threshold > 0.0) || !(w_threshold < dist->rho_star()))
    fail_invalid("tail check: weight threshold out of range");

  TailCheckReport rep;
  rep.n = n;
  rep.w_threshold = w_threshold;
  rep.run_length = run_length;
  rep.trials = trials;

  const int cap = n - run_length;
  std::vector<long long> hist(cap + 1, 0);
  rep.i_values.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    u64 s = derive_seed(seed, static_cast<u64>(t));
    int run = 0, index = cap;
    for (int j = 1; j <= n - 1; ++j) {
      double w = dist->inverse_cdf(uniform01(s, edge_linear(j - 1, j)));
      if (w <= w_threshold)
        ++run;
      else
        run = 0;
      if (run >= run_length) {
        index = j - run_length + 1;
        break;
      }
    }
    index = std::min(index, cap);
    rep.i_values.push_back(index);
    ++hist[index];
  }

  double q = dist->cdf(w_threshold);
  double q_run = std::pow(q, double(run_length));
  const int k_max = (cap - 1) / run_length;
  std::vector<long long> suffix(cap + 2, 0);
  for (int i = cap; i >= 1; --i) suffix[i] = suffix[i + 1] + hist[i];
  for (int k = 0; k <= k_max; ++k) {
    double emp =
        double(suffix[std::min(k * run_length + 1, cap + 1)]) / trials;
    double bnd = std::exp(-double(k) * q_run);
    double sg = std::sqrt(std::max(emp * (1.0 - emp), 0.0) / trials);
    rep.k_grid.push_back(k);
    rep.empirical.push_back(emp);
    rep.bound.push_back(bnd);
    rep.sigma.push_back(sg);
    if (emp > bnd + 3.0 * sg) rep.ok = false;
  }
  return rep;
}

GoodSetsReport good_sets_scan(int n, double w_threshold, int run_length,
                              double epsilon, int trials, u64 seed,
                              const DistPtr& dist) {
  if (n < 4 || trials < 1 || !(epsilon > 0.0))
    fail_invalid("good sets scan: bad arguments");
  if (run_length < 2 || run_length >= n - 1)
    fail_invalid("good sets scan: run length out of range");
  if (!(w_threshold > 0.0) || !(w_threshold < dist->rho_star()))
    fail_invalid("good sets scan: weight threshold out of range");

  GoodSetsReport rep;
  rep.n = n;
  rep.w_threshold = w_threshold;
  rep.run_length = run_length;
  rep.epsilon = epsilon;
  rep.trials = trials;

  for (int t = 0; t < trials; ++t) {
    Graph g = Graph::sample(n, dist, derive_seed(seed, static_cast<u64>(t)));

    int run = 0, index = n - run_length;
    for (int j = 1; j <= n - 1; ++j) {
      if (g.weight(j - 1, j) <= w_threshold)
        ++run;
      else
        run = 0;
      if (run >= run_length) {
        index = j - run_length + 1;
        break;
      }
    }

    // 0-based window vertices: start block, right extensions, then left.
    std::vector<int> verts;
    for (int v = index - 1; v <= index + run_length - 1; ++v)
      verts.push_back(v);
    std::vector<int> additions;
    for (int v = index + run_length; v <= n - 1; ++v) additions.push_back(v);
    for (int v = index - 2; v >= 0; --v) additions.push_back(v);

    std::vector<u64> tree = induced_mst_edges(g, verts);
    auto tree_wdiam = [&g](const std::vector<u64>& edges,
                           const std::vector<int>& vs) {
      std::vector<std::vector<std::pair<int, double>>> adj(vs.size());
      auto pos = [&vs](int v) {
        return static_cast<int>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
      };
      for (u64 id : edges) {
        auto [u, v] = edge_decode(id);
        double w = g.weight_linear(id);
        adj[pos(u)].push_back({pos(v), w});
        adj[pos(v)].push_back({pos(u), w});
      }
      auto sweep = [&adj](int src, std::vector<double>& dist) {
        dist.assign(adj.size(), -1.0);
        std::vector<int> stack{src};
        dist[src] = 0.0;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (auto [v, w] : adj[u])
            if (dist[v] < 0.0) {
              dist[v] = dist[u] + w;
              stack.push_back(v);
            }
        }
      };
      std::vector<double> dist;
      sweep(0, dist);
      int far = static_cast<int>(
          std::max_element(dist.begin(), dist.end()) - dist.begin());
      sweep(far, dist);
      return *std::max_element(dist.begin(), dist.end());
    };

    std::vector<int> sorted_verts(verts);
    std::sort(sorted_verts.begin(), sorted_verts.end());
    bool bad = tree_wdiam(tree, sorted_verts) > epsilon;

    for (size_t a = 0; a < additions.size() && !bad; ++a) {
      int x = additions[a];
      std::vector<std::pair<double, u64>> cand;
      cand.reserve(tree.size() + sorted_verts.size());
      for (u64 id : tree) cand.push_back({g.weight_linear(id), id});
      for (int v : sorted_verts) {
        u64 id = edge_linear(std::min(v, x), std::max(v, x));
        cand.push_back({g.weight_linear(id), id});
      }
      std::sort(cand.begin(), cand.end(),
                [](const auto& l, const auto& r) {
                  if (l.first != r.first) return l.first < r.first;
                  return l.second < r.second;
                });
      sorted_verts.insert(
          std::lower_bound(sorted_verts.begin(), sorted_verts.end(), x), x);
      std::vector<int> slot(n, -1);
      for (size_t i = 0; i < sorted_verts.size(); ++i)
        slot[sorted_verts[i]] = static_cast<int>(i);
      Dsu dsu(static_cast<int>(sorted_verts.size()));
      std::vector<u64> next_tree;
      for (auto [w, id] : cand) {
        auto [u, v] = edge_decode(id);
        if (dsu.unite(slot[u], slot[v])) next_tree.push_back(id);
      }
      tree = std::move(next_tree);
      bad = tree_wdiam(tree, sorted_verts) > epsilon;
    }
    if (bad) ++rep.bad_trials;
  }
  rep.frequency = double(rep.bad_trials) / trials;
  return rep;
}

}  // namespace mstlab
