#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "distribution.hpp"
#include "doctest.h"
#include "graph.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"
#include "rng.hpp"
#include "subgraph.hpp"

using namespace mstlab;

namespace {

Graph triangle() { return Graph::fixed(3, {0.1, 0.5, 0.3}); }

std::vector<int> random_subset(u64 seed, int n, int min_size) {
  std::vector<int> s;
  for (int v = 0; v < n; ++v)
    if (uniform01(seed, 1000 + v) < 0.4) s.push_back(v);
  u64 c = 0;
  while (static_cast<int>(s.size()) < min_size) {
    int v = static_cast<int>(uniform_below(seed, 2000 + c++, n));
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("phi replaces a connected induced subgraph by its local mst") {
  Graph g = triangle();
  Subgraph k3 = Subgraph::make_start(StartKind::clique, 3, 0);

  Subgraph after = phi(g, k3, {0, 1, 2});
  CHECK(after == mst(g));

  // A two-vertex replacement is a no-change step with the edge's weight.
  Subgraph same = phi(g, k3, {0, 2});
  CHECK(same == k3);

  Subgraph h = k3;
  bool noop = true;
  double w = apply_phi_inplace(g, h, {0, 1, 2}, &noop);
  CHECK(!noop);
  CHECK(w == doctest::Approx(0.9));
  CHECK(h == mst(g));
}

TEST_CASE("phi is a no-op on disconnected induced subgraphs") {
  Graph g = triangle();
  Subgraph h(3);
  h.add(0, 2);
  h.add(1, 2);
  bool noop = false;
  double w = apply_phi_inplace(g, h, {0, 1}, &noop);
  CHECK(noop);
  CHECK(w == 0.0);
  CHECK(h.has(0, 2));
  CHECK(h.has(1, 2));
  CHECK(!h.has(0, 1));
}

TEST_CASE("phi validates its vertex set") {
  Graph g = triangle();
  Subgraph h = Subgraph::make_start(StartKind::clique, 3, 0);
  CHECK_THROWS_AS(phi(g, h, {}), Error);
  CHECK_THROWS_AS(phi(g, h, {0, 3}), Error);
  CHECK_THROWS_AS(phi(g, h, {-1}), Error);
  CHECK(phi(g, h, {1, 1, 2}) == phi(g, h, {1, 2}));
}

TEST_CASE("single-vertex steps weigh zero and change nothing") {
  Graph g = triangle();
  Subgraph h = Subgraph::make_start(StartKind::clique, 3, 0);
  bool noop = true;
  double w = apply_phi_inplace(g, h, {1}, &noop);
  CHECK(!noop);
  CHECK(w == 0.0);
  CHECK(h == Subgraph::make_start(StartKind::clique, 3, 0));
}

TEST_CASE("induced mst edges match mst on the induced weights") {
  auto dist = parse_distribution("uniform");
  Graph g = Graph::sample(20, dist, 3);
  std::vector<int> s = random_subset(9, 20, 2);
  std::vector<u64> got = induced_mst_edges(g, s);
  REQUIRE(got.size() == s.size() - 1);
  double total = 0.0;
  for (u64 id : got) {
    EdgeId e = edge_decode(id);
    CHECK(std::binary_search(s.begin(), s.end(), e.u));
    CHECK(std::binary_search(s.begin(), s.end(), e.v));
    total += g.weight_linear(id);
  }
  // Compare against a brute-force mst over a relabeled fixed graph.
  int k = static_cast<int>(s.size());
  std::vector<double> w(edge_count(k));
  for (int b = 1; b < k; ++b)
    for (int a = 0; a < b; ++a) w[edge_linear(a, b)] = g.weight(s[a], s[b]);
  Graph sub = Graph::fixed(k, w);
  CHECK(total == doctest::Approx(mst(sub).total_weight(sub)).epsilon(1e-12));
}

TEST_CASE("phi idempotence and weight monotonicity on random cases") {
  auto dist = parse_distribution("uniform");
  for (int i = 0; i < 250; ++i) {
    u64 seed = derive_seed(1234, i);
    int n = 3 + static_cast<int>(uniform_below(seed, 0, 14));
    Graph g = Graph::sample(n, dist, seed);
    StartKind kind = static_cast<StartKind>(uniform_below(seed, 1, 4));
    Subgraph h = Subgraph::make_start(kind, n, derive_seed(seed, 2));
    std::vector<int> s = random_subset(derive_seed(seed, 3), n, 2);
    Subgraph once = phi(g, h, s);
    CHECK(phi(g, once, s) == once);
    CHECK(once.total_weight(g) <= h.total_weight(g) + 1e-12);
  }
}

TEST_CASE("run_sequence on the pinned two-step schedule") {
  Graph g = triangle();
  Subgraph k3 = Subgraph::make_start(StartKind::clique, 3, 0);
  OptimizingSequence seq;
  seq.sets = {{0, 2}, {0, 1, 2}};
  SequenceTrace tr = run_sequence(g, k3, seq, true);
  CHECK(tr.steps() == 2);
  CHECK(tr.step_weights[0] == doctest::Approx(0.5));
  CHECK(tr.step_weights[1] == doctest::Approx(0.9));
  CHECK(tr.wt_max == doctest::Approx(0.9));
  CHECK(tr.noop_steps[0] == 0);
  CHECK(tr.reached_mst);
  CHECK(tr.final == mst(g));
  REQUIRE(tr.has_subgraphs());
  REQUIRE(tr.subgraphs.size() == 3);
  CHECK(tr.subgraphs.front() == k3);
  CHECK(tr.subgraphs.back() == mst(g));
}

TEST_CASE("empty sequences have zero weight") {
  Graph g = triangle();
  Subgraph h = Subgraph::make_start(StartKind::path, 3, 0);
  SequenceTrace tr = run_sequence(g, h, {}, false);
  CHECK(tr.steps() == 0);
  CHECK(tr.wt_max == 0.0);
  CHECK(tr.final == h);
}

TEST_CASE("persistence check accepts real traces and flags fakes") {
  Graph g = triangle();
  Subgraph k3 = Subgraph::make_start(StartKind::clique, 3, 0);
  OptimizingSequence seq;
  seq.sets = {{0, 1, 2}};
  SequenceTrace tr = run_sequence(g, k3, seq, true);
  CHECK(check_persistence(g, tr).ok);

  SequenceTrace fake = tr;
  fake.subgraphs.back() = Subgraph(3);
  fake.subgraphs.back().add(0, 1);
  fake.subgraphs.back().add(0, 2);  // drops mst edge 1-2
  PersistenceReport rep = check_persistence(g, fake);
  CHECK(!rep.ok);
  CHECK(rep.violation_step == 0);

  SequenceTrace untracked = run_sequence(g, k3, seq, false);
  CHECK_THROWS_AS(check_persistence(g, untracked), Error);
}

TEST_CASE("single-step cost bounds on the triangle") {
  Graph g = triangle();
  Subgraph k3 = Subgraph::make_start(StartKind::clique, 3, 0);
  auto [lo, hi] = cost1_bounds(g, k3);
  CHECK(lo == doctest::Approx(0.5));
  CHECK(hi == doctest::Approx(0.9));

  auto [lo2, hi2] = cost1_bounds(g, mst(g));
  CHECK(lo2 == 0.0);
  CHECK(hi2 == doctest::Approx(0.4));

  Subgraph disc(3);
  disc.add(0, 1);
  CHECK_THROWS_AS(cost1_bounds(g, disc), Error);
}

TEST_CASE("heavy edge floor counts and scales") {
  Graph g = triangle();
  Subgraph k3 = Subgraph::make_start(StartKind::clique, 3, 0);
  // rho* is the largest weight, 0.5, so thresholds are 0.3 and 0.2.
  HeavyEdgeFloor f = heavy_edge_floor(g, k3, 0.2);
  CHECK(f.count == 1);
  CHECK(f.weight_floor == doctest::Approx(0.3));
  HeavyEdgeFloor f2 = heavy_edge_floor(g, k3, 0.3);
  CHECK(f2.count == 2);
  CHECK(f2.threshold == doctest::Approx(0.2));
  CHECK(f2.weight_floor == doctest::Approx(0.4));
  CHECK_THROWS_AS(heavy_edge_floor(g, k3, 0.0), Error);
  CHECK_THROWS_AS(heavy_edge_floor(g, k3, g.rho_star()), Error);
}

TEST_CASE("heavy edges survive any sequence kept under the threshold") {
  auto dist = parse_distribution("uniform");
  for (u64 seed : {5u, 6u, 7u}) {
    Graph g = Graph::sample(12, dist, seed);
    Subgraph h = Subgraph::make_start(StartKind::path, 12, seed);
    OptimizingSequence seq;
    seq.sets = {{0, 1, 2}, {3, 4, 5, 6}, {0, 2, 4, 6, 8}};
    SequenceTrace tr = run_sequence(g, h, seq, true);
    CHECK(heavy_edges_retained(g, tr, 0.2));
  }
}
