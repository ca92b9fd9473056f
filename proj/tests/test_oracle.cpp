#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "distribution.hpp"
#include "doctest.h"
#include "graph.hpp"
#include "kruskal.hpp"
#include "local_search.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "starpath.hpp"
#include "subgraph.hpp"

using namespace mstlab;

namespace {

// Any sequence must delete each non-tree edge of H0 at a step that still
// carries it, so the optimum is at least the heaviest such edge.
double heaviest_extra(const Graph& g, const Subgraph& h0) {
  Subgraph t = mst(g);
  double heaviest = 0.0;
  for (u64 id : h0.edge_list())
    if (!t.test(id)) heaviest = std::max(heaviest, g.weight_linear(id));
  return heaviest;
}

}  // namespace

TEST_CASE("triangle from the full clique costs the whole graph") {
  Graph g = Graph::fixed(3, {0.1, 0.5, 0.3});
  Subgraph k = Subgraph::make_start(StartKind::clique, 3, 0);
  CHECK(exact_cost(g, k) == doctest::Approx(0.9));
  CHECK(exact_cost(g, mst(g)) == doctest::Approx(0.0));
  CHECK(reachable_under(g, k, 0.9));
  CHECK_FALSE(reachable_under(g, k, 0.8999));
  CHECK(reachable_under(g, k, 2.0));

  Subgraph path(3);
  path.add(0, 2);
  path.add(1, 2);
  CHECK(exact_cost(g, path) == doctest::Approx(0.8));
}

TEST_CASE("exact cost brackets the pipeline and flips at the optimum") {
  auto dist = parse_distribution("uniform");
  for (int i = 0; i < 30; ++i) {
    u64 seed = derive_seed(17000, i);
    Graph g = Graph::sample(5, dist, seed);
    Subgraph h = Subgraph::make_start(static_cast<StartKind>(i % 4), 5,
                                      derive_seed(seed, 1));
    double c = exact_cost(g, h);
    CHECK(c >= heaviest_extra(g, h) - 1e-12);
    CHECK(reachable_under(g, h, c));
    if (c > 0) CHECK_FALSE(reachable_under(g, h, c - 1e-9));

    PipelineResult pr = full_pipeline(g, h);
    CHECK(pr.trace.reached_mst);
    CHECK(c <= pr.trace.wt_max + 1e-12);
  }
}

TEST_CASE("exact cost agrees with the edge floor at n = 6") {
  auto dist = parse_distribution("uniform");
  for (int i = 0; i < 3; ++i) {
    u64 seed = derive_seed(18000, i);
    Graph g = Graph::sample(6, dist, seed);
    Subgraph h = Subgraph::make_start(StartKind::clique, 6, 0);
    double c = exact_cost(g, h);
    CHECK(c >= heaviest_extra(g, h) - 1e-12);
    CHECK(reachable_under(g, h, c));
    CHECK_FALSE(reachable_under(g, h, c - 1e-9));
  }
}

TEST_CASE("seven vertices need the explicit override") {
  auto dist = parse_distribution("uniform");
  Graph g = Graph::sample(7, dist, 42);
  Subgraph t = mst(g);
  CHECK_THROWS_AS(exact_cost(g, t), Error);
  CHECK(exact_cost(g, t, true) == doctest::Approx(0.0));
  CHECK(reachable_under(g, t, 0.5, true));

  Graph g8 = Graph::sample(8, dist, 42);
  CHECK_THROWS_AS(exact_cost(g8, mst(g8), true), Error);
}

TEST_CASE("oracle rejects malformed starts") {
  auto dist = parse_distribution("uniform");
  Graph g = Graph::sample(5, dist, 3);
  Subgraph split(5);
  split.add(0, 1);
  split.add(2, 3);
  split.add(3, 4);
  CHECK_THROWS_AS(exact_cost(g, split), Error);
  Subgraph wrong_size(4);
  wrong_size.add(0, 1);
  CHECK_THROWS_AS(exact_cost(g, wrong_size), Error);
}
