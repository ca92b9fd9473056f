#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "rng.hpp"
#include "structure.hpp"
#include "subgraph.hpp"

using namespace mstlab;

namespace {

Subgraph random_graph(int n, double p, u64 seed) {
  Subgraph h(n);
  for (u64 e = 0; e < edge_count(n); ++e)
    if (uniform01(seed, e) < p) h.set(e);
  return h;
}

}  // namespace

TEST_CASE("witness size bound grows like half the root of log n") {
  CHECK(witness_size_bound(2) == 1);
  CHECK(witness_size_bound(16) == 1);
  CHECK(witness_size_bound(17) == 2);
  CHECK(witness_size_bound(65536) == 2);
  CHECK(witness_size_bound(1000000) == 3);
  CHECK_THROWS_AS(witness_size_bound(1), Error);
}

TEST_CASE("certify_witness checks induced paths exactly") {
  Subgraph h = Subgraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  StructuralWitness w;
  w.kind = WitnessKind::path;
  w.vertices = {0, 1, 2, 3, 4};
  CHECK(certify_witness(h, w));
  w.vertices = {4, 3, 2, 1, 0};
  CHECK(certify_witness(h, w));
  w.vertices = {0, 2, 1, 3};
  CHECK_FALSE(certify_witness(h, w));
  w.vertices = {0};
  CHECK_FALSE(certify_witness(h, w));
  w.vertices = {0, 1, 1, 2};
  CHECK_FALSE(certify_witness(h, w));
  w.vertices = {0, 1, 7};
  CHECK_FALSE(certify_witness(h, w));

  // A chord breaks the induced requirement.
  Subgraph chord = h;
  chord.add(0, 2);
  w.vertices = {0, 1, 2};
  CHECK_FALSE(certify_witness(chord, w));
  w.vertices = {2, 3, 4};
  CHECK(certify_witness(chord, w));
}

TEST_CASE("certify_witness checks stars and cliques") {
  Subgraph star = Subgraph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
  StructuralWitness w;
  w.kind = WitnessKind::star;
  w.vertices = {0, 1, 2, 3};
  w.center = 3;
  CHECK(certify_witness(star, w));
  w.center = 2;
  CHECK_FALSE(certify_witness(star, w));
  w.center = 3;
  Subgraph crossed = star;
  crossed.add(0, 1);
  CHECK_FALSE(certify_witness(crossed, w));

  Subgraph tri = Subgraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  StructuralWitness c;
  c.kind = WitnessKind::clique;
  c.vertices = {0, 1, 2};
  CHECK(certify_witness(tri, c));
  c.vertices = {1};
  CHECK(certify_witness(tri, c));
  Subgraph open = tri;
  open.remove(0, 2);
  c.vertices = {0, 1, 2};
  CHECK_FALSE(certify_witness(open, c));
}

TEST_CASE("pivot_ramsey resolves the extreme graphs") {
  Subgraph k = Subgraph::make_start(StartKind::clique, 16, 0);
  std::vector<int> all(16);
  for (int v = 0; v < 16; ++v) all[v] = v;
  bool is_clique = false;
  CHECK(pivot_ramsey(k, all, &is_clique) == all);
  CHECK(is_clique);

  Subgraph empty(16);
  CHECK(pivot_ramsey(empty, all, &is_clique) == all);
  CHECK_FALSE(is_clique);

  CHECK(pivot_ramsey(k, {5}, &is_clique) == std::vector<int>{5});
  CHECK_THROWS_AS(pivot_ramsey(k, {}, &is_clique), Error);
  CHECK_THROWS_AS(pivot_ramsey(k, {3, 3}, &is_clique), Error);
  CHECK_THROWS_AS(pivot_ramsey(k, {99}, &is_clique), Error);
}

TEST_CASE("pivot_ramsey meets the logarithmic guarantee on dense graphs") {
  const int m = 64;
  std::vector<int> all(m);
  for (int v = 0; v < m; ++v) all[v] = v;
  for (int i = 0; i < 300; ++i) {
    Subgraph h = random_graph(m, 0.5, derive_seed(4242, i));
    bool is_clique = false;
    std::vector<int> found = pivot_ramsey(h, all, &is_clique);
    CHECK(found.size() >= 3);
    CHECK(std::is_sorted(found.begin(), found.end()));
    for (size_t a = 0; a < found.size(); ++a)
      for (size_t b = a + 1; b < found.size(); ++b)
        CHECK(h.has(found[a], found[b]) == is_clique);
  }
}

TEST_CASE("find_witness recovers the canonical shapes whole") {
  Subgraph path = Subgraph::make_start(StartKind::path, 40, 0);
  StructuralWitness w = find_witness(path);
  CHECK(w.kind == WitnessKind::path);
  CHECK(w.vertices.size() == 40);
  CHECK(certify_witness(path, w));

  Subgraph star = Subgraph::make_start(StartKind::star, 40, 0);
  w = find_witness(star);
  CHECK(w.kind == WitnessKind::star);
  CHECK(w.vertices.size() == 40);
  CHECK(w.center == w.vertices.back());
  CHECK(certify_witness(star, w));

  Subgraph clique = Subgraph::make_start(StartKind::clique, 40, 0);
  w = find_witness(clique);
  CHECK(w.kind == WitnessKind::clique);
  CHECK(w.vertices.size() == 40);
  CHECK(certify_witness(clique, w));

  Subgraph pair = Subgraph::from_edges(2, {{0, 1}});
  w = find_witness(pair);
  CHECK(w.vertices.size() == 2);
  CHECK(certify_witness(pair, w));
}

TEST_CASE("find_witness rejects disconnected or trivial input") {
  Subgraph split(4);
  split.add(0, 1);
  split.add(2, 3);
  CHECK_THROWS_AS(find_witness(split), Error);
  CHECK_THROWS_AS(find_witness(Subgraph(1)), Error);
}

TEST_CASE("find_witness certifies and meets the bound on random trees") {
  for (int i = 0; i < 300; ++i) {
    Subgraph t = Subgraph::make_start(StartKind::random_spanning_tree, 64,
                                      derive_seed(9191, i));
    StructuralWitness w = find_witness(t);
    CHECK(certify_witness(t, w));
    CHECK(static_cast<int>(w.vertices.size()) >= witness_size_bound(64));
  }
}
