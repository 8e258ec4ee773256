#include <random>

#include "doctest.h"
#include "oddminor/generators.hpp"
#include "oddminor/odd_minor.hpp"
#include "oddminor/signed_graph.hpp"
#include "oracles.hpp"

using namespace oddminor;

namespace {

EdgeSet random_signature(const Graph& g, std::mt19937_64& rng) {
  EdgeSet s;
  for (const Edge& e : g.edges()) {
    if (rng() % 2) s.insert(e);
  }
  return s;
}

VertexSet random_subset(int n, std::mt19937_64& rng) {
  VertexSet x;
  for (Vertex v = 0; v < n; ++v) {
    if (rng() % 2) x.push_back(v);
  }
  return x;
}

}  // namespace

TEST_SUITE("signed-graphs") {
  TEST_CASE("resign examples") {
    Graph k3 = complete_graph(3);
    SignedGraph sg(k3, {Edge(0, 1)});
    CHECK(resign(sg, {0}).signature == EdgeSet{Edge(0, 2)});
    CHECK(resign(sg, {}) == sg);
    CHECK(resign(sg, {0, 1, 2}) == sg);
    CHECK_THROWS_AS(resign(sg, {5}), InputError);
    CHECK_THROWS_AS(SignedGraph(k3, {Edge(0, 5)}), InputError);
  }

  TEST_CASE("balanced cycle examples") {
    Graph k3 = complete_graph(3);
    Path tri(std::vector<Vertex>{0, 1, 2});
    CHECK(is_balanced(SignedGraph(k3, {}), tri));
    CHECK_FALSE(is_balanced(SignedGraph(k3, {Edge(0, 1)}), tri));
    Graph c4 = cycle_graph(4);
    CHECK(is_balanced(SignedGraph(c4, {Edge(0, 1), Edge(2, 3)}), Path(std::vector<Vertex>{0, 1, 2, 3})));
    CHECK_THROWS_AS(is_balanced(SignedGraph(c4, {}), Path(std::vector<Vertex>{0, 2, 1})), InputError);
  }

  TEST_CASE("signature equivalence examples") {
    Graph k3 = complete_graph(3);
    SignedGraph sg(k3, {Edge(0, 1)});
    auto same = signatures_equivalent(sg, sg.signature);
    REQUIRE(same);
    CHECK(edge_cut(k3, *same).empty());
    CHECK_FALSE(signatures_equivalent(SignedGraph(k3, {}), {Edge(0, 1)}));
  }

  TEST_CASE("re-signing composes by symmetric difference") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
      Graph g = oracle::random_graph(rng, 1 + i % 8, 0.4);
      SignedGraph sg(g, random_signature(g, rng));
      VertexSet x = random_subset(g.vertex_count(), rng), y = random_subset(g.vertex_count(), rng);
      VertexSet xy = set_union(set_difference(x, y), set_difference(y, x));
      CHECK(resign(resign(sg, x), y) == resign(sg, xy));
    }
  }

  TEST_CASE("re-signing keeps every cycle's balance") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
      Graph g = oracle::random_graph(rng, 3 + i % 6, 0.5);
      SignedGraph sg(g, random_signature(g, rng));
      SignedGraph rs = resign(sg, random_subset(g.vertex_count(), rng));
      for (const auto& c : oracle::simple_cycles(g)) {
        Path p(c);
        CHECK(is_balanced(sg, p) == is_balanced(rs, p));
      }
    }
  }

  TEST_CASE("equivalence holds exactly when all cycles agree") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
      Graph g = oracle::random_graph(rng, 2 + i % 6, 0.5);
      SignedGraph sg(g, random_signature(g, rng));
      EdgeSet other = i % 2 ? random_signature(g, rng) : resign(sg, random_subset(g.vertex_count(), rng)).signature;
      bool agree = true;
      for (const auto& c : oracle::simple_cycles(g)) {
        agree &= is_balanced(sg, Path(c)) == is_balanced(SignedGraph(g, other), Path(c));
      }
      auto x = signatures_equivalent(sg, other);
      REQUIRE(x.has_value() == agree);
      if (x) CHECK(resign(sg, *x).signature == other);
    }
  }

  TEST_CASE("signed minor model verifier examples") {
    Graph k2 = complete_graph(2);
    SignedMinorModel m;
    m.trees = {Subgraph{{0}, {}}, Subgraph{{1}, {}}};
    m.colorings = {{{0, 1}}, {{1, 1}}};
    m.edge_witness[Edge(0, 1)] = Edge(0, 1);
    CHECK(verify_signed_minor_model(k2, k2, {Edge(0, 1)}, m));
    CHECK_FALSE(verify_signed_minor_model(k2, k2, {}, m));
    m.colorings = {{{0, 1}}, {{1, 2}}};
    CHECK(verify_signed_minor_model(k2, k2, {}, m));

    SignedMinorModel overlap = m;
    overlap.trees = {Subgraph{{0}, {}}, Subgraph{{0}, {}}};
    overlap.colorings = {{{0, 1}}, {{0, 1}}};
    CHECK_FALSE(verify_signed_minor_model(k2, k2, {}, overlap));
  }

  TEST_CASE("find_signed_minor examples") {
    Graph k3 = complete_graph(3);
    auto k3_edges = k3.edges();
    EdgeSet all(k3_edges.begin(), k3_edges.end());
    auto m = find_signed_minor(complete_graph(4), k3, all);
    REQUIRE(m);
    CHECK(verify_signed_minor_model(complete_graph(4), k3, all, *m));
    CHECK_FALSE(find_signed_minor(complete_bipartite(3, 3), k3, all));

    auto edges = k3.edges();
    for (int mask = 0; mask < 8; ++mask) {
      EdgeSet sigma;
      for (int k = 0; k < 3; ++k) {
        if (mask >> k & 1) sigma.insert(edges[k]);
      }
      auto found = find_signed_minor(complete_graph(6), k3, sigma);
      REQUIRE(found);
      CHECK(verify_signed_minor_model(complete_graph(6), k3, sigma, *found));
    }
    CHECK_THROWS_AS(find_signed_minor(complete_graph(15), k3, all), SizeLimitExceeded);
  }

  TEST_CASE("all-negative signed K_t agrees with odd K_t detection") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 120; ++i) {
      Graph g = oracle::random_graph(rng, 2 + i % 7, 0.45);
      for (int t = 2; t <= 4; ++t) {
        Graph kt = complete_graph(t);
        auto e = kt.edges();
        bool signed_found = find_signed_minor(g, kt, EdgeSet(e.begin(), e.end())).has_value();
        CHECK(signed_found == find_odd_clique_minor(g, t).has_value());
      }
    }
  }
}
