#include <random>

#include "doctest.h"
#include "oddminor/algorithms.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/graph_io.hpp"
#include "oracles.hpp"

using namespace oddminor;

TEST_SUITE("graph-core") {
  TEST_CASE("graph6 decoding of small cliques") {
    Graph k2 = parse_graph("A_", GraphFormat::Graph6);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(parse_graph("Bw", GraphFormat::Graph6) == complete_graph(3));
    CHECK(parse_graph(">>graph6<<Bw\n", GraphFormat::Graph6) == complete_graph(3));
  }

  TEST_CASE("edgelist with no edges") {
    Graph g = parse_graph("n 1\n", GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_graph("n 2\n0 0\n", GraphFormat::EdgeList), InputError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 1\n1 0\n", GraphFormat::EdgeList), InputError);
    CHECK_THROWS_AS(parse_graph("n 2\n0 2\n", GraphFormat::EdgeList), InputError);
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 3\n", GraphFormat::Dimacs), InputError);
    CHECK_THROWS_AS(parse_graph("x edge 2 1\n", GraphFormat::Dimacs), InputError);
    CHECK_THROWS_AS(parse_format("sparse6"), InputError);
  }

  TEST_CASE("formats round-trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      Graph g = oracle::random_graph(rng, 1 + i % 20, 0.3);
      for (GraphFormat f : {GraphFormat::Graph6, GraphFormat::Dimacs, GraphFormat::EdgeList}) {
        CHECK(parse_graph(write_graph(g, f), f) == g);
      }
    }
  }

  TEST_CASE("bipartition examples") {
    auto c4 = bipartition(cycle_graph(4));
    REQUIRE(c4.sides);
    CHECK(*c4.sides == std::vector<int>{1, 2, 1, 2});

    auto c5 = bipartition(cycle_graph(5));
    CHECK_FALSE(c5.sides);
    REQUIRE(c5.odd_cycle);
    CHECK(c5.odd_cycle->size() == 5);

    auto e3 = bipartition(Graph(3));
    REQUIRE(e3.sides);
    CHECK(*e3.sides == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("bipartition agrees with brute force; witnesses are odd cycles") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
      Graph g = oracle::random_graph(rng, 1 + i % 11, 0.25);
      auto r = bipartition(g);
      REQUIRE(r.bipartite() == oracle::bipartite(g));
      if (r.sides) {
        for (const Edge& e : g.edges()) CHECK((*r.sides)[e.u] != (*r.sides)[e.v]);
      } else {
        const auto& c = *r.odd_cycle;
        CHECK(c.size() % 2 == 1);
        for (std::size_t k = 0; k < c.size(); ++k) CHECK(g.has_edge(c[k], c[(k + 1) % c.size()]));
        CHECK(std::set<Vertex>(c.begin(), c.end()).size() == c.size());
      }
    }
  }

  TEST_CASE("blocks examples") {
    CHECK(blocks(path_graph(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
    CHECK(blocks(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    Graph bowtie(5);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
    CHECK(blocks(bowtie) == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
  }

  TEST_CASE("blocks match the common-cycle relation and form a tree with cut vertices") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      Graph g = oracle::random_graph(rng, 1 + i % 9, 0.3);
      auto bs = blocks(g);
      CHECK(bs == oracle::blocks(g));
      // block-cut graph of each component is a tree: #blocks + #cuts - 1 edges
      std::map<Vertex, int> membership;
      for (const auto& b : bs) {
        for (Vertex v : b) ++membership[v];
      }
      int incidences = 0, cuts = 0;
      for (auto [v, k] : membership) {
        if (k > 1) {
          ++cuts;
          incidences += k;
        }
      }
      int comps = static_cast<int>(connected_components(g).size());
      CHECK(incidences == static_cast<int>(bs.size()) + cuts - comps);
    }
  }

  TEST_CASE("small separation examples") {
    Graph bowtie(5);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
    auto s = find_small_separation(bowtie, {}, 1);
    REQUIRE(s);
    CHECK(s->separator() == VertexSet{2});

    CHECK_FALSE(find_small_separation(complete_graph(5), {}, 3));

    auto p4 = find_small_separation(path_graph(4), {1}, 1);
    REQUIRE(p4);
    auto sep = p4->separator();
    CHECK(sep.size() == 1);
    CHECK((sep == VertexSet{1} || sep == VertexSet{2}));
  }

  TEST_CASE("small separations are valid and of minimum order") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
      const int n = 2 + i % 9;
      Graph g = oracle::random_graph(rng, n, 0.35);
      VertexSet z;
      for (Vertex v = 0; v < n; ++v) {
        if (rng() % 4 == 0) z.push_back(v);
      }
      const int k = static_cast<int>(rng() % 4);
      auto s = find_small_separation(g, z, k);
      int best = oracle::min_separation_order(g, z, k);
      REQUIRE(s.has_value() == (best != -1));
      if (!s) continue;
      CHECK(s->order() == best);
      CHECK(set_union(s->a, s->b) == complement({}, n));
      auto a_only = set_difference(set_difference(s->a, s->b), z);
      auto b_only = set_difference(set_difference(s->b, s->a), z);
      CHECK_FALSE(a_only.empty());
      CHECK_FALSE(b_only.empty());
      auto left = set_difference(s->a, s->b), right = set_difference(s->b, s->a);
      for (const Edge& e : g.edges()) {
        CHECK_FALSE((set_contains(left, e.u) && set_contains(right, e.v)));
        CHECK_FALSE((set_contains(left, e.v) && set_contains(right, e.u)));
      }
    }
  }

  TEST_CASE("disjoint paths examples") {
    auto c4 = disjoint_paths(cycle_graph(4), {0}, {2}, 2);
    REQUIRE(c4);
    CHECK(c4->size() == 2);
    CHECK_FALSE(disjoint_paths(complete_bipartite(1, 3), {1}, {2}, 2));
    auto k4 = disjoint_paths(complete_graph(4), {0, 1}, {2, 3}, 2);
    REQUIRE(k4);
    CHECK(k4->size() == 2);
  }

  TEST_CASE("disjoint paths obey Menger duality") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
      const int n = 3 + i % 8;
      Graph g = oracle::random_graph(rng, n, 0.35);
      VertexSet a, b;
      for (Vertex v = 0; v < n; ++v) {
        int r = static_cast<int>(rng() % 4);
        if (r == 0) a.push_back(v);
        if (r == 1) b.push_back(v);
      }
      if (a.size() + b.size() < 3 || a.empty() || b.empty()) continue;
      int sep = oracle::min_ab_separator(g, a, b);
      for (int k = 1; k <= 3; ++k) {
        auto ps = disjoint_paths(g, a, b, k);
        REQUIRE(ps.has_value() == (sep >= k));
        if (!ps) continue;
        std::set<Vertex> used;
        for (const Path& p : *ps) {
          CHECK(is_path_in(g, p));
          CHECK(set_contains(a, p.front()));
          CHECK(set_contains(b, p.back()));
          for (Vertex v : p.vertices) CHECK(used.insert(v).second);
        }
      }
    }
  }
}
