#include <random>

#include "doctest.h"
#include "oddminor/algorithms.hpp"
#include "oddminor/erdos_posa.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/structure.hpp"
#include "oracles.hpp"

using namespace oddminor;

namespace {

const StructureOptions kWide{64};

void check_decomposition(const Graph& g, const SubdivisionEmbedding& emb, const Decomposition& d, int max_apex) {
  CHECK(verify_decomposition(g, emb, d, max_apex));
  CHECK(static_cast<int>(d.apex.size()) <= max_apex);
  // U is a block of G - X and bipartite, checked independently
  std::vector<Vertex> keep = complement(d.apex, g.vertex_count());
  Graph rest = g.induced(keep);
  VertexSet u_local;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (set_contains(d.block, keep[i])) u_local.push_back(static_cast<Vertex>(i));
  }
  auto bs = oracle::blocks(rest);
  CHECK(std::find(bs.begin(), bs.end(), u_local) != bs.end());
  CHECK(oracle::bipartite(g.induced(d.block)));
  CHECK(static_cast<int>(d.retained_branch.size()) >= emb.pattern.size() - static_cast<int>(d.apex.size()));
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("bare subdivision: block with all branch vertices") {
    auto inst = join_subdivision(4, 3, 1);
    auto r = block_or_packing(inst.graph, *inst.embedding, 1, kWide);
    REQUIRE(std::holds_alternative<Decomposition>(r));
    const auto& d = std::get<Decomposition>(r);
    CHECK(d.apex.empty());
    CHECK(d.retained_branch == inst.embedding->branch_set());
    CHECK(d.block == complement({}, inst.graph.vertex_count()));
    check_decomposition(inst.graph, *inst.embedding, d, 0);
  }

  TEST_CASE("ell chords give a packing") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = chorded_subdivision(4, 3, 2, seed);
      auto r = block_or_packing(inst.graph, *inst.embedding, 2, kWide);
      REQUIRE(std::holds_alternative<std::vector<Path>>(r));
      Subgraph h = inst.embedding->union_subgraph();
      for (const Path& p : std::get<std::vector<Path>>(r)) CHECK(is_parity_breaking(p, h));
    }
  }

  TEST_CASE("one chord with ell=2 gives a decomposition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = chorded_subdivision(4, 3, 1, seed);
      auto r = block_or_packing(inst.graph, *inst.embedding, 2, kWide);
      REQUIRE(std::holds_alternative<Decomposition>(r));
      check_decomposition(inst.graph, *inst.embedding, std::get<Decomposition>(r), 2);
    }
  }

  TEST_CASE("block_or_packing preconditions") {
    auto inst = join_subdivision(2, 1, 1);
    CHECK_THROWS_AS(block_or_packing(inst.graph, *inst.embedding, 2), InputError);
    CHECK_THROWS_AS(block_or_packing(inst.graph, *inst.embedding, 0), InputError);
  }

  TEST_CASE("odd K_t models from chords") {
    for (int t = 2; t <= 3; ++t) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = chorded_subdivision(2 * t - 2, t, t - 1, seed);
        auto m = build_odd_clique_model(inst.graph, *inst.embedding, inst.chords);
        CHECK(verify_odd_minor_model(inst.graph, complete_graph(t), m));
        CHECK(is_minor_model(inst.graph, complete_graph(t), m));
      }
    }
  }

  TEST_CASE("paths lying outside H are kept as they are") {
    // chords already avoid H internally, so minimisation has nothing to do
    auto inst = chorded_subdivision(4, 3, 2, 5);
    for (const Path& p : inst.chords) {
      for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
        CHECK_FALSE(set_contains(inst.embedding->union_subgraph().vertices, p.vertices[i]));
      }
    }
    auto m = build_odd_clique_model(inst.graph, *inst.embedding, inst.chords);
    CHECK(verify_odd_minor_model(inst.graph, complete_graph(3), m));
  }

  TEST_CASE("models from dichotomy packings that use H edges") {
    std::mt19937_64 rng(43);
    int built = 0;
    for (int i = 0; i < 120; ++i) {
      int t = 2 + i % 2;
      auto inst = join_subdivision(2 * t - 2, t, 1 + 2 * (i % 2));
      Graph g = inst.graph;
      const int n = g.vertex_count();
      for (int k = 0; k < 3; ++k) {
        Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
        if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
      }
      auto r = parity_breaking_dichotomy(g, *inst.embedding, t - 1, {64});
      if (r.kind != OutcomeKind::Packing) continue;
      auto m = build_odd_clique_model(g, *inst.embedding, r.paths);
      CHECK(verify_odd_minor_model(g, complete_graph(t), m));
      ++built;
    }
    CHECK(built > 20);
  }

  TEST_CASE("build_odd_clique_model rejects bad input") {
    auto inst = chorded_subdivision(4, 3, 2, 1);
    CHECK_THROWS_AS(build_odd_clique_model(inst.graph, *inst.embedding, {inst.chords[0]}), InputError);
    auto bare = join_subdivision(4, 3, 1);
    Path inside = bare.embedding->linking[0];
    CHECK_THROWS_AS(build_odd_clique_model(bare.graph, *bare.embedding, {inside, bare.embedding->linking[10]}),
                    InputError);
  }

  TEST_CASE("structure theorem examples") {
    auto bare = join_subdivision(4, 3, 1);
    auto r = structure_theorem(bare.graph, 3, bare.embedding, kWide);
    REQUIRE(std::holds_alternative<Decomposition>(r));
    const auto& d = std::get<Decomposition>(r);
    CHECK(d.apex.empty());
    CHECK(d.block.size() >= 6);
    check_decomposition(bare.graph, *bare.embedding, d, 2);

    auto chorded = chorded_subdivision(4, 3, 2, 3);
    auto m = structure_theorem(chorded.graph, 3, chorded.embedding, kWide);
    REQUIRE(std::holds_alternative<OddMinorModel>(m));
    CHECK(verify_odd_minor_model(chorded.graph, complete_graph(3), std::get<OddMinorModel>(m)));

    auto small = join_subdivision(2, 2, 1);
    auto r2 = structure_theorem(small.graph, 2, std::nullopt, kWide);
    REQUIRE(std::holds_alternative<Decomposition>(r2));
    CHECK(std::get<Decomposition>(r2).apex.empty());
    CHECK(std::get<Decomposition>(r2).block.size() >= 5);

    CHECK_THROWS_AS(structure_theorem(cycle_graph(6), 3), HypothesisUnmet);
  }

  TEST_CASE("structure theorem contract on generated instances") {
    for (int t = 2; t <= 3; ++t) {
      for (int chords = 0; chords < t; ++chords) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
          auto inst = chorded_subdivision(2 * t - 2, t, chords, seed);
          auto r = structure_theorem(inst.graph, t, inst.embedding, kWide);
          if (auto* d = std::get_if<Decomposition>(&r)) {
            CHECK(static_cast<int>(d->apex.size()) <= 2 * t - 4);
            CHECK(static_cast<int>(d->block.size()) >= t + 3);
            check_decomposition(inst.graph, *inst.embedding, *d, 2 * t - 4);
          } else {
            CHECK(chords == t - 1);
            CHECK(verify_odd_minor_model(inst.graph, complete_graph(t), std::get<OddMinorModel>(r)));
          }
        }
      }
    }
  }

  TEST_CASE("a returned model means the detector finds one too") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto inst = chorded_subdivision(2, 2, 1, seed);
      if (inst.graph.vertex_count() > 12) continue;
      auto r = structure_theorem(inst.graph, 2, inst.embedding, kWide);
      if (std::holds_alternative<OddMinorModel>(r)) CHECK(find_odd_clique_minor(inst.graph, 2));
    }
  }
}
