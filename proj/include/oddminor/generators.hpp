#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddminor/graph.hpp"
#include "oddminor/subdivision.hpp"

namespace oddminor {

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// G(n, p): each pair becomes an edge independently with probability p.
/// Identical seeds give identical graphs on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

struct GeneratedInstance {
  Graph graph;
  std::optional<SubdivisionEmbedding> embedding;
  /// Extra paths added on top of the subdivision (chorded instances only).
  std::vector<Path> chords;
};

/// K_s + I_t with pattern edge k subdivided counts[k] times (0 keeps it an
/// edge). Branch vertex i gets id i; subdividing vertices follow in pattern
/// edge order.
GeneratedInstance join_subdivision(int s, int t, const std::vector<int>& counts);
GeneratedInstance join_subdivision(int s, int t, int count);

/// A bipartite subdivision of K_s + I_t (every linking path of even length)
/// plus `chords` vertex-disjoint C-paths that are parity-breaking with
/// respect to it. Vertex ids are shuffled by the seed.
GeneratedInstance chorded_subdivision(int s, int t, int chords, std::uint64_t seed);

}  // namespace oddminor
