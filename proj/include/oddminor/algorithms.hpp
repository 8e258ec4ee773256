#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

struct BipartitionResult {
  /// Side (1 or 2) of every vertex; the least vertex of each component gets 1.
  std::optional<std::vector<int>> sides;
  /// Odd cycle (as a closed vertex sequence without the repeated start) when
  /// the graph is not bipartite.
  std::optional<std::vector<Vertex>> odd_cycle;

  bool bipartite() const { return sides.has_value(); }
};

BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Proper 2-coloring of a connected bipartite subgraph, least vertex colored 1.
/// Returns nullopt if the subgraph is disconnected or not bipartite.
std::optional<TwoColoring> subgraph_two_coloring(const Subgraph& h);

std::vector<VertexSet> connected_components(const Graph& g);

/// nullopt when `t` is a tree of g (sorted vertex list, edges of g spanning
/// it); otherwise one of "bad-shape", "bad-edge", "not-a-tree".
std::optional<std::string> subtree_defect(const Graph& g, const Subgraph& t);

/// Connected components of G - removed, as sets of original ids.
std::vector<VertexSet> components_without(const Graph& g, const std::vector<char>& removed);

/// Maximal 2-connected subgraphs, bridges and isolated vertices, each as a
/// vertex set; sorted lexicographically.
std::vector<VertexSet> blocks(const Graph& g);

/// Minimum-order separation (A, B) with both A\B\Z and B\A\Z nonempty and
/// order <= max_order; ties broken by the lexicographically least separator.
std::optional<Separation> find_small_separation(const Graph& g, const VertexSet& z, int max_order);

/// k vertex-disjoint A-B paths, or nullopt when fewer exist. When A and B are
/// distinct singletons the paths only need to be internally disjoint.
std::optional<std::vector<Path>> disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                int k);

}  // namespace oddminor
