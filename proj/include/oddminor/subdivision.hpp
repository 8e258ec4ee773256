#pragma once

#include <optional>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

/// Pattern K_s + I_t on indices 0..s+t-1: indices below s form the clique,
/// the rest the stable set.
struct JoinPattern {
  int s = 0;
  int t = 0;

  int size() const { return s + t; }
  bool is_clique_vertex(int i) const { return i < s; }
  /// Edges (i, j), i < j, with i in the clique; lexicographic order.
  std::vector<Edge> edges() const;
  /// Position of pattern edge (i, j) in edges(), or -1.
  int edge_index(int i, int j) const;
  Graph graph() const;

  bool operator==(const JoinPattern&) const = default;
};

/// Subdivision of K_s + I_t in a host graph. branch[i] is the image of pattern
/// vertex i; linking[k] realises pattern edge edges()[k] and runs from the
/// branch vertex of its smaller end to that of its larger end.
/// origin[i] is the index pattern vertex i had in the pattern this embedding
/// was restricted from (the identity for fresh embeddings).
struct SubdivisionEmbedding {
  JoinPattern pattern;
  std::vector<Vertex> branch;
  std::vector<Path> linking;
  std::vector<int> origin;

  /// Branch vertex set C.
  VertexSet branch_set() const;
  /// The union subgraph H.
  Subgraph union_subgraph() const;
  /// The linking path between pattern vertices i and j, oriented from i to j.
  Path linking_path(int i, int j) const;

  bool operator==(const SubdivisionEmbedding&) const = default;
};

/// Identity-origin embedding with the given branch vertices and paths.
SubdivisionEmbedding make_embedding(int s, int t, std::vector<Vertex> branch, std::vector<Path> linking);

/// Reason codes: bad-shape, bad-branch, bad-path, path-endpoints,
/// not-internally-disjoint, not-bipartite.
Verdict verify_subdivision(const Graph& g, const SubdivisionEmbedding& emb, bool require_bipartite);

/// Fewest vertices a bipartite subdivision of K_s + I_t can have.
int min_bipartite_subdivision_order(int s, int t);

struct SubdivisionOptions {
  int limit = 30;
};

/// Exhaustive search for a subdivision of K_s + I_t whose union is bipartite.
std::optional<SubdivisionEmbedding> find_bipartite_join_subdivision(const Graph& g, int s, int t,
                                                                    const SubdivisionOptions& options = {});

/// Drops pattern vertices so that the remaining subdivision avoids X. A branch
/// vertex in X removes its pattern vertex; an internal vertex of a linking path
/// removes one end of that path (the stable end if there is one, otherwise the
/// larger index). At most |X| pattern vertices are removed.
SubdivisionEmbedding restrict_subdivision(const SubdivisionEmbedding& emb, const VertexSet& x);

/// Subgraph test for K_s + I_t with each clique edge subdivided once.
bool contains_Kst_star(const Graph& g, int s, int t, int limit = 30);

}  // namespace oddminor
