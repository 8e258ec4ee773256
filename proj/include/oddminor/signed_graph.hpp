#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

using EdgeSet = std::set<Edge>;

/// A graph together with its negative edges.
struct SignedGraph {
  Graph graph;
  EdgeSet signature;

  SignedGraph() = default;
  /// Throws InputError if the signature mentions a non-edge.
  SignedGraph(Graph g, EdgeSet sigma);

  bool operator==(const SignedGraph&) const = default;
};

/// delta(X): edges with exactly one end in X.
EdgeSet edge_cut(const Graph& g, const VertexSet& x);

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

/// Replaces the signature by signature xor delta(X).
SignedGraph resign(const SignedGraph& sg, const VertexSet& x);

/// `cycle` lists the cycle's vertices once each, in order (closing edge implied).
/// Throws InputError when the sequence is not a cycle of the graph.
bool is_balanced(const SignedGraph& sg, const Path& cycle);

/// X with sigma2 = signature xor delta(X), or nullopt when the two signatures
/// are not equivalent. Within each component X is built from the least vertex.
std::optional<VertexSet> signatures_equivalent(const SignedGraph& sg, const EdgeSet& sigma2);

/// Model of the signed graph (H, sigma_h) in G, where every edge of G counts as
/// negative. trees[u] is the branch tree of pattern vertex u, colorings[u] a
/// proper 2-coloring of it, and edge_witness maps each pattern edge uv (u < v)
/// to an edge ab of G with a in trees[u] and b in trees[v] (stored normalized,
/// so a is whichever end is smaller).
struct SignedMinorModel {
  std::vector<Subgraph> trees;
  std::vector<TwoColoring> colorings;
  std::map<Edge, Edge> edge_witness;

  bool operator==(const SignedMinorModel&) const = default;
};

/// Checks disjoint trees, proper tree colorings, and for every pattern edge uv a
/// witness ab with colorings agreeing on a and b exactly when uv is negative.
/// Reason codes: bad-shape, not-a-tree, bad-edge, overlapping-trees,
/// improper-coloring, missing-witness, witness-endpoints, witness-sign.
Verdict verify_signed_minor_model(const Graph& g, const Graph& h, const EdgeSet& sigma_h,
                                  const SignedMinorModel& model);

struct SearchOptions {
  /// Largest host graph the exhaustive search accepts.
  int limit = 14;
  /// Skip bipartite host components when the pattern is unbalanced.
  bool parity_prune = true;
};

/// Exhaustive search for (H, sigma_h) as a minor of (G, E(G)). Throws
/// SizeLimitExceeded above options.limit.
std::optional<SignedMinorModel> find_signed_minor(const Graph& g, const Graph& h, const EdgeSet& sigma_h,
                                                  const SearchOptions& options = {});

/// True when every cycle of (H, sigma_h) has an even number of negative edges.
bool is_balanced_signature(const Graph& h, const EdgeSet& sigma_h);

}  // namespace oddminor
