#pragma once

// Shared exhaustive search for signed patterns (H, negative) as minors of
// (G, E(G)). Both the signed-minor and the odd-clique detectors run on it.

#include <map>
#include <optional>
#include <vector>

#include "oddminor/graph.hpp"
#include "oddminor/signed_graph.hpp"

namespace oddminor::detail {

struct PatternHit {
  std::vector<Subgraph> trees;
  std::vector<TwoColoring> colorings;
  std::map<Edge, Edge> witness;
};

struct PatternSearchOptions {
  // pattern labels may be permuted freely (K_t with all edges of one sign)
  bool symmetric_labels = false;
  bool parity_prune = true;
};

// Requires g.vertex_count() <= 64; callers enforce their own size guards.
std::optional<PatternHit> search_pattern(const Graph& g, const Graph& h, const EdgeSet& negative,
                                         const PatternSearchOptions& options);

}  // namespace oddminor::detail
