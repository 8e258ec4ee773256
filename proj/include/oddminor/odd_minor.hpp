#pragma once

#include <optional>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"

namespace oddminor {

enum class ConnectorForm { Edge, Path };

/// Connector for the pattern edge h_edge (h_edge.u < h_edge.v). The path runs
/// from a vertex of trees[h_edge.u] to a vertex of trees[h_edge.v]; in edge
/// form it has exactly two vertices.
struct Connector {
  Edge h_edge;
  Path path;

  bool operator==(const Connector&) const = default;
};

/// Odd minor model of a pattern graph in a host graph.
struct OddMinorModel {
  ConnectorForm form = ConnectorForm::Edge;
  std::vector<Subgraph> trees;
  TwoColoring alpha;
  std::vector<Connector> connectors;

  bool operator==(const OddMinorModel&) const = default;
};

/// |E(P)| differs in parity from alpha(u) - alpha(v) for the ends u, v of P.
/// Throws InputError when an end is outside alpha's domain or the ends coincide.
bool is_parity_breaking(const Path& p, const TwoColoring& alpha);

/// Same, relative to a connected bipartite subgraph and its proper 2-coloring.
bool is_parity_breaking(const Path& p, const Subgraph& h);

/// Reason codes: overlapping-trees, bichromatic-violation, connector-parity,
/// connector-disjointness, plus bad-shape, not-a-tree, bad-edge, alpha-domain,
/// missing-connector, connector-endpoints for malformed input.
Verdict verify_odd_minor_model(const Graph& g, const Graph& h, const OddMinorModel& model);

struct OddMinorOptions {
  int limit = 14;
  /// Bipartite host components never contain an odd K_t for t >= 3.
  bool parity_prune = true;
  /// Direct constructions for t <= 3 (vertex, edge, odd cycle).
  bool shortcuts = true;
};

/// An edge-form model of K_t, or nullopt after exhaustive search. The size
/// guard applies only when the exhaustive search actually runs.
std::optional<OddMinorModel> find_odd_clique_minor(const Graph& g, int t, const OddMinorOptions& options = {});

/// Contracts each tree and each connector path into a plain minor model check:
/// the trees are disjoint connected subgraphs and every pattern edge is
/// realised by a connector touching both branch sets.
bool is_minor_model(const Graph& g, const Graph& h, const OddMinorModel& model);

}  // namespace oddminor
