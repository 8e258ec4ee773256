#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/odd_minor.hpp"
#include "oddminor/subdivision.hpp"

namespace oddminor {

/// An apex set X and a bipartite block U of G - X that carries the branch
/// vertices `retained_branch` of the original subdivision together with every
/// linking path between two of them.
struct Decomposition {
  VertexSet apex;
  VertexSet block;
  VertexSet retained_branch;

  bool operator==(const Decomposition&) const = default;
};

struct StructureOptions {
  /// Size guard for the subdivision search and the packing/cover search.
  int limit = 30;
};

/// ell disjoint parity-breaking C-paths, or a decomposition with |X| <= 2*ell - 2
/// and at least s + t - |X| retained branch vertices. Needs s >= 2*ell, t >= 1.
std::variant<Decomposition, std::vector<Path>> block_or_packing(const Graph& g, const SubdivisionEmbedding& emb,
                                                                int ell, const StructureOptions& options = {});

/// Odd K_t model from a bipartite subdivision of K_{2t-2} + I_t and t - 1
/// disjoint parity-breaking C-paths. The model is verified before return.
OddMinorModel build_odd_clique_model(const Graph& g, const SubdivisionEmbedding& emb, const std::vector<Path>& paths);

/// Either an odd K_t model or a decomposition with |X| <= 2t - 4 and
/// |U| >= t + 3. Searches for the subdivision when none is supplied and throws
/// HypothesisUnmet when there is none.
std::variant<OddMinorModel, Decomposition> structure_theorem(const Graph& g, int t,
                                                             const std::optional<SubdivisionEmbedding>& emb = {},
                                                             const StructureOptions& options = {});

/// Checks a decomposition against the subdivision it was derived from: |X| at
/// most `max_apex`, U a bipartite block of G - X, retained branch vertices in U
/// with all their linking paths, and at least s + t - |X| of them.
/// Reason codes: bad-shape, apex-too-large, not-a-block, not-bipartite,
/// retained-outside, linking-outside, too-few-retained.
Verdict verify_decomposition(const Graph& g, const SubdivisionEmbedding& emb, const Decomposition& d, int max_apex);

}  // namespace oddminor
