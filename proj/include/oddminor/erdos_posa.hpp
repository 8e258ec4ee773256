#pragma once

#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/subdivision.hpp"

namespace oddminor {

enum class OutcomeKind { Packing, Cover };

/// Either `ell` vertex-disjoint qualifying S-paths or a hitting set of at most
/// 2*ell - 2 vertices.
struct PackingCoverResult {
  OutcomeKind kind = OutcomeKind::Cover;
  std::vector<Path> paths;
  VertexSet cover;
  int ell = 1;

  bool operator==(const PackingCoverResult&) const = default;
};

/// Whether G - removed has a path of odd length joining two distinct vertices
/// of S - removed. Exact, via the block-cut tree.
bool has_odd_s_path(const Graph& g, const VertexSet& s, const VertexSet& removed = {});

/// Whether G - removed has a C-path that is parity-breaking with respect to
/// the union of `emb`.
bool has_parity_breaking_path(const Graph& g, const SubdivisionEmbedding& emb, const VertexSet& removed = {});

struct DichotomyOptions {
  int limit = 20;
};

/// ell disjoint odd S-paths, or a cover X with |X| <= 2*ell - 2 (the least
/// such set in size, then lexicographically). The outcome is verified before
/// it is returned; InternalError if neither side certifies.
PackingCoverResult odd_s_paths_dichotomy(const Graph& g, const VertexSet& s, int ell,
                                         const DichotomyOptions& options = {});

/// Same dichotomy for C-paths that are parity-breaking with respect to the
/// bipartite union H of `emb` (C = branch vertices). Solved on the graph
/// obtained by subdividing every edge at a branch vertex on the first side of
/// H once per such end; covers use original vertices only. Default limit 30.
PackingCoverResult parity_breaking_dichotomy(const Graph& g, const SubdivisionEmbedding& emb, int ell,
                                             const DichotomyOptions& options = {30});

/// Reason codes: bad-shape, bad-path, not-disjoint, not-qualifying,
/// cover-too-large, cover-misses.
Verdict verify_odd_s_result(const Graph& g, const VertexSet& s, const PackingCoverResult& r);
Verdict verify_parity_breaking_result(const Graph& g, const SubdivisionEmbedding& emb,
                                      const PackingCoverResult& r);

}  // namespace oddminor
