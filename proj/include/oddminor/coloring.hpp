#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddminor/errors.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/odd_minor.hpp"

namespace oddminor {

/// Colors 1..palette, one per vertex (index = vertex id). A zero entry or a
/// size mismatch makes the coloring partial.
struct ColoringAssignment {
  std::vector<int> colors;
  int palette = 0;

  /// Number of distinct colors actually used.
  int used() const;

  bool operator==(const ColoringAssignment&) const = default;
};

/// Graph class used for color classes. MaxOf accepts a graph when each of its
/// components is accepted by some member, which keeps the class closed under
/// disjoint unions.
struct FamilyClass {
  enum class Kind { BoundedDegree, BoundedComponent, MaxOf };
  Kind kind = Kind::BoundedDegree;
  int bound = 0;
  std::vector<FamilyClass> members;

  static FamilyClass bounded_degree(int d);
  static FamilyClass bounded_component(int m);
  static FamilyClass max_of(std::vector<FamilyClass> members);

  bool accepts(const Graph& g) const;
  /// Largest k such that every graph on at most k vertices is accepted.
  int small_graph_capacity() const;
  std::string describe() const;

  bool operator==(const FamilyClass&) const = default;
};

/// Largest degree inside a color class.
int coloring_defect(const Graph& g, const std::vector<int>& colors);
/// Largest component inside a color class.
int coloring_cluster(const Graph& g, const std::vector<int>& colors);

/// Reason codes: partial-coloring, color-range, family-violation.
Verdict verify_coloring(const Graph& g, const ColoringAssignment& c, const FamilyClass& family);

struct BaseColoring {
  ColoringAssignment coloring;
  /// Defect or clustering the coloring actually has.
  int achieved = 0;
  /// Set when more colors than requested were needed to meet a target.
  bool flagged = false;
};

/// s colors by smallest-last greedy followed by local moves that lower the
/// number of monochromatic edges. With max_defect >= 0 and a result above it,
/// up to 2s colors are tried (flagged).
BaseColoring base_defective_coloring(const Graph& g, int s, int t, int max_defect = -1);

/// At most `budget` colors with small monochromatic components: BFS layers
/// modulo the budget, then exhaustive search per component for smaller
/// clusters. Throws InputError when the maximum degree exceeds delta. With
/// max_cluster >= 0 and a result above it, extra colors are tried (flagged).
BaseColoring base_clustered_coloring(const Graph& g, int delta, int budget = 3, int max_cluster = -1);

/// Colors a graph with at most d colors and reports what it achieved.
using BaseColorer = std::function<BaseColoring(const Graph&, int d)>;

/// d defective colors (s = d).
BaseColorer defective_base(int t);
/// d/3 defective classes, each split into 3 clustered colors.
BaseColorer clustered_base(int t);

struct PrecoloringInstance {
  Graph graph;
  VertexSet z;
  /// Precoloring on Z, colors in [d + 4t - 7].
  std::map<Vertex, int> f;
  int t = 2;
  FamilyClass family;
};

struct ExtendOptions {
  /// Grow the family bound to whatever the base colorer achieves instead of
  /// rejecting base colorings outside it.
  bool adaptive = false;
  /// Size guard for subdivision search and decomposition.
  int limit = 30;
  bool trace = false;
};

struct ExtendResult {
  /// Exactly one of coloring / odd_minor is set.
  std::optional<ColoringAssignment> coloring;
  std::optional<OddMinorModel> odd_minor;
  FamilyClass family;
  std::vector<std::string> trace;
};

/// A (d + 4t - 7)-coloring that agrees with f on Z, separates every Z vertex
/// from its neighbours outside Z, and keeps every class in the family.
/// An odd K_t model met on the way is returned instead. With a fixed family,
/// a base coloring outside it throws HypothesisUnmet.
ExtendResult precolor_extend(const PrecoloringInstance& inst, int d, const BaseColorer& base,
                             const ExtendOptions& options = {});

struct ColorOptions {
  /// Guard for the up-front odd K_t check; larger graphs skip it.
  int detect_limit = 14;
  int limit = 30;
  bool trace = false;
};

struct ColorResult {
  std::optional<ColoringAssignment> coloring;
  std::optional<OddMinorModel> odd_minor;
  /// Defect (defective) or largest monochromatic component (clustered).
  int achieved = 0;
  FamilyClass family;
  int palette_bound = 0;
  std::vector<std::string> trace;
};

/// At most 6t - 9 colors with bounded defect, or an odd K_t model.
ColorResult color_defective(const Graph& g, int t, const ColorOptions& options = {});
/// At most 10t - 13 colors with bounded clustering, or an odd K_t model.
ColorResult color_clustered(const Graph& g, int t, const ColorOptions& options = {});

double bound_M(int s, int t, double delta1, double delta2);
double bound_N(int s, int t, double c0 = 10.0);

}  // namespace oddminor
