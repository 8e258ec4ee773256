#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace oddminor {

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

/// Partial map from vertices to {1, 2}.
using TwoColoring = std::map<Vertex, int>;

/// Simple undirected graph on the dense vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Throws InputError on loops, parallel edges and out-of-range ids.
  void add_edge(Vertex u, Vertex v);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  /// Same vertex set with the given edges removed (missing edges are ignored).
  Graph without_edges(std::span<const Edge> drop) const;

  /// Adjacency bitmask of v; requires n <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Explicit subgraph of a host graph: a vertex set plus an edge list.
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;

  bool operator==(const Subgraph&) const = default;
};

/// Sequence of distinct vertices; consecutive ones adjacent in the host graph.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  int parity() const { return length() % 2; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool empty() const { return vertices.empty(); }
  std::vector<Edge> edges() const;
  Path reversed() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

/// Pair (A, B) of vertex sets covering V(G) with no edge from A\B to B\A.
struct Separation {
  VertexSet a;
  VertexSet b;

  VertexSet separator() const;
  int order() const { return static_cast<int>(separator().size()); }
};

bool is_path_in(const Graph& g, const Path& p);

/// Normalizes an arbitrary vertex list to a VertexSet.
VertexSet make_vertex_set(std::vector<Vertex> vs);

bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet complement(const VertexSet& s, int n);

}  // namespace oddminor
