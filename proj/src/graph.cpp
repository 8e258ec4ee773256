#include "oddminor/graph.hpp"

#include <string>

#include "oddminor/errors.hpp"

namespace oddminor {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " references a vertex outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!contains(keep[i])) throw InputError("induced: unknown vertex " + std::to_string(keep[i]));
    index[keep[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adj_[keep[i]]) {
      int j = index[w];
      if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
    }
  }
  return h;
}

Graph Graph::without_edges(std::span<const Edge> drop) const {
  std::vector<Edge> sorted(drop.begin(), drop.end());
  std::sort(sorted.begin(), sorted.end());
  Graph h(n_);
  for (const Edge& e : edges()) {
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) h.add_edge(e.u, e.v);
  }
  return h;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  std::uint64_t m = 0;
  for (Vertex w : adj_[v]) m |= std::uint64_t{1} << w;
  return m;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[i + 1]);
  return out;
}

Path Path::reversed() const {
  return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend()));
}

VertexSet Separation::separator() const { return set_intersection(a, b); }

bool is_path_in(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet complement(const VertexSet& s, int n) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (!set_contains(s, v)) out.push_back(v);
  }
  return out;
}

}  // namespace oddminor
