#include "oddminor/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "minor_search.hpp"
#include "oddminor/algorithms.hpp"

namespace oddminor {

SignedGraph::SignedGraph(Graph g, EdgeSet sigma) : graph(std::move(g)), signature(std::move(sigma)) {
  for (const Edge& e : signature) {
    if (!graph.has_edge(e.u, e.v)) {
      throw InputError("signature edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
    }
  }
}

EdgeSet edge_cut(const Graph& g, const VertexSet& x) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : x) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
    in[v] = 1;
  }
  EdgeSet cut;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) cut.insert(e);
  }
  return cut;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

SignedGraph resign(const SignedGraph& sg, const VertexSet& x) {
  SignedGraph out;
  out.graph = sg.graph;
  out.signature = symmetric_difference(sg.signature, edge_cut(sg.graph, x));
  return out;
}

bool is_balanced(const SignedGraph& sg, const Path& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) throw InputError("is_balanced: a cycle needs at least 3 vertices");
  if (make_vertex_set(vs).size() != vs.size()) throw InputError("is_balanced: repeated vertex in cycle");
  int negative = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex a = vs[i];
    Vertex b = vs[(i + 1) % vs.size()];
    if (!sg.graph.has_edge(a, b)) throw InputError("is_balanced: input is not a cycle of the graph");
    negative += sg.signature.count(Edge(a, b)) ? 1 : 0;
  }
  return negative % 2 == 0;
}

std::optional<VertexSet> signatures_equivalent(const SignedGraph& sg, const EdgeSet& sigma2) {
  const Graph& g = sg.graph;
  for (const Edge& e : sigma2) {
    if (!g.has_edge(e.u, e.v)) throw InputError("signatures_equivalent: edge outside the graph");
  }
  EdgeSet d = symmetric_difference(sg.signature, sigma2);
  // D must be delta(X): propagate sides along a spanning forest
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        int want = side[u] ^ (d.count(Edge(u, w)) ? 1 : 0);
        if (side[w] == -1) {
          side[w] = want;
          queue.push_back(w);
        } else if (side[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet x;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == 1) x.push_back(v);
  }
  return x;
}

bool is_balanced_signature(const Graph& h, const EdgeSet& sigma_h) {
  return signatures_equivalent(SignedGraph(h, sigma_h), EdgeSet{}).has_value();
}

Verdict verify_signed_minor_model(const Graph& g, const Graph& h, const EdgeSet& sigma_h,
                                  const SignedMinorModel& model) {
  const int hn = h.vertex_count();
  if (static_cast<int>(model.trees.size()) != hn || static_cast<int>(model.colorings.size()) != hn) {
    return Verdict::fail("bad-shape");
  }
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int u = 0; u < hn; ++u) {
    const Subgraph& t = model.trees[u];
    if (auto why = subtree_defect(g, t)) return Verdict::fail(*why);
    for (Vertex v : t.vertices) {
      if (owner[v] != -1) return Verdict::fail("overlapping-trees");
      owner[v] = u;
    }
    const TwoColoring& c = model.colorings[u];
    if (c.size() != t.vertices.size()) return Verdict::fail("improper-coloring");
    for (auto [v, col] : c) {
      if (!set_contains(t.vertices, v) || (col != 1 && col != 2)) return Verdict::fail("improper-coloring");
    }
    for (const Edge& e : t.edges) {
      if (c.at(e.u) == c.at(e.v)) return Verdict::fail("improper-coloring");
    }
  }
  for (const auto& [he, _] : model.edge_witness) {
    if (!h.has_edge(he.u, he.v)) return Verdict::fail("bad-shape");
  }
  for (const Edge& he : h.edges()) {
    auto it = model.edge_witness.find(he);
    if (it == model.edge_witness.end()) return Verdict::fail("missing-witness");
    const Edge& ge = it->second;
    if (!g.has_edge(ge.u, ge.v)) return Verdict::fail("bad-edge");
    int ou = owner[ge.u];
    int ov = owner[ge.v];
    if (!((ou == he.u && ov == he.v) || (ou == he.v && ov == he.u))) return Verdict::fail("witness-endpoints");
    bool same = model.colorings[ou].at(ge.u) == model.colorings[ov].at(ge.v);
    if (same != static_cast<bool>(sigma_h.count(he))) return Verdict::fail("witness-sign");
  }
  return Verdict::pass();
}

std::optional<SignedMinorModel> find_signed_minor(const Graph& g, const Graph& h, const EdgeSet& sigma_h,
                                                  const SearchOptions& options) {
  for (const Edge& e : sigma_h) {
    if (!h.has_edge(e.u, e.v)) throw InputError("find_signed_minor: signature edge outside the pattern");
  }
  if (g.vertex_count() > options.limit) {
    throw SizeLimitExceeded("find_signed_minor", g.vertex_count(), options.limit);
  }
  detail::PatternSearchOptions opts;
  const bool complete = h.edge_count() == h.vertex_count() * (h.vertex_count() - 1) / 2;
  opts.symmetric_labels =
      complete && (sigma_h.empty() || static_cast<int>(sigma_h.size()) == h.edge_count());
  opts.parity_prune = options.parity_prune;
  auto hit = detail::search_pattern(g, h, sigma_h, opts);
  if (!hit) return std::nullopt;
  SignedMinorModel model{std::move(hit->trees), std::move(hit->colorings), std::move(hit->witness)};
  auto verdict = verify_signed_minor_model(g, h, sigma_h, model);
  if (!verdict) throw InternalError("find_signed_minor produced an invalid model: " + verdict.reason);
  return model;
}

}  // namespace oddminor
