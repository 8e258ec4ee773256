#include "oddminor/odd_minor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "minor_search.hpp"
#include "oddminor/algorithms.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/signed_graph.hpp"

namespace oddminor {

bool is_parity_breaking(const Path& p, const TwoColoring& alpha) {
  if (p.vertices.size() < 2 || p.front() == p.back()) {
    throw InputError("parity check needs a path with distinct ends");
  }
  auto a = alpha.find(p.front());
  auto b = alpha.find(p.back());
  if (a == alpha.end() || b == alpha.end()) throw InputError("path end outside the reference coloring");
  int diff = ((a->second - b->second) % 2 + 2) % 2;
  return p.parity() != diff;
}

bool is_parity_breaking(const Path& p, const Subgraph& h) {
  auto beta = subgraph_two_coloring(h);
  if (!beta) throw InputError("reference subgraph is not connected and bipartite");
  return is_parity_breaking(p, *beta);
}

Verdict verify_odd_minor_model(const Graph& g, const Graph& h, const OddMinorModel& model) {
  const int hn = h.vertex_count();
  if (static_cast<int>(model.trees.size()) != hn) return Verdict::fail("bad-shape");
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int u = 0; u < hn; ++u) {
    const Subgraph& t = model.trees[u];
    if (auto why = subtree_defect(g, t)) return Verdict::fail(*why);
    for (Vertex v : t.vertices) {
      if (owner[v] != -1) return Verdict::fail("overlapping-trees");
      owner[v] = u;
    }
  }
  for (auto [v, c] : model.alpha) {
    if (!g.contains(v) || owner[v] == -1 || (c != 1 && c != 2)) return Verdict::fail("alpha-domain");
  }
  for (const Subgraph& t : model.trees) {
    for (Vertex v : t.vertices) {
      if (!model.alpha.count(v)) return Verdict::fail("alpha-domain");
    }
    for (const Edge& e : t.edges) {
      if (model.alpha.at(e.u) == model.alpha.at(e.v)) return Verdict::fail("bichromatic-violation");
    }
  }

  std::set<Edge> covered;
  std::vector<char> used_inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Connector& c : model.connectors) {
    if (!h.has_edge(c.h_edge.u, c.h_edge.v) || !covered.insert(c.h_edge).second) {
      return Verdict::fail("bad-shape");
    }
    const auto& vs = c.path.vertices;
    if (vs.size() < 2) return Verdict::fail("bad-shape");
    if (model.form == ConnectorForm::Edge && vs.size() != 2) return Verdict::fail("bad-shape");
    if (!is_path_in(g, c.path)) return Verdict::fail("bad-edge");
    int oa = owner[c.path.front()];
    int ob = owner[c.path.back()];
    if (!((oa == c.h_edge.u && ob == c.h_edge.v) || (oa == c.h_edge.v && ob == c.h_edge.u))) {
      return Verdict::fail("connector-endpoints");
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (owner[vs[i]] != -1 || used_inside[vs[i]]) return Verdict::fail("connector-disjointness");
      used_inside[vs[i]] = 1;
    }
    if (!is_parity_breaking(c.path, model.alpha)) return Verdict::fail("connector-parity");
  }
  if (static_cast<int>(covered.size()) != h.edge_count()) return Verdict::fail("missing-connector");
  return Verdict::pass();
}

bool is_minor_model(const Graph& g, const Graph& h, const OddMinorModel& model) {
  const int hn = h.vertex_count();
  if (static_cast<int>(model.trees.size()) != hn) return false;
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int u = 0; u < hn; ++u) {
    for (Vertex v : model.trees[u].vertices) {
      if (!g.contains(v) || owner[v] != -1) return false;
      owner[v] = u;
    }
  }
  // contract each connector into the branch set of its first pattern vertex
  for (const Connector& c : model.connectors) {
    const auto& vs = c.path.vertices;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (!g.contains(vs[i]) || owner[vs[i]] != -1) return false;
      owner[vs[i]] = c.h_edge.u;
    }
  }
  for (int u = 0; u < hn; ++u) {
    VertexSet branch;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (owner[v] == u) branch.push_back(v);
    }
    if (branch.empty()) return false;
    Graph sub = g.induced(branch);
    if (connected_components(sub).size() != 1) return false;
  }
  for (const Edge& he : h.edges()) {
    bool found = false;
    for (const Edge& e : g.edges()) {
      if ((owner[e.u] == he.u && owner[e.v] == he.v) || (owner[e.u] == he.v && owner[e.v] == he.u)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

OddMinorModel single_vertex_model(Vertex v) {
  OddMinorModel m;
  m.trees.push_back(Subgraph{{v}, {}});
  m.alpha[v] = 1;
  return m;
}

OddMinorModel single_edge_model(const Edge& e) {
  OddMinorModel m;
  m.trees.push_back(Subgraph{{e.u}, {}});
  m.trees.push_back(Subgraph{{e.v}, {}});
  m.alpha[e.u] = 1;
  m.alpha[e.v] = 1;
  m.connectors.push_back(Connector{Edge(0, 1), Path({e.u, e.v})});
  return m;
}

// Odd cycle v0 .. v_2k: T1 = {v0}, T2 = {v1}, T3 = v2 .. v_2k.
OddMinorModel odd_cycle_model(const std::vector<Vertex>& cycle) {
  OddMinorModel m;
  const std::size_t len = cycle.size();
  m.trees.push_back(Subgraph{{cycle[0]}, {}});
  m.trees.push_back(Subgraph{{cycle[1]}, {}});
  Subgraph rest;
  for (std::size_t i = 2; i < len; ++i) {
    rest.vertices.push_back(cycle[i]);
    if (i > 2) rest.edges.emplace_back(cycle[i - 1], cycle[i]);
  }
  rest.vertices = make_vertex_set(rest.vertices);
  std::sort(rest.edges.begin(), rest.edges.end());
  m.trees.push_back(rest);
  m.alpha[cycle[0]] = 1;
  m.alpha[cycle[1]] = 1;
  for (std::size_t i = 2; i < len; ++i) m.alpha[cycle[i]] = (i % 2 == 0) ? 1 : 2;
  m.connectors.push_back(Connector{Edge(0, 1), Path({cycle[0], cycle[1]})});
  m.connectors.push_back(Connector{Edge(0, 2), Path({cycle[0], cycle[len - 1]})});
  m.connectors.push_back(Connector{Edge(1, 2), Path({cycle[1], cycle[2]})});
  return m;
}

}  // namespace

std::optional<OddMinorModel> find_odd_clique_minor(const Graph& g, int t, const OddMinorOptions& options) {
  if (t < 1) throw InputError("find_odd_clique_minor: t must be at least 1");
  const int n = g.vertex_count();
  if (t > n) return std::nullopt;
  const Graph kt = complete_graph(t);

  std::optional<OddMinorModel> found;
  if (options.shortcuts && t == 1) {
    found = single_vertex_model(0);
  } else if (options.shortcuts && t == 2) {
    if (g.edge_count() == 0) return std::nullopt;
    found = single_edge_model(g.edges().front());
  } else if (options.shortcuts && t == 3) {
    auto bp = bipartition(g);
    if (bp.bipartite()) return std::nullopt;
    found = odd_cycle_model(*bp.odd_cycle);
  } else {
    if (options.parity_prune && t >= 3 && is_bipartite(g)) return std::nullopt;
    if (n > options.limit) throw SizeLimitExceeded("find_odd_clique_minor", n, options.limit);
    auto kt_edges = kt.edges();
    EdgeSet all(kt_edges.begin(), kt_edges.end());
    detail::PatternSearchOptions opts;
    opts.symmetric_labels = true;
    opts.parity_prune = options.parity_prune;
    auto hit = detail::search_pattern(g, kt, all, opts);
    if (!hit) return std::nullopt;
    OddMinorModel m;
    m.trees = std::move(hit->trees);
    for (const auto& col : hit->colorings) m.alpha.insert(col.begin(), col.end());
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (int u = 0; u < t; ++u) {
      for (Vertex v : m.trees[u].vertices) owner[v] = u;
    }
    for (const auto& [he, ge] : hit->witness) {
      Path p = owner[ge.u] == he.u ? Path({ge.u, ge.v}) : Path({ge.v, ge.u});
      m.connectors.push_back(Connector{he, std::move(p)});
    }
    found = std::move(m);
  }
  auto verdict = verify_odd_minor_model(g, kt, *found);
  if (!verdict) throw InternalError("find_odd_clique_minor produced an invalid model: " + verdict.reason);
  return found;
}

}  // namespace oddminor
