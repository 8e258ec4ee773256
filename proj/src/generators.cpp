#include "oddminor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "oddminor/errors.hpp"
#include "oddminor/odd_minor.hpp"

namespace oddminor {

namespace {

// mt19937_64 output is fixed by the standard; distributions are not, so
// ranges are reduced by hand.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "complete: n must be nonnegative");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int m, int n) {
  require(m >= 0 && n >= 0, "complete_bipartite: sizes must be nonnegative");
  Graph g(m + n);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = m; v < m + n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path: n must be positive");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random: n must be nonnegative");
  require(p >= 0.0 && p <= 1.0, "random: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

GeneratedInstance join_subdivision(int s, int t, const std::vector<int>& counts) {
  require(s >= 0 && t >= 0, "join_subdivision: s and t must be nonnegative");
  JoinPattern pat{s, t};
  const auto pedges = pat.edges();
  require(counts.size() == pedges.size(), "join_subdivision: expected " + std::to_string(pedges.size()) +
                                              " subdivision counts, got " + std::to_string(counts.size()));
  int n = pat.size();
  for (int c : counts) {
    require(c >= 0, "join_subdivision: counts must be nonnegative");
    n += c;
  }
  Graph g(n);
  std::vector<Vertex> branch(static_cast<std::size_t>(pat.size()));
  std::iota(branch.begin(), branch.end(), 0);
  std::vector<Path> linking;
  Vertex next = pat.size();
  for (std::size_t k = 0; k < pedges.size(); ++k) {
    std::vector<Vertex> vs{pedges[k].u};
    for (int i = 0; i < counts[k]; ++i) vs.push_back(next++);
    vs.push_back(pedges[k].v);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) g.add_edge(vs[i], vs[i + 1]);
    linking.emplace_back(std::move(vs));
  }
  GeneratedInstance out;
  out.graph = std::move(g);
  out.embedding = make_embedding(s, t, std::move(branch), std::move(linking));
  return out;
}

GeneratedInstance join_subdivision(int s, int t, int count) {
  return join_subdivision(s, t, std::vector<int>(JoinPattern{s, t}.edges().size(), count));
}

GeneratedInstance chorded_subdivision(int s, int t, int chords, std::uint64_t seed) {
  require(s >= 1 && t >= 0, "chorded_subdivision: need s >= 1 and t >= 0");
  require(chords >= 0, "chorded_subdivision: chord count must be nonnegative");
  const int k = s + t;
  require(2 * chords <= k, "chorded_subdivision: not enough branch vertices for disjoint chords");
  std::mt19937_64 rng(seed);
  JoinPattern pat{s, t};
  const auto pedges = pat.edges();

  // odd subdivision counts make every linking path even, so all branch
  // vertices share a side and a C-path is parity-breaking iff it is odd
  std::vector<int> counts(pedges.size());
  for (int& c : counts) c = below(rng, 2) ? 3 : 1;
  GeneratedInstance base = join_subdivision(s, t, counts);
  const SubdivisionEmbedding& emb = *base.embedding;

  std::vector<Vertex> ends(static_cast<std::size_t>(k));
  std::iota(ends.begin(), ends.end(), 0);
  for (int i = k - 1; i > 0; --i) std::swap(ends[i], ends[below(rng, static_cast<std::uint64_t>(i) + 1)]);

  std::vector<Vertex> internal;
  for (const Path& p : emb.linking) {
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) internal.push_back(p.vertices[i]);
  }
  std::vector<char> detour_used(static_cast<std::size_t>(base.graph.vertex_count()), 0);

  std::vector<Edge> extra;
  std::vector<std::vector<Vertex>> chord_paths;
  int next = base.graph.vertex_count();
  auto fresh_segment = [&](std::vector<Vertex>& vs, int edges_to_target, Vertex target) {
    for (int i = 0; i + 1 < edges_to_target; ++i) {
      extra.emplace_back(vs.back(), next);
      vs.push_back(next++);
    }
    extra.emplace_back(vs.back(), target);
    vs.push_back(target);
  };
  for (int c = 0; c < chords; ++c) {
    Vertex x = ends[2 * c];
    Vertex y = ends[2 * c + 1];
    std::vector<Vertex> vs{x};
    switch (below(rng, 3)) {
      case 0:
        // a direct edge: branch vertices are never adjacent after subdividing
        fresh_segment(vs, 1, y);
        break;
      case 1:
        fresh_segment(vs, below(rng, 2) ? 5 : 3, y);
        break;
      default: {
        std::vector<Vertex> options;
        for (Vertex w : internal) {
          if (!detour_used[w]) options.push_back(w);
        }
        if (options.empty()) {
          fresh_segment(vs, 3, y);
          break;
        }
        Vertex w = options[below(rng, options.size())];
        detour_used[w] = 1;
        // keep the total odd and never double an existing edge
        int first = 1 + static_cast<int>(below(rng, 2));
        if (first == 1 && base.graph.has_edge(x, w)) first = 2;
        int second = (first % 2 == 0) ? 1 : 2;
        if (second == 1 && base.graph.has_edge(y, w)) second = 3;
        fresh_segment(vs, first, w);
        fresh_segment(vs, second, y);
        break;
      }
    }
    chord_paths.push_back(std::move(vs));
  }

  // shuffle ids so that nothing downstream can lean on the layout
  const int n = next;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, static_cast<std::uint64_t>(i) + 1)]);
  auto relabel = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(perm[v]);
    return out;
  };

  GeneratedInstance out;
  out.graph = Graph(n);
  for (const Edge& e : base.graph.edges()) out.graph.add_edge(perm[e.u], perm[e.v]);
  for (const Edge& e : extra) out.graph.add_edge(perm[e.u], perm[e.v]);
  std::vector<Path> linking;
  for (const Path& p : emb.linking) linking.emplace_back(relabel(p.vertices));
  out.embedding = make_embedding(s, t, relabel(emb.branch), std::move(linking));
  for (const auto& vs : chord_paths) out.chords.emplace_back(relabel(vs));

  Subgraph h = out.embedding->union_subgraph();
  for (const Path& p : out.chords) {
    if (!is_path_in(out.graph, p) || !is_parity_breaking(p, h)) {
      throw InternalError("chorded_subdivision produced a chord that is not parity-breaking");
    }
  }
  return out;
}

}  // namespace oddminor
