#include "oddminor/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "oddminor/errors.hpp"

namespace oddminor {

BipartitionResult bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  BipartitionResult result;

  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != 0) continue;
    side[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == 0) {
          side[w] = 3 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // same BFS parity: walk both ends up to their common ancestor
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<Vertex> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          result.odd_cycle = std::move(cycle);
          return result;
        }
      }
    }
  }
  result.sides = std::move(side);
  return result;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite(); }

std::optional<TwoColoring> subgraph_two_coloring(const Subgraph& h) {
  TwoColoring color;
  if (h.vertices.empty()) return color;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : h.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  color[h.vertices.front()] = 1;
  std::deque<Vertex> queue{h.vertices.front()};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adj[u]) {
      auto it = color.find(w);
      if (it == color.end()) {
        color[w] = 3 - color[u];
        queue.push_back(w);
      } else if (it->second == color[u]) {
        return std::nullopt;
      }
    }
  }
  if (color.size() != h.vertices.size()) return std::nullopt;
  return color;
}

std::vector<VertexSet> components_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(removed);
  std::vector<VertexSet> comps;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_without(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0));
}

std::optional<std::string> subtree_defect(const Graph& g, const Subgraph& t) {
  if (t.vertices.empty()) return "not-a-tree";
  if (make_vertex_set(t.vertices) != t.vertices) return "bad-shape";
  for (Vertex v : t.vertices) {
    if (!g.contains(v)) return "bad-shape";
  }
  if (t.edges.size() + 1 != t.vertices.size()) return "not-a-tree";
  for (const Edge& e : t.edges) {
    if (!g.has_edge(e.u, e.v)) return "bad-edge";
    if (!set_contains(t.vertices, e.u) || !set_contains(t.vertices, e.v)) return "not-a-tree";
  }
  // |E| = |V| - 1 plus connected means acyclic
  if (!subgraph_two_coloring(t).has_value()) return "not-a-tree";
  return std::nullopt;
}

std::vector<VertexSet> blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.push_back({root});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        // p separates the subtree of done.v: pop one block
        std::vector<Vertex> block;
        Edge cut(p, done.v);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e == cut) break;
        }
        out.push_back(make_vertex_set(std::move(block)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Calls fn on every k-subset of 0..n-1 in lexicographic order; stops when fn
// returns true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(static_cast<const std::vector<Vertex>&>(idx))) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Separation> find_small_separation(const Graph& g, const VertexSet& z, int max_order) {
  const int n = g.vertex_count();
  std::vector<char> in_z(static_cast<std::size_t>(n), 0);
  for (Vertex v : z) {
    if (!g.contains(v)) throw InputError("find_small_separation: unknown vertex in Z");
    in_z[v] = 1;
  }
  std::optional<Separation> found;
  for (int k = 0; k <= std::min(max_order, n) && !found; ++k) {
    for_each_combination(n, k, [&](const std::vector<Vertex>& cut) {
      std::vector<char> removed(static_cast<std::size_t>(n), 0);
      for (Vertex v : cut) removed[v] = 1;
      auto comps = components_without(g, removed);
      std::vector<std::size_t> free_comps;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        for (Vertex v : comps[i]) {
          if (!in_z[v]) {
            free_comps.push_back(i);
            break;
          }
        }
      }
      if (free_comps.size() < 2) return false;
      // components come out ordered by least vertex; the first free one is A's side
      VertexSet a = cut;
      VertexSet b = cut;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        auto& side = (i == free_comps.front()) ? a : b;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
      }
      found = Separation{make_vertex_set(std::move(a)), make_vertex_set(std::move(b))};
      return true;
    });
  }
  return found;
}

std::optional<std::vector<Path>> disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                int k) {
  if (k < 1) throw InputError("disjoint_paths: k must be positive");
  const int n = g.vertex_count();
  for (Vertex v : a) {
    if (!g.contains(v)) throw InputError("disjoint_paths: unknown vertex in A");
  }
  for (Vertex v : b) {
    if (!g.contains(v)) throw InputError("disjoint_paths: unknown vertex in B");
  }
  const bool local = a.size() == 1 && b.size() == 1 && a[0] != b[0];

  // vertex v splits into in = 2v and out = 2v+1; source = 2n, sink = 2n+1
  const int nodes = 2 * n + 2;
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> net(static_cast<std::size_t>(nodes));
  std::vector<std::vector<int>> original(static_cast<std::size_t>(nodes));
  auto add_arc = [&](int from, int to, int cap) {
    net[from].push_back({to, cap, static_cast<int>(net[to].size())});
    original[from].push_back(cap);
    net[to].push_back({from, 0, static_cast<int>(net[from].size()) - 1});
    original[to].push_back(0);
  };
  for (Vertex v = 0; v < n; ++v) {
    bool terminal = local && (v == a[0] || v == b[0]);
    add_arc(2 * v, 2 * v + 1, terminal ? k : 1);
  }
  for (const Edge& e : g.edges()) {
    add_arc(2 * e.u + 1, 2 * e.v, 1);
    add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  for (Vertex v : a) add_arc(source, 2 * v, k);
  for (Vertex v : b) add_arc(2 * v + 1, sink, k);

  int flow = 0;
  while (flow < k) {
    std::vector<std::pair<int, int>> prev(static_cast<std::size_t>(nodes), {-1, -1});
    std::deque<int> queue{source};
    prev[source] = {source, -1};
    while (!queue.empty() && prev[sink].first == -1) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(net[u].size()); ++i) {
        const Arc& arc = net[u][i];
        if (arc.cap > 0 && prev[arc.to].first == -1) {
          prev[arc.to] = {u, i};
          queue.push_back(arc.to);
        }
      }
    }
    if (prev[sink].first == -1) break;
    for (int v = sink; v != source; v = prev[v].first) {
      Arc& arc = net[prev[v].first][prev[v].second];
      arc.cap -= 1;
      net[v][arc.rev].cap += 1;
    }
    ++flow;
  }
  if (flow < k) return std::nullopt;

  // flow on an arc is its original capacity minus what is left
  std::vector<std::vector<int>> flow_on(static_cast<std::size_t>(nodes));
  for (int u = 0; u < nodes; ++u) flow_on[u].assign(net[u].size(), 0);
  for (int u = 0; u < nodes; ++u) {
    for (std::size_t i = 0; i < net[u].size(); ++i) {
      const Arc& arc = net[u][i];
      if (original[u][i] > 0) flow_on[u][i] = original[u][i] - arc.cap;
    }
  }
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (Vertex v : a) in_a[v] = 1;
  for (Vertex v : b) in_b[v] = 1;

  std::vector<Path> paths;
  for (int p = 0; p < k; ++p) {
    std::vector<Vertex> walk;
    int u = source;
    while (u != sink) {
      int chosen = -1;
      for (std::size_t i = 0; i < net[u].size(); ++i) {
        if (flow_on[u][i] > 0) {
          chosen = static_cast<int>(i);
          break;
        }
      }
      if (chosen < 0) throw InternalError("disjoint_paths: flow decomposition failed");
      flow_on[u][chosen] -= 1;
      u = net[u][chosen].to;
      if (u < 2 * n && u % 2 == 0) {
        Vertex v = u / 2;
        // erase a loop closed through a high-capacity terminal
        auto seen = std::find(walk.begin(), walk.end(), v);
        if (seen != walk.end()) walk.erase(seen, walk.end());
        walk.push_back(v);
      }
    }
    // keep the segment from the last A vertex to the first B vertex after it
    std::size_t first = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (in_a[walk[i]]) first = i;
    }
    std::size_t last = first;
    while (!in_b[walk[last]]) ++last;
    paths.emplace_back(std::vector<Vertex>(walk.begin() + static_cast<std::ptrdiff_t>(first),
                                           walk.begin() + static_cast<std::ptrdiff_t>(last) + 1));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace oddminor
