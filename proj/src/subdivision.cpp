#include "oddminor/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "oddminor/algorithms.hpp"

namespace oddminor {

std::vector<Edge> JoinPattern::edges() const {
  std::vector<Edge> out;
  const int k = size();
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < k; ++j) out.emplace_back(i, j);
  }
  return out;
}

int JoinPattern::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= size() || i == j || i >= s) return -1;
  // rows 0..i-1 contribute (k-1) + (k-2) + ... + (k-i) edges
  const int k = size();
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

Graph JoinPattern::graph() const {
  auto es = edges();
  return Graph::from_edges(size(), es);
}

VertexSet SubdivisionEmbedding::branch_set() const { return make_vertex_set(branch); }

Subgraph SubdivisionEmbedding::union_subgraph() const {
  Subgraph h;
  std::vector<Vertex> vs = branch;
  for (const Path& p : linking) {
    vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
    for (const Edge& e : p.edges()) h.edges.push_back(e);
  }
  h.vertices = make_vertex_set(std::move(vs));
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

Path SubdivisionEmbedding::linking_path(int i, int j) const {
  int k = pattern.edge_index(i, j);
  if (k < 0) throw InputError("no pattern edge between " + std::to_string(i) + " and " + std::to_string(j));
  return i < j ? linking[k] : linking[k].reversed();
}

SubdivisionEmbedding make_embedding(int s, int t, std::vector<Vertex> branch, std::vector<Path> linking) {
  SubdivisionEmbedding emb;
  emb.pattern = JoinPattern{s, t};
  emb.branch = std::move(branch);
  emb.linking = std::move(linking);
  emb.origin.resize(static_cast<std::size_t>(s + t));
  std::iota(emb.origin.begin(), emb.origin.end(), 0);
  return emb;
}

Verdict verify_subdivision(const Graph& g, const SubdivisionEmbedding& emb, bool require_bipartite) {
  const JoinPattern& pat = emb.pattern;
  if (pat.s < 0 || pat.t < 0) return Verdict::fail("bad-shape");
  const auto pedges = pat.edges();
  if (static_cast<int>(emb.branch.size()) != pat.size() || emb.linking.size() != pedges.size() ||
      static_cast<int>(emb.origin.size()) != pat.size()) {
    return Verdict::fail("bad-shape");
  }
  std::vector<char> role(static_cast<std::size_t>(g.vertex_count()), 0);  // 1 branch, 2 internal
  for (Vertex b : emb.branch) {
    if (!g.contains(b) || role[b]) return Verdict::fail("bad-branch");
    role[b] = 1;
  }
  for (std::size_t k = 0; k < pedges.size(); ++k) {
    const Path& p = emb.linking[k];
    if (!is_path_in(g, p) || p.vertices.size() < 2) return Verdict::fail("bad-path");
    if (p.front() != emb.branch[pedges[k].u] || p.back() != emb.branch[pedges[k].v]) {
      return Verdict::fail("path-endpoints");
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (role[p.vertices[i]]) return Verdict::fail("not-internally-disjoint");
      role[p.vertices[i]] = 2;
    }
  }
  if (require_bipartite) {
    Subgraph h = emb.union_subgraph();
    // the union may be disconnected when the pattern is edgeless
    Graph hg(g.vertex_count());
    for (const Edge& e : h.edges) hg.add_edge(e.u, e.v);
    if (!is_bipartite(hg)) return Verdict::fail("not-bipartite");
  }
  return Verdict::pass();
}

int min_bipartite_subdivision_order(int s, int t) {
  // a pattern edge with both ends on one side needs an internal vertex
  auto pairs = [](long long x) { return x * (x - 1) / 2; };
  long long best = std::numeric_limits<long long>::max();
  for (int a = 0; a <= s; ++a) {
    for (int b = 0; b <= t; ++b) {
      long long same = pairs(a) + pairs(s - a) + static_cast<long long>(a) * b +
                       static_cast<long long>(s - a) * (t - b);
      best = std::min(best, same);
    }
  }
  return s + t + static_cast<int>(best);
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

class BranchParity {
 public:
  explicit BranchParity(int k) : parent_(static_cast<std::size_t>(k)), parity_(static_cast<std::size_t>(k), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::pair<int, int> find(int v) const {
    int p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }
  // forced parity of the a-b distance, or -1 when free
  int relation(int a, int b) const {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    return ra == rb ? (pa ^ pb) : -1;
  }
  void unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, int s, int t) : g_(g), pat_{s, t}, pedges_(pat_.edges()) {
    const int n = g.vertex_count();
    all_ = n == 64 ? ~Mask{0} : (bit(n) - 1);
    nb_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nb_[v] = g.neighbor_mask(v);
  }

  std::optional<SubdivisionEmbedding> run() {
    const int n = g_.vertex_count();
    const int k = pat_.size();
    if (k == 0) return make_embedding(pat_.s, pat_.t, {}, {});
    if (n < min_bipartite_subdivision_order(pat_.s, pat_.t)) return std::nullopt;

    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    for (Vertex v : by_degree) {
      if (g_.degree(v) >= k - 1) clique_cands_.push_back(v);
      if (g_.degree(v) >= pat_.s) stable_cands_.push_back(v);
    }
    branch_.assign(static_cast<std::size_t>(k), -1);
    if (choose_clique(0, 0)) return result_;
    return std::nullopt;
  }

 private:
  bool choose_clique(int i, std::size_t from) {
    if (i == pat_.s) return choose_stable(pat_.s, 0);
    for (std::size_t c = from; c < clique_cands_.size(); ++c) {
      branch_[i] = clique_cands_[c];
      if (choose_clique(i + 1, c + 1)) return true;
    }
    branch_[i] = -1;
    return false;
  }

  bool choose_stable(int i, std::size_t from) {
    if (i == pat_.size()) return try_assignment();
    for (std::size_t c = from; c < stable_cands_.size(); ++c) {
      Vertex v = stable_cands_[c];
      if (std::find(branch_.begin(), branch_.begin() + pat_.s, v) != branch_.begin() + pat_.s) continue;
      branch_[i] = v;
      if (choose_stable(i + 1, c + 1)) return true;
    }
    branch_[i] = -1;
    return false;
  }

  bool try_assignment() {
    const int k = pat_.size();
    branch_mask_ = 0;
    Mask stable_mask = 0;
    for (int i = 0; i < k; ++i) {
      branch_mask_ |= bit(branch_[i]);
      if (i >= pat_.s) stable_mask |= bit(branch_[i]);
    }
    // stable branch vertices gain nothing from each other
    for (int i = pat_.s; i < k; ++i) {
      if (std::popcount(nb_[branch_[i]] & ~stable_mask) < pat_.s) return false;
    }
    used_ = 0;
    paths_.assign(pedges_.size(), Path{});
    routed_.assign(pedges_.size(), 0);
    BranchParity parity(k);
    if (!route(static_cast<int>(pedges_.size()), parity)) return false;
    result_ = make_embedding(pat_.s, pat_.t, branch_, paths_);
    return true;
  }

  Mask free_mask() const { return all_ & ~branch_mask_ & ~used_; }

  // shortest a-b path length through free vertices with the requested parity
  // (-1 for either); 0 when none exists
  int shortest(Vertex a, Vertex b, int parity, Mask free) const {
    const int n = g_.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(2 * n), -1);
    std::deque<int> queue;
    dist[2 * a] = 0;
    queue.push_back(2 * a);
    while (!queue.empty()) {
      int state = queue.front();
      queue.pop_front();
      Vertex v = state / 2;
      int p = state % 2;
      Mask next = nb_[v];
      if (next & bit(b)) {
        int len = dist[state] + 1;
        if (parity == -1 || len % 2 == parity) return len;
      }
      next &= free;
      while (next) {
        Vertex w = std::countr_zero(next);
        next &= next - 1;
        int ns = 2 * w + (p ^ 1);
        if (dist[ns] == -1) {
          dist[ns] = dist[state] + 1;
          queue.push_back(ns);
        }
      }
    }
    return 0;
  }

  bool route(int remaining, BranchParity& parity) {
    if (remaining == 0) return true;
    const Mask free = free_mask();
    const int free_count = std::popcount(free);

    // every branch vertex still needs a private first step per unrouted edge
    for (int i = 0; i < pat_.size(); ++i) {
      int need = 0;
      int direct = 0;
      for (std::size_t e = 0; e < pedges_.size(); ++e) {
        if (routed_[e] || (pedges_[e].u != i && pedges_[e].v != i)) continue;
        ++need;
        Vertex other = branch_[pedges_[e].other(i)];
        if (nb_[branch_[i]] & bit(other)) ++direct;
      }
      if (need > std::popcount(nb_[branch_[i]] & free) + direct) return false;
    }

    int pick = -1;
    int pick_len = 0;
    int internal_needed = 0;
    std::vector<int> lens(pedges_.size(), 0);
    for (std::size_t e = 0; e < pedges_.size(); ++e) {
      if (routed_[e]) continue;
      int rel = parity.relation(pedges_[e].u, pedges_[e].v);
      int len = shortest(branch_[pedges_[e].u], branch_[pedges_[e].v], rel, free);
      if (len == 0) return false;
      lens[e] = len;
      internal_needed += len - 1;
      if (len > pick_len) {
        pick = static_cast<int>(e);
        pick_len = len;
      }
    }
    if (internal_needed > free_count) return false;

    const Edge pe = pedges_[pick];
    const Vertex a = branch_[pe.u];
    const Vertex b = branch_[pe.v];
    const int rel = parity.relation(pe.u, pe.v);
    const int max_len = 1 + free_count - (internal_needed - (pick_len - 1));
    routed_[pick] = 1;
    for (int len = pick_len; len <= max_len; ++len) {
      if (rel != -1 && len % 2 != rel) continue;
      std::vector<Vertex> walk{a};
      bool ok = extend(walk, b, len, free, [&](const std::vector<Vertex>& path) {
        Mask inner = 0;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) inner |= bit(path[i]);
        used_ |= inner;
        BranchParity next = parity;
        next.unite(pe.u, pe.v, len % 2);
        paths_[pick] = Path(path);
        bool done = route(remaining - 1, next);
        used_ &= ~inner;
        return done;
      });
      if (ok) return true;
    }
    routed_[pick] = 0;
    return false;
  }

  // depth-first enumeration of a-b paths of exactly `len` edges
  template <typename Fn>
  bool extend(std::vector<Vertex>& walk, Vertex b, int len, Mask free, Fn&& fn) {
    Vertex v = walk.back();
    int steps = static_cast<int>(walk.size()) - 1;
    if (steps == len - 1) {
      if (!(nb_[v] & bit(b))) return false;
      walk.push_back(b);
      bool done = fn(walk);
      walk.pop_back();
      return done;
    }
    Mask next = nb_[v] & free;
    for (Vertex u : walk) next &= ~bit(u);
    while (next) {
      Vertex w = std::countr_zero(next);
      next &= next - 1;
      walk.push_back(w);
      bool done = extend(walk, b, len, free, fn);
      walk.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  JoinPattern pat_;
  std::vector<Edge> pedges_;
  Mask all_ = 0;
  std::vector<Mask> nb_;
  std::vector<Vertex> clique_cands_;
  std::vector<Vertex> stable_cands_;
  std::vector<Vertex> branch_;
  Mask branch_mask_ = 0;
  Mask used_ = 0;
  std::vector<Path> paths_;
  std::vector<char> routed_;
  SubdivisionEmbedding result_;
};

}  // namespace

std::optional<SubdivisionEmbedding> find_bipartite_join_subdivision(const Graph& g, int s, int t,
                                                                    const SubdivisionOptions& options) {
  if (s < 1 || t < 0) throw InputError("find_bipartite_join_subdivision: need s >= 1 and t >= 0");
  const int n = g.vertex_count();
  if (n < min_bipartite_subdivision_order(s, t)) return std::nullopt;
  const int limit = std::min(options.limit, 64);
  if (n > limit) throw SizeLimitExceeded("find_bipartite_join_subdivision", n, limit);
  auto emb = SubdivisionSearch(g, s, t).run();
  if (emb) {
    auto verdict = verify_subdivision(g, *emb, true);
    if (!verdict) throw InternalError("subdivision search produced an invalid embedding: " + verdict.reason);
  }
  return emb;
}

SubdivisionEmbedding restrict_subdivision(const SubdivisionEmbedding& emb, const VertexSet& x) {
  const JoinPattern& pat = emb.pattern;
  const auto pedges = pat.edges();
  std::vector<char> removed(static_cast<std::size_t>(pat.size()), 0);
  for (int i = 0; i < pat.size(); ++i) {
    if (set_contains(x, emb.branch[i])) removed[i] = 1;
  }
  for (std::size_t k = 0; k < pedges.size(); ++k) {
    const auto& vs = emb.linking[k].vertices;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (!set_contains(x, vs[i])) continue;
      int a = pedges[k].u;
      int b = pedges[k].v;
      if (removed[a] || removed[b]) break;
      // b is the larger index, and the stable end when there is one
      removed[b] = 1;
      break;
    }
  }
  std::vector<int> keep;
  for (int i = 0; i < pat.size(); ++i) {
    if (!removed[i]) keep.push_back(i);
  }
  int s2 = 0;
  for (int i : keep) s2 += pat.is_clique_vertex(i) ? 1 : 0;
  SubdivisionEmbedding out;
  out.pattern = JoinPattern{s2, static_cast<int>(keep.size()) - s2};
  for (int i : keep) {
    out.branch.push_back(emb.branch[i]);
    out.origin.push_back(emb.origin[i]);
  }
  for (const Edge& e : out.pattern.edges()) out.linking.push_back(emb.linking_path(keep[e.u], keep[e.v]));
  return out;
}

bool contains_Kst_star(const Graph& g, int s, int t, int limit) {
  if (s < 0 || t < 0) throw InputError("contains_Kst_star: negative parameter");
  const int n = g.vertex_count();
  const int need = s + t + s * (s - 1) / 2;
  if (n < need) return false;
  if (s == 0) return true;
  limit = std::min(limit, 64);
  if (n > limit) throw SizeLimitExceeded("contains_Kst_star", n, limit);

  std::vector<Mask> nb(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) nb[v] = g.neighbor_mask(v);
  const int clique_degree = t + (s - 1);

  std::vector<Vertex> chosen;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
  }

  // assign distinct subdividers to clique pairs, then count stable candidates
  std::function<bool(std::size_t, Mask)> subdivide = [&](std::size_t p, Mask taken) -> bool {
    if (p == pairs.size()) {
      Mask common = ~Mask{0};
      for (Vertex v : chosen) common &= nb[v];
      common &= ~taken;
      for (Vertex v : chosen) common &= ~bit(v);
      return std::popcount(common) >= t;
    }
    Mask cand = nb[chosen[pairs[p].first]] & nb[chosen[pairs[p].second]] & ~taken;
    for (Vertex v : chosen) cand &= ~bit(v);
    while (cand) {
      Vertex w = std::countr_zero(cand);
      cand &= cand - 1;
      if (subdivide(p + 1, taken | bit(w))) return true;
    }
    return false;
  };
  std::function<bool(Vertex)> pick = [&](Vertex from) -> bool {
    if (static_cast<int>(chosen.size()) == s) return subdivide(0, 0);
    for (Vertex v = from; v < n; ++v) {
      if (g.degree(v) < clique_degree) continue;
      chosen.push_back(v);
      if (pick(v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

}  // namespace oddminor
