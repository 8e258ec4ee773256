#include "oddminor/erdos_posa.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "oddminor/algorithms.hpp"
#include "oddminor/odd_minor.hpp"

namespace oddminor {

namespace {

constexpr int kEven = 1;
constexpr int kOdd = 2;

// Parities of paths from a source to every vertex, read off the block-cut
// tree: a bipartite block fixes the parity between two of its vertices, a
// non-bipartite 2-connected block offers both.
class ParityOracle {
 public:
  ParityOracle(const Graph& g, const std::vector<char>& removed) : n_(g.vertex_count()) {
    for (Vertex v = 0; v < n_; ++v) {
      if (!removed[v]) keep_.push_back(v);
    }
    local_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep_.size(); ++i) local_[keep_[i]] = static_cast<int>(i);
    h_ = g.induced(keep_);
    const int m = h_.vertex_count();
    blocks_ = blocks(h_);
    of_vertex_.assign(static_cast<std::size_t>(m), {});
    side_.assign(blocks_.size(), std::vector<int>(static_cast<std::size_t>(m), -1));
    bipartite_.assign(blocks_.size(), 1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const VertexSet& bs = blocks_[b];
      for (Vertex v : bs) of_vertex_[v].push_back(static_cast<int>(b));
      auto& side = side_[b];
      side[bs.front()] = 0;
      std::deque<Vertex> q{bs.front()};
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : h_.neighbors(x)) {
          if (!set_contains(bs, y)) continue;
          if (side[y] == -1) {
            side[y] = side[x] ^ 1;
            q.push_back(y);
          } else if (side[y] == side[x]) {
            bipartite_[b] = 0;
          }
        }
      }
    }
  }

  // Parity masks (kEven | kOdd) of source-v paths, indexed by original id.
  std::vector<int> from(Vertex source) const {
    const int m = h_.vertex_count();
    std::vector<int> mask(static_cast<std::size_t>(m), 0);
    std::vector<char> block_seen(blocks_.size(), 0);
    int s = local_[source];
    mask[s] = kEven;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (int b : of_vertex_[a]) {
        if (block_seen[b]) continue;
        block_seen[b] = 1;
        for (Vertex y : blocks_[b]) {
          if (y == a) continue;
          if (bipartite_[b]) {
            bool flip = side_[b][a] != side_[b][y];
            mask[y] = flip ? swap_bits(mask[a]) : mask[a];
          } else {
            mask[y] = kEven | kOdd;
          }
          stack.push_back(y);
        }
      }
    }
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < m; ++i) out[keep_[i]] = mask[i];
    return out;
  }

 private:
  static int swap_bits(int m) { return ((m & kEven) ? kOdd : 0) | ((m & kOdd) ? kEven : 0); }

  int n_;
  std::vector<Vertex> keep_;
  std::vector<int> local_;
  Graph h_;
  std::vector<VertexSet> blocks_;
  std::vector<std::vector<int>> of_vertex_;
  std::vector<std::vector<int>> side_;
  std::vector<char> bipartite_;
};

bool odd_s_path_exists(const Graph& g, const std::vector<char>& in_s, const std::vector<char>& removed) {
  std::vector<Vertex> alive_s;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_s[v] && !removed[v]) alive_s.push_back(v);
  }
  if (alive_s.size() < 2) return false;
  ParityOracle oracle(g, removed);
  for (std::size_t i = 0; i + 1 < alive_s.size(); ++i) {
    auto mask = oracle.from(alive_s[i]);
    for (std::size_t j = i + 1; j < alive_s.size(); ++j) {
      if (mask[alive_s[j]] & kOdd) return true;
    }
  }
  return false;
}

std::vector<char> flags(int n, const VertexSet& s) {
  std::vector<char> out(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range");
    out[v] = 1;
  }
  return out;
}

// G with each edge at a vertex of `anchor` subdivided once per such end.
// Vertices of the input keep their ids; new ones follow.
struct Subdivided {
  Graph graph;
  int real = 0;
};

Subdivided subdivide_at(const Graph& g, const std::vector<char>& anchor) {
  const int n = g.vertex_count();
  int extra = 0;
  for (const Edge& e : g.edges()) extra += anchor[e.u] + anchor[e.v];
  Subdivided out{Graph(n + extra), n};
  int next = n;
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    for (int i = 0; i < anchor[e.u] + anchor[e.v]; ++i) {
      out.graph.add_edge(prev, next);
      prev = next++;
    }
    out.graph.add_edge(prev, e.v);
  }
  return out;
}

struct ParityFrame {
  Subdivided sub;
  std::vector<char> in_c;
};

ParityFrame parity_frame(const Graph& g, const SubdivisionEmbedding& emb) {
  Subgraph h = emb.union_subgraph();
  auto beta = subgraph_two_coloring(h);
  if (!beta) throw InputError("subdivision union is not connected and bipartite");
  std::vector<char> in_c = flags(g.vertex_count(), emb.branch_set());
  std::vector<char> anchor(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : emb.branch_set()) anchor[v] = beta->at(v) == 1;
  ParityFrame f{subdivide_at(g, anchor), {}};
  f.in_c = in_c;
  f.in_c.resize(static_cast<std::size_t>(f.sub.graph.vertex_count()), 0);
  return f;
}

// Exhaustive dichotomy on a graph whose first `real` vertices are the only
// cover candidates.
class Dichotomy {
 public:
  Dichotomy(const Graph& g, std::vector<char> in_s, int real, int ell)
      : g_(g), in_s_(std::move(in_s)), real_(real), ell_(ell) {}

  PackingCoverResult run() {
    PackingCoverResult r;
    r.ell = ell_;
    for (int k = 0; k <= 2 * ell_ - 2; ++k) {
      if (k == ell_) {
        // below ell a cover rules out a packing; from here on a packing wins
        if (auto paths = pack()) {
          r.kind = OutcomeKind::Packing;
          r.paths = std::move(*paths);
          return r;
        }
      }
      if (auto x = cover_of_size(k)) {
        r.kind = OutcomeKind::Cover;
        r.cover = std::move(*x);
        return r;
      }
    }
    if (ell_ == 1) {
      // 2*ell - 2 = 0 and the empty set failed: one odd path must exist
      if (auto paths = pack()) {
        r.kind = OutcomeKind::Packing;
        r.paths = std::move(*paths);
        return r;
      }
    }
    throw InternalError("packing/cover dichotomy certified neither outcome");
  }

 private:
  std::optional<VertexSet> cover_of_size(int k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > real_) return std::nullopt;
    while (true) {
      std::vector<char> removed(static_cast<std::size_t>(g_.vertex_count()), 0);
      for (int i : idx) removed[i] = 1;
      if (!odd_s_path_exists(g_, in_s_, removed)) return VertexSet(idx.begin(), idx.end());
      int i = k - 1;
      while (i >= 0 && idx[i] == real_ - k + i) --i;
      if (i < 0) return std::nullopt;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::optional<std::vector<Path>> pack() {
    removed_.assign(static_cast<std::size_t>(g_.vertex_count()), 0);
    failed_.clear();
    chosen_.clear();
    if (pack_rec(ell_)) return chosen_;
    return std::nullopt;
  }

  std::string key(int need) const {
    std::string k(removed_.begin(), removed_.end());
    k.push_back(static_cast<char>(need));
    return k;
  }

  // Every packing can be trimmed to paths avoiding S internally, so the least
  // free S vertex is either an end of some path or unused.
  bool pack_rec(int need) {
    if (need == 0) return true;
    std::string k = key(need);
    if (failed_.count(k)) return false;
    int free_s = 0;
    Vertex s0 = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (in_s_[v] && !removed_[v]) {
        if (s0 == -1) s0 = v;
        ++free_s;
      }
    }
    if (free_s >= 2 * need && odd_s_path_exists(g_, in_s_, removed_)) {
      if (try_paths_from(s0, need)) return true;
      removed_[s0] = 1;
      bool ok = pack_rec(need);
      removed_[s0] = 0;
      if (ok) return true;
    }
    failed_.insert(std::move(k));
    return false;
  }

  bool try_paths_from(Vertex s0, int need) {
    const int n = g_.vertex_count();
    // distance to a free S target through free non-S vertices
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<Vertex> q;
    for (Vertex v = 0; v < n; ++v) {
      if (in_s_[v] && !removed_[v] && v != s0) {
        dist[v] = 0;
        q.push_back(v);
      }
    }
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      if (dist[x] > 0 && in_s_[x]) continue;
      for (Vertex y : g_.neighbors(x)) {
        if (removed_[y] || dist[y] != -1 || y == s0 || in_s_[y]) continue;
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
    int best = n;
    for (Vertex y : g_.neighbors(s0)) {
      if (!removed_[y] && dist[y] != -1) best = std::min(best, dist[y] + 1);
    }
    if (best == n) return false;
    int free_count = 0;
    for (Vertex v = 0; v < n; ++v) free_count += !removed_[v];
    removed_[s0] = 1;
    std::vector<Vertex> trail{s0};
    bool ok = false;
    for (int len = best + (best % 2 == 0 ? 1 : 0); len < free_count && !ok; len += 2) {
      ok = walk(trail, len, dist, need);
    }
    removed_[s0] = 0;
    return ok;
  }

  bool walk(std::vector<Vertex>& trail, int remaining, const std::vector<int>& dist, int need) {
    Vertex x = trail.back();
    for (Vertex y : g_.neighbors(x)) {
      if (removed_[y] || dist[y] == -1 || dist[y] > remaining - 1) continue;
      if (in_s_[y]) {
        if (remaining != 1) continue;
        trail.push_back(y);
        removed_[y] = 1;
        chosen_.emplace_back(trail);
        if (pack_rec(need - 1)) return true;
        chosen_.pop_back();
        removed_[y] = 0;
        trail.pop_back();
        continue;
      }
      if (remaining == 1) continue;
      trail.push_back(y);
      removed_[y] = 1;
      bool ok = walk(trail, remaining - 1, dist, need);
      if (ok) return true;
      removed_[y] = 0;
      trail.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> in_s_;
  int real_;
  int ell_;
  std::vector<char> removed_;
  std::unordered_set<std::string> failed_;
  std::vector<Path> chosen_;
};

void check_ell(int ell) {
  if (ell < 1) throw InputError("ell must be at least 1");
}

Verdict verify_paths(const Graph& g, const PackingCoverResult& r, const std::vector<char>& ends_ok,
                     auto&& qualifies) {
  if (static_cast<int>(r.paths.size()) != r.ell || !r.cover.empty()) return Verdict::fail("bad-shape");
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Path& p : r.paths) {
    if (p.vertices.size() < 2 || !is_path_in(g, p)) return Verdict::fail("bad-path");
    if (p.front() == p.back() || !ends_ok[p.front()] || !ends_ok[p.back()]) return Verdict::fail("bad-path");
    for (Vertex v : p.vertices) {
      if (used[v]) return Verdict::fail("not-disjoint");
      used[v] = 1;
    }
    if (!qualifies(p)) return Verdict::fail("not-qualifying");
  }
  return Verdict::pass();
}

Verdict verify_cover_shape(const Graph& g, const PackingCoverResult& r) {
  if (!r.paths.empty()) return Verdict::fail("bad-shape");
  if (make_vertex_set(r.cover) != r.cover) return Verdict::fail("bad-shape");
  for (Vertex v : r.cover) {
    if (!g.contains(v)) return Verdict::fail("bad-shape");
  }
  if (static_cast<int>(r.cover.size()) > 2 * r.ell - 2) return Verdict::fail("cover-too-large");
  return Verdict::pass();
}

}  // namespace

bool has_odd_s_path(const Graph& g, const VertexSet& s, const VertexSet& removed) {
  return odd_s_path_exists(g, flags(g.vertex_count(), s), flags(g.vertex_count(), removed));
}

bool has_parity_breaking_path(const Graph& g, const SubdivisionEmbedding& emb, const VertexSet& removed) {
  ParityFrame f = parity_frame(g, emb);
  std::vector<char> rem = flags(f.sub.graph.vertex_count(), removed);
  return odd_s_path_exists(f.sub.graph, f.in_c, rem);
}

PackingCoverResult odd_s_paths_dichotomy(const Graph& g, const VertexSet& s, int ell,
                                         const DichotomyOptions& options) {
  check_ell(ell);
  if (g.vertex_count() > options.limit) {
    throw SizeLimitExceeded("odd S-path dichotomy", g.vertex_count(), options.limit);
  }
  Dichotomy d(g, flags(g.vertex_count(), s), g.vertex_count(), ell);
  PackingCoverResult r = d.run();
  if (Verdict v = verify_odd_s_result(g, s, r); !v) {
    throw InternalError("odd S-path dichotomy produced an invalid result: " + v.reason);
  }
  return r;
}

PackingCoverResult parity_breaking_dichotomy(const Graph& g, const SubdivisionEmbedding& emb, int ell,
                                             const DichotomyOptions& options) {
  check_ell(ell);
  if (g.vertex_count() > options.limit) {
    throw SizeLimitExceeded("parity-breaking dichotomy", g.vertex_count(), options.limit);
  }
  if (Verdict v = verify_subdivision(g, emb, true); !v) {
    throw InputError("parity-breaking dichotomy needs a bipartite subdivision (" + v.reason + ")");
  }
  ParityFrame f = parity_frame(g, emb);
  // a subdividing vertex can always be traded for a real neighbour on the
  // same paths, so covers are searched among real vertices only
  Dichotomy d(f.sub.graph, f.in_c, f.sub.real, ell);
  PackingCoverResult r = d.run();
  for (Path& p : r.paths) {
    std::vector<Vertex> real;
    for (Vertex v : p.vertices) {
      if (v < f.sub.real) real.push_back(v);
    }
    p = Path(std::move(real));
  }
  if (Verdict v = verify_parity_breaking_result(g, emb, r); !v) {
    throw InternalError("parity-breaking dichotomy produced an invalid result: " + v.reason);
  }
  return r;
}

Verdict verify_odd_s_result(const Graph& g, const VertexSet& s, const PackingCoverResult& r) {
  if (r.ell < 1) return Verdict::fail("bad-shape");
  for (Vertex v : s) {
    if (!g.contains(v)) return Verdict::fail("bad-shape");
  }
  std::vector<char> in_s = flags(g.vertex_count(), s);
  if (r.kind == OutcomeKind::Packing) {
    return verify_paths(g, r, in_s, [](const Path& p) { return p.parity() == 1; });
  }
  if (Verdict v = verify_cover_shape(g, r); !v) return v;
  if (odd_s_path_exists(g, in_s, flags(g.vertex_count(), r.cover))) return Verdict::fail("cover-misses");
  return Verdict::pass();
}

Verdict verify_parity_breaking_result(const Graph& g, const SubdivisionEmbedding& emb,
                                      const PackingCoverResult& r) {
  if (r.ell < 1) return Verdict::fail("bad-shape");
  if (Verdict v = verify_subdivision(g, emb, true); !v) return Verdict::fail("bad-shape");
  if (r.kind == OutcomeKind::Packing) {
    Subgraph h = emb.union_subgraph();
    auto beta = subgraph_two_coloring(h);
    std::vector<char> in_c = flags(g.vertex_count(), emb.branch_set());
    return verify_paths(g, r, in_c, [&](const Path& p) { return is_parity_breaking(p, *beta); });
  }
  if (Verdict v = verify_cover_shape(g, r); !v) return v;
  if (has_parity_breaking_path(g, emb, r.cover)) return Verdict::fail("cover-misses");
  return Verdict::pass();
}

}  // namespace oddminor
