#include "minor_search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_map>

#include "oddminor/algorithms.hpp"
#include "oddminor/errors.hpp"

namespace oddminor::detail {

namespace {

using Mask = std::uint64_t;

constexpr int kUnused = -1;

inline Mask bit(int v) { return Mask{1} << v; }

template <typename Fn>
void for_bits(Mask m, Fn&& fn) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

// Parity union-find over pattern vertices: tracks f_u xor f_v constraints.
class ParityDsu {
 public:
  explicit ParityDsu(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<int, int> find(int v) {
    int p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  // false on contradiction
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

struct Constraint {
  int a;
  int b;
  int rel;
};

class Searcher {
 public:
  Searcher(const Graph& g, const Graph& h, const EdgeSet& negative, const PatternSearchOptions& options)
      : g_(g), h_(h), hn_(h.vertex_count()), options_(options) {
    const int n = g.vertex_count();
    nb_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nb_[v] = g.neighbor_mask(v);
    hadj_.assign(static_cast<std::size_t>(hn_), std::vector<char>(static_cast<std::size_t>(hn_), 0));
    mono_.assign(static_cast<std::size_t>(hn_), std::vector<char>(static_cast<std::size_t>(hn_), 0));
    for (const Edge& e : h.edges()) {
      hadj_[e.u][e.v] = hadj_[e.v][e.u] = 1;
      char m = negative.count(e) ? 1 : 0;
      mono_[e.u][e.v] = mono_[e.v][e.u] = m;
    }
    for (const Edge& e : h.edges()) hedges_.push_back(e);
  }

  std::optional<PatternHit> run() {
    if (hn_ == 0) return PatternHit{};
    const int n = g_.vertex_count();
    if (n < hn_) return std::nullopt;
    auto comps = connected_components(g_);
    bool h_connected = connected_components(h_).size() == 1;
    if (h_connected) {
      bool unbalanced = options_.parity_prune && !is_balanced_signature(h_, negative_set());
      for (const VertexSet& comp : comps) {
        if (static_cast<int>(comp.size()) < hn_) continue;
        if (unbalanced && is_bipartite(g_.induced(comp))) continue;
        setup({comp});
        if (descend(0)) return hit_;
      }
      return std::nullopt;
    }
    setup(comps);
    allow_unused_ = true;
    if (descend(0)) return hit_;
    return std::nullopt;
  }

 private:
  EdgeSet negative_set() const {
    EdgeSet s;
    for (const Edge& e : hedges_) {
      if (mono_[e.u][e.v]) s.insert(e);
    }
    return s;
  }

  void setup(const std::vector<VertexSet>& comps) {
    order_.clear();
    comp_start_.clear();
    unassigned_ = 0;
    for (const VertexSet& comp : comps) {
      // BFS order keeps partial parts connected early
      std::size_t start = order_.size();
      Mask seen = bit(comp.front());
      std::deque<Vertex> queue{comp.front()};
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (Vertex w : g_.neighbors(v)) {
          if (!(seen & bit(w))) {
            seen |= bit(w);
            queue.push_back(w);
          }
        }
      }
      for (std::size_t i = start; i < order_.size(); ++i) {
        comp_start_.push_back(static_cast<int>(start));
      }
      unassigned_ |= seen;
    }
    parts_.assign(static_cast<std::size_t>(hn_), 0);
    label_.assign(order_.size(), kUnused);
    max_label_ = -1;
  }

  Mask neighborhood(Mask m) const {
    Mask out = 0;
    for_bits(m, [&](int v) { out |= nb_[v]; });
    return out & ~m;
  }

  Mask flood(Mask start, Mask allowed) const {
    Mask reach = start;
    Mask frontier = start;
    while (frontier) {
      Mask next = 0;
      for_bits(frontier, [&](int v) { next |= nb_[v]; });
      next &= allowed & ~reach;
      reach |= next;
      frontier = next;
    }
    return reach;
  }

  bool feasible() const {
    int empty = 0;
    std::vector<char> closed(static_cast<std::size_t>(hn_), 0);
    for (int l = 0; l < hn_; ++l) {
      Mask p = parts_[l];
      if (!p) {
        ++empty;
        continue;
      }
      Mask reach = flood(p & (~p + 1), p | unassigned_);
      if ((reach & p) != p) return false;
      closed[l] = (neighborhood(p) & unassigned_) == 0;
    }
    if (empty > std::popcount(unassigned_)) return false;
    for (const Edge& e : hedges_) {
      if (closed[e.u] && closed[e.v] && !(neighborhood(parts_[e.u]) & parts_[e.v])) return false;
      // a closed part cannot reach an empty H-neighbour
      if ((closed[e.u] && !parts_[e.v]) || (closed[e.v] && !parts_[e.u])) return false;
    }
    return true;
  }

  bool descend(std::size_t i) {
    if (i == order_.size()) return leaf();
    Vertex v = order_[i];
    const bool comp_first = static_cast<int>(i) == comp_start_[i];
    // inside a skipped component everything stays unused
    if (allow_unused_ && !comp_first && label_[comp_start_[i]] == kUnused) {
      unassigned_ &= ~bit(v);
      label_[i] = kUnused;
      bool ok = feasible() && descend(i + 1);
      unassigned_ |= bit(v);
      return ok;
    }
    int top = options_.symmetric_labels ? std::min(hn_ - 1, max_label_ + 1) : hn_ - 1;
    for (int l = 0; l <= top; ++l) {
      unassigned_ &= ~bit(v);
      parts_[l] |= bit(v);
      label_[i] = l;
      int saved_max = max_label_;
      max_label_ = std::max(max_label_, l);
      bool ok = feasible() && descend(i + 1);
      max_label_ = saved_max;
      parts_[l] &= ~bit(v);
      unassigned_ |= bit(v);
      label_[i] = kUnused;
      if (ok) return true;
    }
    if (allow_unused_ && comp_first) {
      unassigned_ &= ~bit(v);
      label_[i] = kUnused;
      bool ok = feasible() && descend(i + 1);
      unassigned_ |= bit(v);
      if (ok) return true;
    }
    return false;
  }

  // 2-colorings of part p (as the mask of color-2 vertices, least vertex
  // colored 1) whose bichromatic edges connect p
  const std::vector<Mask>& colorings_of(Mask p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    std::vector<int> vs;
    for_bits(p, [&](int v) { vs.push_back(v); });
    std::vector<Mask> out;
    const std::size_t k = vs.size();
    for (Mask x = 0; x < (Mask{1} << (k - 1)); ++x) {
      Mask two = 0;
      for (std::size_t j = 1; j < k; ++j) {
        if (x & (Mask{1} << (j - 1))) two |= bit(vs[j]);
      }
      Mask reach = bit(vs[0]);
      Mask frontier = reach;
      while (frontier) {
        Mask next = 0;
        for_bits(frontier, [&](int v) { next |= nb_[v] & ((two & bit(v)) ? ~two : two); });
        next &= p & ~reach;
        reach |= next;
        frontier = next;
      }
      if (reach == p) out.push_back(two);
    }
    return cache_.emplace(p, std::move(out)).first->second;
  }

  bool leaf() {
    for (int l = 0; l < hn_; ++l) {
      if (!parts_[l]) return false;
    }
    for (const Edge& e : hedges_) {
      if (!(neighborhood(parts_[e.u]) & parts_[e.v])) return false;
    }
    // boundary: vertices with a neighbour in an H-adjacent part
    std::vector<Mask> boundary(static_cast<std::size_t>(hn_), 0);
    for (const Edge& e : hedges_) {
      for_bits(parts_[e.u], [&](int a) {
        if (nb_[a] & parts_[e.v]) boundary[e.u] |= bit(a);
      });
      for_bits(parts_[e.v], [&](int b) {
        if (nb_[b] & parts_[e.u]) boundary[e.v] |= bit(b);
      });
    }
    choices_.assign(static_cast<std::size_t>(hn_), {});
    for (int l = 0; l < hn_; ++l) {
      std::set<Mask> seen;
      for (Mask c : colorings_of(parts_[l])) {
        if (seen.insert(c & boundary[l]).second) choices_[l].push_back(c);
      }
      if (choices_[l].empty()) return false;
    }
    chosen_.assign(static_cast<std::size_t>(hn_), 0);
    constraints_.clear();
    return pick(0);
  }

  // allowed values of f_a xor f_b for pattern edge ab under chosen colorings
  int allowed_relations(int a, int b) const {
    int mask = 0;
    for_bits(parts_[a], [&](int x) {
      for_bits(nb_[x] & parts_[b], [&](int y) {
        int p = ((chosen_[a] >> x) & 1) ^ ((chosen_[b] >> y) & 1);
        mask |= 1 << (p ^ (mono_[a][b] ? 0 : 1));
      });
    });
    return mask;
  }

  bool consistent() const {
    ParityDsu dsu(hn_);
    for (const Constraint& c : constraints_) {
      if (!dsu.unite(c.a, c.b, c.rel)) return false;
    }
    return true;
  }

  bool pick(int l) {
    if (l == hn_) return finish();
    for (Mask c : choices_[l]) {
      chosen_[l] = c;
      std::size_t mark = constraints_.size();
      bool ok = true;
      for (int j = 0; j < l && ok; ++j) {
        if (!hadj_[j][l]) continue;
        int rel = allowed_relations(j, l);
        if (rel == 0) ok = false;
        else if (rel != 3) constraints_.push_back({j, l, rel == 1 ? 0 : 1});
      }
      if (ok && consistent() && pick(l + 1)) return true;
      constraints_.resize(mark);
    }
    return false;
  }

  bool finish() {
    ParityDsu dsu(hn_);
    for (const Constraint& c : constraints_) dsu.unite(c.a, c.b, c.rel);
    std::vector<int> flip(static_cast<std::size_t>(hn_));
    for (int l = 0; l < hn_; ++l) flip[l] = dsu.find(l).second;

    auto color = [&](int l, int v) { return 1 + ((((chosen_[l] >> v) & 1) ^ flip[l]) & 1); };

    PatternHit hit;
    std::vector<Mask> terminals(static_cast<std::size_t>(hn_), 0);
    for (const Edge& e : hedges_) {
      std::optional<Edge> best;
      Vertex best_a = -1;
      Vertex best_b = -1;
      for_bits(parts_[e.u], [&](int a) {
        for_bits(nb_[a] & parts_[e.v], [&](int b) {
          bool same = color(e.u, a) == color(e.v, b);
          if (same != static_cast<bool>(mono_[e.u][e.v])) return;
          Edge cand(a, b);
          if (!best || cand < *best) {
            best = cand;
            best_a = a;
            best_b = b;
          }
        });
      });
      if (!best) throw InternalError("pattern search: witness vanished after parity solve");
      hit.witness[e] = *best;
      terminals[e.u] |= bit(best_a);
      terminals[e.v] |= bit(best_b);
    }

    for (int l = 0; l < hn_; ++l) {
      Mask p = parts_[l];
      Vertex root = std::countr_zero(p);
      if (!terminals[l]) terminals[l] = bit(root);
      // BFS tree over bichromatic edges
      std::map<Vertex, Vertex> parent{{root, -1}};
      std::deque<Vertex> queue{root};
      std::vector<Edge> tree;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g_.neighbors(v)) {
          if (!(p & bit(w)) || parent.count(w) || color(l, v) == color(l, w)) continue;
          parent[w] = v;
          tree.emplace_back(v, w);
          queue.push_back(w);
        }
      }
      // drop leaves that carry no witness
      Mask keep = p;
      bool changed = true;
      while (changed) {
        changed = false;
        for_bits(keep & ~terminals[l], [&](int v) {
          int deg = 0;
          for (const Edge& e : tree) {
            if ((e.u == v || e.v == v) && (keep & bit(e.other(v)))) ++deg;
          }
          if (deg <= 1 && std::popcount(keep) > 1) {
            keep &= ~bit(v);
            changed = true;
          }
        });
      }
      Subgraph sub;
      TwoColoring col;
      for_bits(keep, [&](int v) {
        sub.vertices.push_back(v);
        col[v] = color(l, v);
      });
      for (const Edge& e : tree) {
        if ((keep & bit(e.u)) && (keep & bit(e.v))) sub.edges.push_back(e);
      }
      std::sort(sub.edges.begin(), sub.edges.end());
      hit.trees.push_back(std::move(sub));
      hit.colorings.push_back(std::move(col));
    }
    hit_ = std::move(hit);
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int hn_;
  PatternSearchOptions options_;
  std::vector<Mask> nb_;
  std::vector<std::vector<char>> hadj_;
  std::vector<std::vector<char>> mono_;
  std::vector<Edge> hedges_;

  std::vector<Vertex> order_;
  std::vector<int> comp_start_;
  std::vector<Mask> parts_;
  std::vector<int> label_;
  Mask unassigned_ = 0;
  int max_label_ = -1;
  bool allow_unused_ = false;

  std::unordered_map<Mask, std::vector<Mask>> cache_;
  std::vector<std::vector<Mask>> choices_;
  std::vector<Mask> chosen_;
  std::vector<Constraint> constraints_;
  PatternHit hit_;
};

}  // namespace

std::optional<PatternHit> search_pattern(const Graph& g, const Graph& h, const EdgeSet& negative,
                                         const PatternSearchOptions& options) {
  if (g.vertex_count() > 64) throw SizeLimitExceeded("pattern search", g.vertex_count(), 64);
  return Searcher(g, h, negative, options).run();
}

}  // namespace oddminor::detail
