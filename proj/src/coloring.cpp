#include "oddminor/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "oddminor/algorithms.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/structure.hpp"
#include "oddminor/subdivision.hpp"

namespace oddminor {

int ColoringAssignment::used() const {
  std::set<int> seen(colors.begin(), colors.end());
  return static_cast<int>(seen.size());
}

FamilyClass FamilyClass::bounded_degree(int d) {
  if (d < 0) throw InputError("degree bound must be nonnegative");
  return {Kind::BoundedDegree, d, {}};
}

FamilyClass FamilyClass::bounded_component(int m) {
  if (m < 1) throw InputError("component bound must be positive");
  return {Kind::BoundedComponent, m, {}};
}

FamilyClass FamilyClass::max_of(std::vector<FamilyClass> members) {
  if (members.empty()) throw InputError("MaxOf needs at least one member");
  return {Kind::MaxOf, 0, std::move(members)};
}

bool FamilyClass::accepts(const Graph& g) const {
  switch (kind) {
    case Kind::BoundedDegree:
      return g.max_degree() <= bound;
    case Kind::BoundedComponent:
      for (const VertexSet& c : connected_components(g)) {
        if (static_cast<int>(c.size()) > bound) return false;
      }
      return true;
    case Kind::MaxOf:
      for (const VertexSet& c : connected_components(g)) {
        Graph part = g.induced(c);
        if (std::none_of(members.begin(), members.end(), [&](const FamilyClass& m) { return m.accepts(part); })) {
          return false;
        }
      }
      return true;
  }
  return false;
}

int FamilyClass::small_graph_capacity() const {
  switch (kind) {
    case Kind::BoundedDegree:
      return bound + 1;
    case Kind::BoundedComponent:
      return bound;
    case Kind::MaxOf: {
      int best = 0;
      for (const FamilyClass& m : members) best = std::max(best, m.small_graph_capacity());
      return best;
    }
  }
  return 0;
}

std::string FamilyClass::describe() const {
  switch (kind) {
    case Kind::BoundedDegree:
      return "BoundedDegree(" + std::to_string(bound) + ")";
    case Kind::BoundedComponent:
      return "BoundedComponent(" + std::to_string(bound) + ")";
    case Kind::MaxOf: {
      std::string s = "MaxOf(";
      for (std::size_t i = 0; i < members.size(); ++i) s += (i ? ", " : "") + members[i].describe();
      return s + ")";
    }
  }
  return {};
}

int coloring_defect(const Graph& g, const std::vector<int>& colors) {
  int worst = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int same = 0;
    for (Vertex w : g.neighbors(v)) same += colors[w] == colors[v];
    worst = std::max(worst, same);
  }
  return worst;
}

int coloring_cluster(const Graph& g, const std::vector<int>& colors) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int worst = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    int size = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y] && colors[y] == colors[s]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    worst = std::max(worst, size);
  }
  return worst;
}

Verdict verify_coloring(const Graph& g, const ColoringAssignment& c, const FamilyClass& family) {
  const int n = g.vertex_count();
  if (static_cast<int>(c.colors.size()) != n) return Verdict::fail("partial-coloring");
  for (int col : c.colors) {
    if (col == 0) return Verdict::fail("partial-coloring");
    if (col < 0 || col > c.palette) return Verdict::fail("color-range");
  }
  std::map<int, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) classes[c.colors[v]].push_back(v);
  for (const auto& [col, vs] : classes) {
    if (!family.accepts(g.induced(vs))) return Verdict::fail("family-violation");
  }
  return Verdict::pass();
}

namespace {

std::vector<Vertex> smallest_last_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> removal;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = 1;
    removal.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

std::vector<int> defective_attempt(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  std::vector<int> count(static_cast<std::size_t>(k) + 1);
  auto best_color = [&](Vertex v) {
    std::fill(count.begin(), count.end(), 0);
    for (Vertex w : g.neighbors(v)) {
      if (col[w]) ++count[col[w]];
    }
    int best = 1;
    for (int c = 2; c <= k; ++c) {
      if (count[c] < count[best]) best = c;
    }
    return best;
  };
  for (Vertex v : smallest_last_order(g)) col[v] = best_color(v);
  // each move removes monochromatic edges, so this stops
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      int mine = col[v];
      col[v] = 0;
      int best = best_color(v);
      int here = count[mine];
      col[v] = count[best] < here ? best : mine;
      changed |= col[v] != mine;
    }
  }
  return col;
}

// Colors with at most k colors and monochromatic components of at most c
// vertices, or nullopt (also when the node budget runs out).
std::optional<std::vector<int>> clustered_search(const Graph& g, int k, int c, long long budget) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      order.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          q.push_back(y);
        }
      }
    }
  }
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  auto cluster_ok = [&](Vertex v) {
    std::fill(mark.begin(), mark.end(), 0);
    mark[v] = 1;
    int size = 0;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      if (++size > c) return false;
      for (Vertex y : g.neighbors(x)) {
        if (!mark[y] && col[y] == col[v]) {
          mark[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return true;
  };
  long long nodes = 0;
  std::function<int(std::size_t, int)> rec = [&](std::size_t i, int opened) -> int {
    if (i == order.size()) return 1;
    if (++nodes > budget) return -1;
    Vertex v = order[i];
    for (int colour = 1; colour <= std::min(k, opened + 1); ++colour) {
      col[v] = colour;
      if (cluster_ok(v)) {
        int r = rec(i + 1, std::max(opened, colour));
        if (r != 0) return r;
      }
    }
    col[v] = 0;
    return 0;
  };
  if (rec(0, 0) == 1) return col;
  return std::nullopt;
}

std::vector<int> clustered_attempt(const Graph& g, int budget) {
  const int n = g.vertex_count();
  std::vector<int> out(static_cast<std::size_t>(n), 1);
  for (const VertexSet& comp : connected_components(g)) {
    Graph sub = g.induced(comp);
    // BFS layers modulo the budget as a starting point
    std::vector<int> layer(comp.size(), -1);
    layer[0] = 0;
    std::deque<Vertex> q{0};
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : sub.neighbors(x)) {
        if (layer[y] == -1) {
          layer[y] = layer[x] + 1;
          q.push_back(y);
        }
      }
    }
    std::vector<int> col(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) col[i] = layer[i] % budget + 1;
    int best = coloring_cluster(sub, col);
    for (int c = 1; c < best; ++c) {
      if (auto found = clustered_search(sub, budget, c, 200000)) {
        col = std::move(*found);
        break;
      }
    }
    for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = col[i];
  }
  return out;
}

}  // namespace

BaseColoring base_defective_coloring(const Graph& g, int s, [[maybe_unused]] int t, int max_defect) {
  if (s < 1) throw InputError("defective coloring needs at least one color");
  BaseColoring out;
  for (int k = s; k <= (max_defect >= 0 ? 2 * s : s); ++k) {
    std::vector<int> col = defective_attempt(g, k);
    out.coloring = {col, k};
    out.achieved = coloring_defect(g, col);
    out.flagged = k > s;
    if (max_defect < 0 || out.achieved <= max_defect) break;
  }
  return out;
}

BaseColoring base_clustered_coloring(const Graph& g, int delta, int budget, int max_cluster) {
  if (budget < 1) throw InputError("clustered coloring needs at least one color");
  if (g.max_degree() > delta) {
    throw InputError("maximum degree " + std::to_string(g.max_degree()) + " exceeds " + std::to_string(delta));
  }
  BaseColoring out;
  for (int k = budget; k <= (max_cluster >= 0 ? 2 * budget : budget); ++k) {
    std::vector<int> col = clustered_attempt(g, k);
    out.coloring = {col, k};
    out.achieved = coloring_cluster(g, col);
    out.flagged = k > budget;
    if (max_cluster < 0 || out.achieved <= max_cluster) break;
  }
  return out;
}

BaseColorer defective_base(int t) {
  return [t](const Graph& g, int d) { return base_defective_coloring(g, d, t); };
}

BaseColorer clustered_base(int t) {
  return [t](const Graph& g, int d) {
    const int k = d / 3;
    if (k < 1) throw InputError("clustered base coloring needs d >= 3");
    BaseColoring def = base_defective_coloring(g, k, t);
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int c = 1; c <= k; ++c) {
      std::vector<Vertex> cls;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (def.coloring.colors[v] == c) cls.push_back(v);
      }
      if (cls.empty()) continue;
      Graph sub = g.induced(cls);
      BaseColoring part = base_clustered_coloring(sub, sub.max_degree(), 3);
      for (std::size_t i = 0; i < cls.size(); ++i) col[cls[i]] = 3 * (c - 1) + part.coloring.colors[i];
    }
    BaseColoring out;
    out.coloring = {col, d};
    out.achieved = coloring_cluster(g, col);
    return out;
  };
}

namespace {

struct OddMinorAbort {
  OddMinorModel model;
};

OddMinorModel relabel(const OddMinorModel& m, const std::vector<Vertex>& orig) {
  OddMinorModel out;
  out.form = m.form;
  for (const Subgraph& t : m.trees) {
    Subgraph r;
    for (Vertex v : t.vertices) r.vertices.push_back(orig[v]);
    for (const Edge& e : t.edges) r.edges.emplace_back(orig[e.u], orig[e.v]);
    std::sort(r.vertices.begin(), r.vertices.end());
    std::sort(r.edges.begin(), r.edges.end());
    out.trees.push_back(std::move(r));
  }
  for (auto [v, c] : m.alpha) out.alpha[orig[v]] = c;
  for (const Connector& c : m.connectors) {
    std::vector<Vertex> vs;
    for (Vertex v : c.path.vertices) vs.push_back(orig[v]);
    out.connectors.push_back({c.h_edge, Path(std::move(vs))});
  }
  return out;
}

std::string set_text(const std::vector<Vertex>& vs, const std::vector<Vertex>& orig) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << orig[vs[i]];
  os << '}';
  return os.str();
}

class Extender {
 public:
  Extender(int t, int d, const BaseColorer& base, FamilyClass family, const ExtendOptions& options)
      : t_(t), d_(d), palette_(d + 4 * t - 7), base_(base), family_(std::move(family)), options_(options) {}

  std::vector<int> run(const Graph& g, const VertexSet& z, const std::map<Vertex, int>& f) {
    std::vector<Vertex> orig(static_cast<std::size_t>(g.vertex_count()));
    std::iota(orig.begin(), orig.end(), 0);
    std::vector<int> fv(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [v, c] : f) fv[v] = c;
    long long measure = g.vertex_count() + g.edge_count() + 1;
    return solve(g, orig, z, fv, measure, 0);
  }

  const FamilyClass& family() const { return family_; }
  std::vector<std::string>& trace() { return trace_; }

 private:
  void note(int depth, const std::string& line) {
    if (options_.trace) trace_.push_back(std::string(static_cast<std::size_t>(2 * depth), ' ') + line);
  }

  // (a), (b), palette and family at every exit
  void check(const Graph& g, const VertexSet& z, const std::vector<int>& f, const std::vector<int>& col) const {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (col[v] < 1 || col[v] > palette_) throw InternalError("color outside the palette");
    }
    for (Vertex v : z) {
      if (col[v] != f[v]) throw InternalError("precoloring not kept");
      for (Vertex w : g.neighbors(v)) {
        if (f[w] == 0 && col[w] == col[v]) throw InternalError("Z vertex shares a color with a neighbour outside Z");
      }
    }
    if (Verdict v = verify_coloring(g, {col, palette_}, family_); !v) {
      throw InternalError("color class outside the family at a recursion exit");
    }
  }

  std::vector<int> solve(const Graph& g, const std::vector<Vertex>& orig, const VertexSet& z,
                         const std::vector<int>& f, long long parent_measure, int depth) {
    const int n = g.vertex_count();
    const long long measure = n + g.edge_count();
    if (measure >= parent_measure) throw InternalError("recursion did not shrink the instance");

    // (1) make Z stable
    std::vector<Edge> inside;
    for (const Edge& e : g.edges()) {
      if (f[e.u] && f[e.v]) inside.push_back(e);
    }
    if (!inside.empty()) {
      note(depth, "case 1: drop " + std::to_string(inside.size()) + " edges inside Z");
      auto col = solve(g.without_edges(inside), orig, z, f, measure, depth + 1);
      check(g, z, f, col);
      return col;
    }

    // (2) split along a small separation
    if (auto sep = find_small_separation(g, z, 2 * t_ - 3)) {
      VertexSet a = sep->a;
      VertexSet b = sep->b;
      auto z_only_in = [&](const VertexSet& x, const VertexSet& y) {
        return set_intersection(set_difference(x, y), z).size();
      };
      if (z_only_in(b, a) > z.size() / 2) std::swap(a, b);
      VertexSet ab = set_intersection(a, b);
      note(depth, "case 2: separation on " + set_text(ab, orig));

      VertexSet keep1 = set_union(a, z);
      auto col1 = solve_induced(g, orig, keep1, z, f, measure, depth);
      std::vector<int> g1(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < keep1.size(); ++i) g1[keep1[i]] = col1[i];

      VertexSet z2 = set_union(ab, set_intersection(b, z));
      std::vector<int> f2(static_cast<std::size_t>(n), 0);
      for (Vertex v : z2) f2[v] = g1[v];
      auto col2 = solve_induced(g, orig, b, z2, f2, measure, depth);

      std::vector<int> col = g1;
      for (std::size_t i = 0; i < b.size(); ++i) {
        Vertex v = b[i];
        if (set_contains(z2, v) && g1[v] != col2[i]) throw InternalError("colorings disagree on the separator");
        col[v] = col2[i];
      }
      check(g, z, f, col);
      return col;
    }

    // small graphs: distinct colors outside Z
    if (n <= 4 * t_ - 7) {
      std::vector<int> col = f;
      std::vector<char> taken(static_cast<std::size_t>(palette_) + 1, 0);
      for (Vertex v = 0; v < n; ++v) {
        if (f[v]) continue;
        std::vector<char> banned = taken;
        for (Vertex w : g.neighbors(v)) {
          if (f[w]) banned[f[w]] = 1;
        }
        int c = 1;
        while (banned[c]) ++c;
        col[v] = c;
        taken[c] = 1;
      }
      note(depth, "base: " + std::to_string(n) + " vertices, distinct colors outside Z");
      check(g, z, f, col);
      return col;
    }

    // (3) no bipartite subdivision outside Z: base colorer plus a palette shift
    std::vector<Vertex> rest = complement(z, n);
    Graph gz = g.induced(rest);
    auto emb = find_bipartite_join_subdivision(gz, 2 * t_ - 2, t_, SubdivisionOptions{options_.limit});
    if (!emb) return base_case(g, orig, z, f, rest, gz, depth);

    // decomposition around a bipartite block
    SubdivisionEmbedding local = *emb;
    for (Vertex& v : local.branch) v = rest[v];
    for (Path& p : local.linking) {
      for (Vertex& v : p.vertices) v = rest[v];
    }
    auto st = structure_theorem(g, t_, local, StructureOptions{options_.limit});
    if (auto* model = std::get_if<OddMinorModel>(&st)) {
      note(depth, "odd K_t model found");
      throw OddMinorAbort{relabel(*model, orig)};
    }
    const Decomposition& dec = std::get<Decomposition>(st);
    note(depth, "decomposition: X = " + set_text(dec.apex, orig) + ", |U| = " + std::to_string(dec.block.size()));
    return decomposition_case(g, orig, z, f, dec, depth);
  }

  std::vector<int> solve_induced(const Graph& g, const std::vector<Vertex>& orig, const VertexSet& keep,
                                 const VertexSet& z, const std::vector<int>& f, long long measure, int depth) {
    std::vector<Vertex> orig2;
    std::vector<int> f2;
    VertexSet z2;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      orig2.push_back(orig[keep[i]]);
      f2.push_back(f[keep[i]]);
      if (set_contains(z, keep[i])) z2.push_back(static_cast<Vertex>(i));
    }
    return solve(g.induced(keep), orig2, z2, f2, measure, depth + 1);
  }

  std::vector<int> base_case(const Graph& g, const std::vector<Vertex>& orig, const VertexSet& z,
                             const std::vector<int>& f, const std::vector<Vertex>& rest, const Graph& gz, int depth) {
    BaseColoring b = base_(gz, d_);
    for (int c : b.coloring.colors) {
      if (c < 1 || c > d_) throw InternalError("base colorer used more than d colors");
    }
    if (!verify_coloring(gz, b.coloring, family_)) {
      if (!options_.adaptive) {
        throw HypothesisUnmet("base coloring (achieved " + std::to_string(b.achieved) + ") lies outside " +
                              family_.describe());
      }
      family_.bound = std::max(family_.bound, b.achieved);
      if (!verify_coloring(gz, b.coloring, family_)) throw InternalError("adapted family still rejects the base coloring");
    }
    std::vector<char> in_f(static_cast<std::size_t>(palette_) + 1, 0);
    for (Vertex v : z) in_f[f[v]] = 1;
    std::vector<int> shift{0};
    for (int c = 1; c <= palette_ && static_cast<int>(shift.size()) <= d_; ++c) {
      if (!in_f[c]) shift.push_back(c);
    }
    std::vector<int> col = f;
    for (std::size_t i = 0; i < rest.size(); ++i) col[rest[i]] = shift[b.coloring.colors[i]];
    std::string map_text;
    for (int c = 1; c <= d_; ++c) map_text += (c > 1 ? " " : "") + std::to_string(c) + "->" + std::to_string(shift[c]);
    note(depth, "case 3: base colorer on " + std::to_string(rest.size()) + " vertices (achieved " +
                    std::to_string(b.achieved) + "), colors " + map_text);
    (void)orig;
    check(g, z, f, col);
    return col;
  }

  std::vector<int> decomposition_case(const Graph& g, const std::vector<Vertex>& orig, const VertexSet& z,
                                      const std::vector<int>& f, const Decomposition& dec, int depth) {
    const int n = g.vertex_count();
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v : dec.apex) removed[v] = 1;
    for (Vertex v : dec.block) removed[v] = 1;
    for (const VertexSet& comp : components_without(g, removed)) {
      for (Vertex v : comp) {
        if (!f[v]) throw InternalError("component outside the block is not inside Z");
      }
    }
    if (4 * t_ - 4 > palette_) {
      // fewer than three base colors leaves no room for c1..c3, so look for
      // the minor directly
      auto model = find_odd_clique_minor(g, t_, OddMinorOptions{options_.limit});
      if (model) throw OddMinorAbort{relabel(*model, orig)};
      throw HypothesisUnmet("decomposition step needs d >= 3");
    }
    std::vector<char> in_f(static_cast<std::size_t>(palette_) + 1, 0);
    for (Vertex v : z) in_f[f[v]] = 1;
    std::vector<int> fresh;
    for (int c = 1; c <= 4 * t_ - 4; ++c) {
      if (!in_f[c]) fresh.push_back(c);
    }
    if (fresh.size() < 3) throw InternalError("fewer than three fresh colors below 4t - 4");

    auto sides = bipartition(g.induced(dec.block)).sides;
    if (!sides) throw InternalError("decomposition block is not bipartite");
    std::vector<int> col = f;
    for (Vertex v : dec.apex) {
      if (!f[v]) col[v] = fresh[0];
    }
    for (std::size_t i = 0; i < dec.block.size(); ++i) {
      Vertex v = dec.block[i];
      if (!f[v]) col[v] = (*sides)[i] == 1 ? fresh[1] : fresh[2];
    }
    note(depth, "decomposition colors " + std::to_string(fresh[0]) + ", " + std::to_string(fresh[1]) + ", " +
                    std::to_string(fresh[2]));
    check(g, z, f, col);
    return col;
  }

  int t_;
  int d_;
  int palette_;
  const BaseColorer& base_;
  FamilyClass family_;
  ExtendOptions options_;
  std::vector<std::string> trace_;
};

ColorResult color_with(const Graph& g, int t, int d, int palette, const BaseColorer& base, FamilyClass family,
                       bool clustered, const ColorOptions& options) {
  if (t < 2) throw InputError("t must be at least 2");
  ColorResult out;
  out.palette_bound = palette;
  out.family = family;
  try {
    auto model = find_odd_clique_minor(g, t, OddMinorOptions{options.detect_limit});
    if (model) {
      out.odd_minor = std::move(*model);
      if (options.trace) out.trace.push_back("odd K_t model found before coloring");
      return out;
    }
  } catch (const SizeLimitExceeded&) {
    if (options.trace) out.trace.push_back("up-front odd K_t check skipped (size guard)");
  }
  PrecoloringInstance inst{g, {}, {}, t, std::move(family)};
  ExtendResult r = precolor_extend(inst, d, base, ExtendOptions{true, options.limit, options.trace});
  out.trace.insert(out.trace.end(), r.trace.begin(), r.trace.end());
  out.family = r.family;
  if (r.odd_minor) {
    out.odd_minor = std::move(r.odd_minor);
    return out;
  }
  ColoringAssignment c = std::move(*r.coloring);
  if (c.palette != palette || c.used() > palette) throw InternalError("palette bound exceeded");
  if (Verdict v = verify_coloring(g, c, out.family); !v) throw InternalError("final coloring fails: " + v.reason);
  out.achieved = clustered ? coloring_cluster(g, c.colors) : coloring_defect(g, c.colors);
  out.coloring = std::move(c);
  return out;
}

}  // namespace

ExtendResult precolor_extend(const PrecoloringInstance& inst, int d, const BaseColorer& base,
                             const ExtendOptions& options) {
  const int t = inst.t;
  const Graph& g = inst.graph;
  if (t < 2) throw InputError("t must be at least 2");
  if (d < 1) throw InputError("d must be positive");
  const int palette = d + 4 * t - 7;
  if (static_cast<int>(inst.z.size()) > 4 * t - 7) throw InputError("|Z| exceeds 4t - 7");
  if (make_vertex_set(inst.z) != inst.z) throw InputError("Z must be sorted and duplicate-free");
  for (Vertex v : inst.z) {
    if (!g.contains(v)) throw InputError("Z vertex out of range");
    auto it = inst.f.find(v);
    if (it == inst.f.end()) throw InputError("precoloring missing on Z");
    if (it->second < 1 || it->second > palette) throw InputError("precolor outside [d + 4t - 7]");
  }
  if (inst.f.size() != inst.z.size()) throw InputError("precoloring defined outside Z");
  if (inst.family.small_graph_capacity() < 4 * t - 7) {
    throw InputError("family must contain every graph on at most 4t - 7 vertices");
  }
  if (options.adaptive && inst.family.kind == FamilyClass::Kind::MaxOf) {
    throw InputError("adaptive families must be BoundedDegree or BoundedComponent");
  }

  Extender ext(t, d, base, inst.family, options);
  ExtendResult out;
  try {
    std::vector<int> col = ext.run(g, inst.z, inst.f);
    out.coloring = ColoringAssignment{std::move(col), palette};
  } catch (const OddMinorAbort& abort) {
    if (Verdict v = verify_odd_minor_model(g, complete_graph(t), abort.model); !v) {
      throw InternalError("odd K_t model from the recursion fails: " + v.reason);
    }
    out.odd_minor = abort.model;
  }
  out.family = ext.family();
  out.trace = std::move(ext.trace());
  return out;
}

ColorResult color_defective(const Graph& g, int t, const ColorOptions& options) {
  if (t < 2) throw InputError("t must be at least 2");
  return color_with(g, t, 2 * t - 2, 6 * t - 9, defective_base(t), FamilyClass::bounded_degree(4 * t - 8), false,
                    options);
}

ColorResult color_clustered(const Graph& g, int t, const ColorOptions& options) {
  if (t < 2) throw InputError("t must be at least 2");
  return color_with(g, t, 3 * (2 * t - 2), 10 * t - 13, clustered_base(t), FamilyClass::bounded_component(4 * t - 7),
                    true, options);
}

double bound_M(int s, int t, double delta1, double delta2) {
  if (s < 1 || t < 1) throw InputError("bound_M needs s, t >= 1");
  if (delta1 < 0 || delta2 < 0) throw InputError("bound_M needs nonnegative degrees");
  if (s == 1) return t - 1;
  if (s == 2) return delta2 * t * (delta1 - 2) / 2 + delta1;
  const double n = std::floor(delta2);
  const int k = s - 1;
  double binom = 0;
  if (n >= k) {
    // every partial product is itself a binomial coefficient
    binom = 1;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  }
  return (delta1 - s) * (binom * (t - 1) + delta2 / 2) + delta1;
}

double bound_N(int s, int t, double c0) {
  if (c0 <= 0) throw InputError("c0 must be positive");
  const double p2 = static_cast<double>(s + t) * (s + t);
  return bound_M(s, t, 2 * c0 * p2, c0 * p2);
}

}  // namespace oddminor
