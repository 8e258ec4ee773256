// Runs the ten acceptance checks and prints one PASS/FAIL line for each.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oddminor/algorithms.hpp"
#include "oddminor/certificates.hpp"
#include "oddminor/coloring.hpp"
#include "oddminor/erdos_posa.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/odd_minor.hpp"
#include "oddminor/signed_graph.hpp"
#include "oddminor/structure.hpp"
#include "oracles.hpp"

using namespace oddminor;

namespace {

// Collects failures; the first few are echoed with the criterion's line.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges:";
  for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  return out.str();
}

// 1: odd K_3 exactly when not bipartite.
std::string odd_triangle(Tally& tally) {
  auto check = [&](const Graph& g, const OddMinorOptions& opts) {
    auto m = find_odd_clique_minor(g, 3, opts);
    bool bip = bipartition(g).sides.has_value();
    tally.expect(m.has_value() == !bip, "disagreement on " + describe(g));
    tally.expect(bip == oracle::bipartite(g), "bipartition disagrees with 2-coloring oracle on " + describe(g));
    if (m) tally.expect(static_cast<bool>(verify_odd_minor_model(g, complete_graph(3), *m)), "bad model on " + describe(g));
  };
  long exhaustive = 0;
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      check(oracle::graph_from_mask(n, mask), {});
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) check(oracle::random_graph(rng, 8, 0.05 + 0.3 * (i % 10) / 10.0), {});
  // the plain search, without the bipartiteness shortcut
  for (int i = 0; i < 2000; ++i) check(oracle::random_graph(rng, 3 + i % 5, 0.35), OddMinorOptions{14, true, false});
  return std::to_string(exhaustive) + " graphs n<=7 exhaustive, 10000 random n=8, 2000 without shortcuts";
}

// 2: K_{m,n} has no odd K_3.
std::string complete_bipartite_negative(Tally& tally) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      Graph g = complete_bipartite(m, n);
      tally.expect(!find_odd_clique_minor(g, 3), "found in K" + std::to_string(m) + "," + std::to_string(n));
      tally.expect(!find_odd_clique_minor(g, 3, OddMinorOptions{14, false, false}),
                   "plain search found in K" + std::to_string(m) + "," + std::to_string(n));
    }
  }
  return "16 graphs, with and without shortcuts";
}

// 3: odd S-path dichotomy against path enumeration.
std::string dichotomy(Tally& tally) {
  std::mt19937_64 rng(3);
  int packings = 0, covers = 0;
  for (int i = 0; i < 1200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(rng, n, 0.15 + 0.35 * static_cast<double>(rng() % 100) / 100.0);
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    const int ell = 1 + static_cast<int>(rng() % 3);
    auto r = odd_s_paths_dichotomy(g, s, ell);
    const std::string where = describe(g) + " ell=" + std::to_string(ell);
    if (r.kind == OutcomeKind::Packing) {
      ++packings;
      std::vector<int> used(static_cast<std::size_t>(n), 0);
      tally.expect(static_cast<int>(r.paths.size()) == ell, "packing size on " + where);
      for (const Path& p : r.paths) {
        tally.expect(is_path_in(g, p), "not a path on " + where);
        tally.expect(p.length() % 2 == 1, "even path on " + where);
        tally.expect(p.length() >= 1 && set_contains(s, p.front()) && set_contains(s, p.back()), "ends outside S on " + where);
        for (Vertex v : p.vertices) tally.expect(used[v]++ == 0, "paths overlap on " + where);
      }
    } else {
      ++covers;
      tally.expect(static_cast<int>(r.cover.size()) <= 2 * ell - 2, "cover too large on " + where);
      tally.expect(!oracle::odd_s_path(g, s, r.cover), "cover misses an odd S-path on " + where);
    }
  }
  return "1200 instances (" + std::to_string(packings) + " packings, " + std::to_string(covers) + " covers)";
}

// 4: odd K_t models from t-1 chords.
std::string chord_models(Tally& tally) {
  int built = 0;
  for (int t = 2; t <= 3; ++t) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      auto inst = chorded_subdivision(2 * t - 2, t, t - 1, seed);
      const std::string where = "t=" + std::to_string(t) + " seed=" + std::to_string(seed);
      try {
        auto m = build_odd_clique_model(inst.graph, *inst.embedding, inst.chords);
        tally.expect(static_cast<bool>(verify_odd_minor_model(inst.graph, complete_graph(t), m)), "bad model " + where);
        ++built;
      } catch (const std::exception& e) {
        tally.expect(false, where + ": " + e.what());
      }
    }
  }
  return std::to_string(built) + " models from 240 instances";
}

// 5: decompositions returned by the structure theorem.
std::string structure_contract(Tally& tally) {
  int decompositions = 0, models = 0;
  std::mt19937_64 rng(5);
  auto run = [&](const Graph& g, int t, const SubdivisionEmbedding& emb, const std::string& where) {
    auto r = structure_theorem(g, t, emb, {64});
    if (auto* m = std::get_if<OddMinorModel>(&r)) {
      ++models;
      tally.expect(static_cast<bool>(verify_odd_minor_model(g, complete_graph(t), *m)), "bad model " + where);
      return;
    }
    ++decompositions;
    const auto& d = std::get<Decomposition>(r);
    tally.expect(static_cast<int>(d.apex.size()) <= 2 * t - 4, "apex too large " + where);
    tally.expect(static_cast<int>(d.block.size()) >= t + 3, "block too small " + where);
    tally.expect(oracle::bipartite(g.induced(d.block)), "block not bipartite " + where);
    tally.expect(static_cast<int>(d.retained_branch.size()) >= (3 * t - 2) - static_cast<int>(d.apex.size()),
                 "too few retained " + where);
    VertexSet keep = complement(d.apex, g.vertex_count());
    VertexSet local;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (set_contains(d.block, keep[i])) local.push_back(static_cast<Vertex>(i));
    }
    auto bs = oracle::blocks(g.induced(keep));
    tally.expect(std::find(bs.begin(), bs.end(), local) != bs.end(), "not a block " + where);
    for (Vertex b : d.retained_branch) tally.expect(set_contains(d.block, b), "retained outside block " + where);
    tally.expect(static_cast<bool>(verify_decomposition(g, emb, d, 2 * t - 4)), "verifier rejects " + where);
  };
  for (int t = 2; t <= 3; ++t) {
    for (int chords = 0; chords < t; ++chords) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto inst = chorded_subdivision(2 * t - 2, t, chords, seed);
        run(inst.graph, t, *inst.embedding, "t=" + std::to_string(t) + " chords=" + std::to_string(chords));
      }
    }
    for (int count : {1, 3}) {
      auto inst = join_subdivision(2 * t - 2, t, count);
      run(inst.graph, t, *inst.embedding, "bare t=" + std::to_string(t));
      // a few random extra edges on top
      for (int k = 0; k < 20; ++k) {
        Graph g = inst.graph;
        const int n = g.vertex_count();
        for (int e = 0; e < 1 + k % 3; ++e) {
          Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
          if (a != b && !g.has_edge(a, b)) g.add_edge(a, b);
        }
        run(g, t, *inst.embedding, "extra edges t=" + std::to_string(t) + " k=" + std::to_string(k));
      }
    }
  }
  tally.expect(decompositions > 0, "no decomposition produced");
  return std::to_string(decompositions) + " decompositions checked, " + std::to_string(models) + " models verified";
}

// Each edge replaced by a path with an odd number of inner vertices: every
// cycle doubles in parity terms, so the result is bipartite.
Graph even_subdivision(std::mt19937_64& rng, int budget) {
  const int k = 3 + static_cast<int>(rng() % 3);
  Graph base = oracle::random_graph(rng, k, 0.6);
  int n = k;
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : base.edges()) {
    int inner = (rng() % 4 == 0) ? 3 : 1;
    if (n + inner > budget) inner = 1;
    if (n + inner > budget) break;
    Vertex prev = e.u;
    for (int i = 0; i < inner; ++i) {
      out.push_back({prev, n});
      prev = n++;
    }
    out.push_back({prev, e.v});
  }
  Graph g(n);
  for (auto [a, b] : out) g.add_edge(a, b);
  return g;
}

// 6: palette bounds at t = 3.
std::string coloring_bounds(Tally& tally) {
  std::mt19937_64 rng(6);
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int i = 0; i < 60; ++i) {
    int a = 1 + static_cast<int>(rng() % 7), b = 1 + static_cast<int>(rng() % 7);
    corpus.push_back({"bipartite", oracle::random_bipartite(rng, a, b, 0.3 + 0.1 * (i % 6))});
  }
  for (int a = 1; a <= 7; ++a) corpus.push_back({"complete bipartite", complete_bipartite(a, 14 - a)});
  for (int i = 0; i < 40; ++i) corpus.push_back({"even subdivision", even_subdivision(rng, 14)});
  corpus.push_back({"even subdivision", join_subdivision(2, 3, 1).graph});
  corpus.push_back({"even subdivision", join_subdivision(2, 2, 3).graph});
  int random_kept = 0;
  for (int i = 0; i < 400 && random_kept < 40; ++i) {
    Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 11), 0.2);
    if (find_odd_clique_minor(g, 3)) continue;
    corpus.push_back({"random, detector-certified", g});
    ++random_kept;
  }
  int worst_def = 0, worst_clu = 0, max_def = 0, max_clu = 0;
  for (const auto& [kind, g] : corpus) {
    const std::string where = kind + " " + describe(g);
    auto d = color_defective(g, 3);
    tally.expect(d.coloring.has_value(), "no defective coloring for " + where);
    if (d.coloring) {
      worst_def = std::max(worst_def, d.coloring->used());
      max_def = std::max(max_def, d.achieved);
      tally.expect(d.coloring->used() <= 9 && d.coloring->palette <= 9, "defective palette above 9 for " + where);
      tally.expect(static_cast<bool>(verify_coloring(g, *d.coloring, d.family)), "defective verify failed " + where);
      tally.expect(coloring_defect(g, d.coloring->colors) == d.achieved, "defect misreported " + where);
    }
    auto c = color_clustered(g, 3);
    tally.expect(c.coloring.has_value(), "no clustered coloring for " + where);
    if (c.coloring) {
      worst_clu = std::max(worst_clu, c.coloring->used());
      max_clu = std::max(max_clu, c.achieved);
      tally.expect(c.coloring->used() <= 17 && c.coloring->palette <= 17, "clustered palette above 17 for " + where);
      tally.expect(static_cast<bool>(verify_coloring(g, *c.coloring, c.family)), "clustered verify failed " + where);
      tally.expect(coloring_cluster(g, c.coloring->colors) == c.achieved, "cluster misreported " + where);
    }
  }
  std::ostringstream out;
  out << corpus.size() << " graphs; colors used <= " << worst_def << "/9 and " << worst_clu
      << "/17; defect up to " << max_def << ", cluster up to " << max_clu;
  return out.str();
}

// 7: precoloring contract at t = 3.
std::string precoloring(Tally& tally) {
  std::mt19937_64 rng(7);
  const int t = 3;
  int colored = 0, minors = 0, tries = 0;
  while (colored < 600 && tries < 3000) {
    ++tries;
    const bool clustered = tries % 3 == 0;
    const int d = clustered ? 6 * t - 6 : 2 * t - 2;
    Graph g;
    switch (tries % 4) {
      case 0: g = oracle::random_bipartite(rng, 2 + static_cast<int>(rng() % 7), 2 + static_cast<int>(rng() % 7), 0.45); break;
      case 1: g = even_subdivision(rng, 16); break;
      case 2: g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 11), 0.2); break;
      default: g = join_subdivision(4, 3, 1 + 2 * static_cast<int>(rng() % 2)).graph; break;
    }
    const int n = g.vertex_count();
    VertexSet z;
    std::map<Vertex, int> f;
    const int want = static_cast<int>(rng() % static_cast<unsigned>(4 * t - 6));
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < want && i < n; ++i) z.push_back(order[i]);
    std::sort(z.begin(), z.end());
    for (Vertex v : z) f[v] = 1 + static_cast<int>(rng() % static_cast<unsigned>(d + 4 * t - 7));
    FamilyClass fam = clustered ? FamilyClass::bounded_component(4 * t - 7) : FamilyClass::bounded_degree(4 * t - 8);
    if (fam.small_graph_capacity() < 4 * t - 7) fam = FamilyClass::bounded_degree(4 * t - 7);
    PrecoloringInstance inst{g, z, f, t, fam};
    const std::string where = describe(g);
    ExtendResult r;
    try {
      r = precolor_extend(inst, d, clustered ? clustered_base(t) : defective_base(t), {true, 64});
    } catch (const std::exception& e) {
      tally.expect(false, where + ": " + e.what());
      continue;
    }
    if (r.odd_minor) {
      ++minors;
      tally.expect(static_cast<bool>(verify_odd_minor_model(g, complete_graph(t), *r.odd_minor)), "bad model " + where);
      continue;
    }
    ++colored;
    const auto& c = r.coloring->colors;
    tally.expect(static_cast<int>(c.size()) == n, "partial " + where);
    for (int x : c) tally.expect(x >= 1 && x <= d + 4 * t - 7, "color out of range " + where);
    for (auto [v, col] : f) tally.expect(c[v] == col, "(a) broken " + where);
    for (Vertex v : z) {
      for (Vertex w : g.neighbors(v)) {
        if (!set_contains(z, w)) tally.expect(c[v] != c[w], "(b) broken " + where);
      }
    }
    // family membership per class, measured directly
    bool fits = true;
    if (r.family.kind == FamilyClass::Kind::BoundedDegree) {
      for (Vertex v = 0; v < n; ++v) {
        int same = 0;
        for (Vertex w : g.neighbors(v)) same += c[w] == c[v];
        fits &= same <= r.family.bound;
      }
    } else {
      std::vector<char> none(static_cast<std::size_t>(n), 0);
      for (Vertex v = 0; v < n; ++v) {
        int size = 0;
        for (Vertex w = 0; w < n; ++w) {
          if (c[w] == c[v]) {
            Graph mono(n);
            for (const Edge& e : g.edges()) {
              if (c[e.u] == c[v] && c[e.v] == c[v]) mono.add_edge(e.u, e.v);
            }
            size += oracle::connected_without(mono, none, v, w);
          }
        }
        fits &= size <= r.family.bound;
      }
    }
    tally.expect(fits, "class outside " + r.family.describe() + " " + where);
  }
  tally.expect(colored >= 500, "fewer than 500 colored instances");
  return std::to_string(colored) + " colored instances, " + std::to_string(minors) + " odd K_3 models returned";
}

// 8: signed graph algebra.
std::string signed_algebra(Tally& tally) {
  std::mt19937_64 rng(8);
  long graphs = 0, cycles = 0;
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = oracle::graph_from_mask(n, mask);
      ++graphs;
      EdgeSet sigma;
      for (const Edge& e : g.edges()) {
        if (rng() % 2) sigma.insert(e);
      }
      VertexSet x;
      for (Vertex v = 0; v < n; ++v) {
        if (rng() % 2) x.push_back(v);
      }
      SignedGraph sg(g, sigma);
      SignedGraph rs = resign(sg, x);
      // BFS forest; one fundamental cycle per non-tree edge
      std::vector<Vertex> parent(static_cast<std::size_t>(n), -1), depth(static_cast<std::size_t>(n), -1);
      for (Vertex r = 0; r < n; ++r) {
        if (depth[r] >= 0) continue;
        depth[r] = 0;
        std::vector<Vertex> queue{r};
        for (std::size_t h = 0; h < queue.size(); ++h) {
          for (Vertex w : g.neighbors(queue[h])) {
            if (depth[w] < 0) {
              depth[w] = depth[queue[h]] + 1;
              parent[w] = queue[h];
              queue.push_back(w);
            }
          }
        }
      }
      for (const Edge& e : g.edges()) {
        if (parent[e.v] == e.u || parent[e.u] == e.v) continue;
        std::vector<Vertex> left{e.u}, right{e.v};
        while (left.back() != right.back()) {
          if (depth[left.back()] >= depth[right.back()]) {
            left.push_back(parent[left.back()]);
          } else {
            right.push_back(parent[right.back()]);
          }
        }
        right.pop_back();
        std::vector<Vertex> cyc(left.rbegin(), left.rend());
        cyc.insert(cyc.begin(), right.begin(), right.end());
        // negative edges on the closed walk, counted by hand
        auto negatives = [&](const EdgeSet& s) {
          int k = 0;
          for (std::size_t i = 0; i < cyc.size(); ++i) k += s.count(Edge(cyc[i], cyc[(i + 1) % cyc.size()])) ? 1 : 0;
          return k % 2 == 0;
        };
        ++cycles;
        bool before = negatives(sg.signature), after = negatives(rs.signature);
        tally.expect(before == after, "balance changed on " + describe(g));
        tally.expect(is_balanced(sg, Path(cyc)) == before && is_balanced(rs, Path(cyc)) == after,
                     "is_balanced disagrees on " + describe(g));
      }
    }
  }
  for (int i = 0; i < 1500; ++i) {
    Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.4);
    EdgeSet sigma;
    for (const Edge& e : g.edges()) {
      if (rng() % 2) sigma.insert(e);
    }
    VertexSet x;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 2) x.push_back(v);
    }
    SignedGraph sg(g, sigma);
    EdgeSet target = resign(sg, x).signature;
    auto found = signatures_equivalent(sg, target);
    tally.expect(found.has_value(), "equivalence missed on " + describe(g));
    if (found) tally.expect(resign(sg, *found).signature == target, "wrong witness on " + describe(g));
  }
  return std::to_string(graphs) + " graphs n<=7 (" + std::to_string(cycles) + " fundamental cycles), 1500 round trips";
}

// 9: bound calculators, re-derived with exact binomials.
std::string bounds(Tally& tally) {
  for (int t = 1; t <= 100; ++t) {
    tally.expect(bound_M(1, t, 7.5, 3.25) == t - 1, "s=1 t=" + std::to_string(t));
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const int s = i < 25 ? 2 : 3 + static_cast<int>(rng() % 6);
    const int t = 1 + static_cast<int>(rng() % 12);
    // quarters keep every intermediate value exact in binary floating point
    const double d1 = static_cast<double>(rng() % 400) / 4.0, d2 = static_cast<double>(rng() % 120) / 4.0;
    double want;
    if (s == 2) {
      want = d2 * t * (d1 - 2) / 2 + d1;
    } else {
      want = (d1 - s) * (oracle::binomial(static_cast<int>(std::floor(d2)), s - 1) * (t - 1) + d2 / 2) + d1;
    }
    std::ostringstream where;
    where << "M(" << s << "," << t << "," << d1 << "," << d2 << ")";
    tally.expect(bound_M(s, t, d1, d2) == want, where.str());
  }
  tally.expect(bound_N(2, 1, 1) == 90, "N(2,1,1)");
  return "100 s=1 values, 25 s=2 and 25 s>2 tuples";
}

// 10: certificates of every kind round-trip.
std::string certificates(Tally& tally) {
  std::vector<std::pair<Graph, Certificate>> items;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    Graph g = oracle::random_graph(rng, 4 + i % 6, 0.5);
    if (auto m = find_odd_clique_minor(g, 3)) items.push_back({g, make_certificate(g, OddMinorBody{complete_graph(3), *m})});
    Graph k3 = complete_graph(3);
    EdgeSet sigma;
    for (const Edge& e : k3.edges()) {
      if (rng() % 2) sigma.insert(e);
    }
    if (auto m = find_signed_minor(g, k3, sigma)) items.push_back({g, make_certificate(g, SignedMinorBody{k3, sigma, *m})});
    VertexSet s;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 2) s.push_back(v);
    }
    items.push_back({g, make_certificate(g, PathSystemBody{s, std::nullopt, odd_s_paths_dichotomy(g, s, 1 + i % 3)})});
    auto c = color_clustered(g, 4);
    if (c.coloring) items.push_back({g, make_certificate(g, ColoringBody{*c.coloring, c.family})});
  }
  Graph star = complete_bipartite(1, 4);
  VertexSet leaves{1, 2, 3, 4};
  items.push_back({star, make_certificate(star, PathSystemBody{leaves, std::nullopt, odd_s_paths_dichotomy(star, leaves, 1)})});
  for (int t = 2; t <= 3; ++t) {
    for (int chords = 0; chords < t; ++chords) {
      auto inst = chorded_subdivision(2 * t - 2, t, chords, 11 + chords);
      const auto& emb = *inst.embedding;
      items.push_back({inst.graph, make_certificate(inst.graph, SubdivisionBody{emb, true})});
      auto pb = parity_breaking_dichotomy(inst.graph, emb, std::max(1, chords), {64});
      items.push_back({inst.graph, make_certificate(inst.graph, PathSystemBody{std::nullopt, emb, pb})});
      auto st = structure_theorem(inst.graph, t, emb, {64});
      if (auto* d = std::get_if<Decomposition>(&st)) {
        items.push_back({inst.graph, make_certificate(inst.graph, DecompositionBody{emb, 2 * t - 4, *d})});
      } else {
        items.push_back({inst.graph, make_certificate(inst.graph, OddMinorBody{complete_graph(t), std::get<OddMinorModel>(st)})});
      }
    }
  }
  auto mixed = color_defective(complete_bipartite(3, 4), 3);
  items.push_back({complete_bipartite(3, 4),
                   make_certificate(complete_bipartite(3, 4),
                                    ColoringBody{*mixed.coloring, FamilyClass::max_of({mixed.family, FamilyClass::bounded_component(3)})})});

  std::set<std::string> kinds;
  for (const auto& [g, cert] : items) {
    kinds.insert(cert.kind());
    const std::string where = cert.kind() + " on " + describe(g);
    tally.expect(static_cast<bool>(verify_certificate(g, cert)), "original fails " + where);
    std::string text = serialize_certificate(cert);
    try {
      Certificate back = parse_certificate(text);
      tally.expect(back == cert, "parse changed content " + where);
      tally.expect(serialize_certificate(back) == text, "bytes differ " + where);
      tally.expect(static_cast<bool>(verify_certificate(g, back)), "re-verify fails " + where);
    } catch (const std::exception& e) {
      tally.expect(false, where + ": " + e.what());
    }
  }
  tally.expect(kinds.size() == 7, "only " + std::to_string(kinds.size()) + " kinds covered");
  return std::to_string(items.size()) + " certificates over " + std::to_string(kinds.size()) + " kinds";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string(Tally&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"odd K_3 iff not bipartite", odd_triangle},
      {"complete bipartite graphs have no odd K_3", complete_bipartite_negative},
      {"odd S-path packing or cover", dichotomy},
      {"odd K_t from t-1 parity-breaking chords", chord_models},
      {"structure theorem decompositions", structure_contract},
      {"palette bounds 9 and 17 at t=3", coloring_bounds},
      {"precoloring extension contract", precoloring},
      {"re-signing and equivalence", signed_algebra},
      {"bound calculators", bounds},
      {"certificate round trip", certificates},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    std::string summary;
    auto start = std::chrono::steady_clock::now();
    try {
      summary = criteria[i].run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = tally.failed == 0;
    failures += !ok;
    std::printf("[%s] %zu. %s: %s (%ld checks, %.1fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                summary.c_str(), tally.checked, secs);
    if (!ok) std::printf("       %ld failed; first: %s\n", tally.failed, tally.first.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
