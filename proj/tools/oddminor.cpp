#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oddminor/algorithms.hpp"
#include "oddminor/certificates.hpp"
#include "oddminor/coloring.hpp"
#include "oddminor/erdos_posa.hpp"
#include "oddminor/generators.hpp"
#include "oddminor/graph_io.hpp"
#include "oddminor/odd_minor.hpp"
#include "oddminor/signed_graph.hpp"
#include "oddminor/structure.hpp"
#include "oddminor/subdivision.hpp"

namespace fs = std::filesystem;
using namespace oddminor;

namespace {

enum Exit { kOk = 0, kFalse = 1, kOddMinor = 2, kSizeGuard = 3, kInput = 4 };

struct Common {
  std::string format = "graph6";
  int t = 3;
  std::string mode;
  int limit = -1;
  std::uint64_t seed = 0;
  double c0 = 10.0;
  bool trace = false;
  std::string out;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path, const Common& c) { return parse_graph(slurp(path), parse_format(c.format)); }

// --limit, then ODDMINOR_LIMIT, then the operation's own default
int size_limit(const Common& c, int fallback) {
  if (c.limit >= 0) return c.limit;
  if (const char* env = std::getenv("ODDMINOR_LIMIT")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError("ODDMINOR_LIMIT must be a nonnegative integer");
  }
  return fallback;
}

std::vector<int> int_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("not an integer: \"" + item + "\"");
    }
  }
  return out;
}

// ---- gen

int cmd_gen(const Common& c, const std::string& family, const std::vector<std::string>& args, std::string cert_path) {
  auto num = [&](std::size_t i) {
    if (i >= args.size()) throw InputError(family + ": missing parameter " + std::to_string(i + 1));
    auto v = int_csv(args[i]);
    if (v.size() != 1) throw InputError(family + ": parameter " + std::to_string(i + 1) + " must be one integer");
    return v[0];
  };
  auto arity = [&](std::size_t k) {
    if (args.size() != k) throw InputError(family + " takes " + std::to_string(k) + " parameters");
  };
  GeneratedInstance inst;
  if (family == "complete_bipartite") {
    arity(2);
    inst.graph = complete_bipartite(num(0), num(1));
  } else if (family == "complete") {
    arity(1);
    inst.graph = complete_graph(num(0));
  } else if (family == "cycle") {
    arity(1);
    inst.graph = cycle_graph(num(0));
  } else if (family == "random") {
    arity(2);
    double p = 0;
    try {
      p = std::stod(args[1]);
    } catch (const std::exception&) {
      throw InputError("random: p must be a number");
    }
    inst.graph = random_graph(num(0), p, c.seed);
  } else if (family == "join_subdivision") {
    arity(3);
    auto counts = int_csv(args[2]);
    inst = counts.size() == 1 ? join_subdivision(num(0), num(1), counts[0]) : join_subdivision(num(0), num(1), counts);
  } else if (family == "chorded_subdivision") {
    arity(3);
    inst = chorded_subdivision(num(0), num(1), num(2), c.seed);
    Subgraph h = inst.embedding->union_subgraph();
    for (const Path& p : inst.chords) {
      if (!is_parity_breaking(p, h)) throw InternalError("generated chord is not parity-breaking");
    }
  } else {
    throw InputError("unknown generator family \"" + family + "\"");
  }
  emit(write_graph(inst.graph, parse_format(c.format)), c.out);
  if (inst.embedding) {
    if (cert_path.empty() && !c.out.empty() && c.out != "-") cert_path = c.out + ".json";
    Certificate cert = make_certificate(inst.graph, SubdivisionBody{*inst.embedding, true});
    if (!verify_certificate(inst.graph, cert)) throw InternalError("generated embedding fails verification");
    if (cert_path.empty()) {
      std::cerr << "embedding certificate not written (use --cert or --out)\n";
    } else {
      emit(serialize_certificate(cert), cert_path);
    }
  }
  return kOk;
}

// ---- detect

int cmd_detect(const Common& c, const std::string& graph_path, const std::string& sigma_text, int s) {
  Graph g = load_graph(graph_path, c);
  std::optional<Certificate> cert;
  int found = kOk;
  if (c.mode == "odd-clique") {
    auto m = find_odd_clique_minor(g, c.t, OddMinorOptions{size_limit(c, 14)});
    if (m) {
      cert = make_certificate(g, OddMinorBody{complete_graph(c.t), *m});
      found = kOddMinor;
    }
  } else if (c.mode == "signed") {
    Graph h = complete_graph(c.t);
    EdgeSet sigma;
    auto ends = int_csv(sigma_text);
    if (ends.size() % 2) throw InputError("--sigma needs pairs u,v,...");
    for (std::size_t i = 0; i < ends.size(); i += 2) {
      if (!h.contains(ends[i]) || !h.contains(ends[i + 1]) || ends[i] == ends[i + 1]) {
        throw InputError("--sigma edge outside K_t");
      }
      sigma.insert(Edge(ends[i], ends[i + 1]));
    }
    auto m = find_signed_minor(g, h, sigma, SearchOptions{size_limit(c, 14)});
    if (m) cert = make_certificate(g, SignedMinorBody{h, sigma, *m});
  } else if (c.mode == "subdivision") {
    if (s < 0) throw InputError("subdivision mode needs --s");
    auto e = find_bipartite_join_subdivision(g, s, c.t, SubdivisionOptions{size_limit(c, 30)});
    if (e) cert = make_certificate(g, SubdivisionBody{*e, true});
  } else {
    throw InputError("--mode must be odd-clique, signed or subdivision");
  }
  if (!cert) {
    std::cout << "absent\n";
    return kOk;
  }
  if (!verify_certificate(g, *cert)) throw InternalError("emitted certificate fails verification");
  emit(serialize_certificate(*cert), c.out);
  return found;
}

// ---- color

int cmd_color(const Common& c, const std::string& graph_path) {
  Graph g = load_graph(graph_path, c);
  ColorOptions opt;
  opt.limit = size_limit(c, opt.limit);
  opt.trace = c.trace;
  bool clustered = c.mode == "clustered";
  if (!clustered && c.mode != "defective") throw InputError("--mode must be defective or clustered");
  ColorResult r = clustered ? color_clustered(g, c.t, opt) : color_defective(g, c.t, opt);
  for (const std::string& line : r.trace) std::cerr << "trace: " << line << "\n";
  if (r.odd_minor) {
    emit(serialize_certificate(make_certificate(g, OddMinorBody{complete_graph(c.t), *r.odd_minor})), c.out);
    std::cerr << "odd K_" << c.t << " minor found\n";
    return kOddMinor;
  }
  Certificate cert = make_certificate(g, ColoringBody{*r.coloring, r.family});
  if (!verify_certificate(g, cert)) throw InternalError("coloring certificate fails verification");
  emit(serialize_certificate(cert), c.out);
  const int s = 2 * c.t - 2;
  char nbuf[32];
  std::snprintf(nbuf, sizeof nbuf, "%.6g", bound_N(s, c.t, c.c0));
  std::cerr << "palette_used=" << r.coloring->used() << " bound_palette=" << r.palette_bound
            << (clustered ? " cluster_achieved=" : " defect_achieved=") << r.achieved
            << " family=" << r.family.describe() << " N(2t-2,t)=" << nbuf << "\n";
  return kOk;
}

// ---- decompose

int cmd_decompose(const Common& c, const std::string& graph_path, const std::string& cert_path) {
  Graph g = load_graph(graph_path, c);
  std::optional<SubdivisionEmbedding> emb;
  if (!cert_path.empty()) {
    Certificate in = parse_certificate(slurp(cert_path));
    auto* body = std::get_if<SubdivisionBody>(&in.body);
    if (!body) throw InputError("--cert must hold a subdivision certificate");
    if (!verify_certificate(g, in)) throw InputError("subdivision certificate does not verify");
    emb = body->embedding;
  }
  StructureOptions opt{size_limit(c, 30)};
  if (!emb) {
    emb = find_bipartite_join_subdivision(g, 2 * c.t - 2, c.t, SubdivisionOptions{opt.limit});
    if (!emb) throw HypothesisUnmet("no bipartite subdivision of K_{2t-2} + I_t");
  }
  auto r = structure_theorem(g, c.t, emb, opt);
  if (auto* m = std::get_if<OddMinorModel>(&r)) {
    emit(serialize_certificate(make_certificate(g, OddMinorBody{complete_graph(c.t), *m})), c.out);
    return kOddMinor;
  }
  Certificate cert = make_certificate(g, DecompositionBody{*emb, 2 * c.t - 4, std::get<Decomposition>(r)});
  if (!verify_certificate(g, cert)) throw InternalError("decomposition certificate fails verification");
  emit(serialize_certificate(cert), c.out);
  return kOk;
}

// ---- ep

int cmd_ep(const Common& c, const std::string& graph_path, const std::string& s_text, const std::string& cert_path,
           int ell) {
  Graph g = load_graph(graph_path, c);
  PathSystemBody body;
  if (!cert_path.empty()) {
    Certificate in = parse_certificate(slurp(cert_path));
    auto* sub = std::get_if<SubdivisionBody>(&in.body);
    if (!sub) throw InputError("--cert must hold a subdivision certificate");
    if (!verify_certificate(g, in)) throw InputError("subdivision certificate does not verify");
    body.embedding = sub->embedding;
    body.result = parity_breaking_dichotomy(g, sub->embedding, ell, DichotomyOptions{size_limit(c, 30)});
  } else {
    VertexSet s = make_vertex_set(int_csv(s_text));
    body.s = s;
    body.result = odd_s_paths_dichotomy(g, s, ell, DichotomyOptions{size_limit(c, 20)});
  }
  Certificate cert = make_certificate(g, body);
  if (!verify_certificate(g, cert)) throw InternalError("path certificate fails verification");
  emit(serialize_certificate(cert), c.out);
  return kOk;
}

// ---- verify

int cmd_verify(const Common& c, const std::string& graph_path, const std::string& cert_path) {
  Graph g = load_graph(graph_path, c);
  std::string text = slurp(cert_path);
  Certificate cert = parse_certificate(text);
  Verdict v = verify_certificate(g, cert);
  bool canonical = serialize_certificate(cert) == text;
  std::cout << cert.kind() << ": " << (v ? "valid" : "invalid (" + v.reason + ")")
            << (canonical ? "" : " [non-canonical formatting]") << "\n";
  return v ? kOk : kFalse;
}

// ---- corpus

struct CorpusItem {
  std::string name;
  Graph graph;
};

struct Row {
  std::string name;
  int n = 0, m = 0, t = 0;
  int palette_used = 0;
  int bound = 0;
  std::string achieved;
  std::string outcome;
  double wall_ms = 0;
};

std::vector<CorpusItem> sweep_items(const std::string& sweep, const Common& c) {
  std::vector<CorpusItem> items;
  if (sweep == "complete_bipartite") {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) items.push_back({"K" + std::to_string(a) + "x" + std::to_string(b), complete_bipartite(a, b)});
    }
  } else if (sweep == "cycles") {
    for (int n = 3; n <= 9; ++n) items.push_back({"C" + std::to_string(n), cycle_graph(n)});
  } else if (sweep == "random") {
    for (int i = 0; i < 20; ++i) {
      int n = 6 + i % 9;
      items.push_back({"random" + std::to_string(i), random_graph(n, 0.3, c.seed * 1000 + static_cast<std::uint64_t>(i))});
    }
  } else if (sweep == "even_subdivisions") {
    for (int k = 0; k <= 2; ++k) items.push_back({"K4+I3x" + std::to_string(2 * k + 1), join_subdivision(4, 3, 2 * k + 1).graph});
  } else if (!sweep.empty()) {
    throw InputError("unknown sweep \"" + sweep + "\"");
  }
  return items;
}

Row run_item(const CorpusItem& item, int t, bool clustered, const Common& c) {
  Row row;
  row.name = item.name;
  row.n = item.graph.vertex_count();
  row.m = item.graph.edge_count();
  row.t = t;
  row.bound = clustered ? 10 * t - 13 : 6 * t - 9;
  auto start = std::chrono::steady_clock::now();
  try {
    ColorOptions opt;
    opt.limit = size_limit(c, opt.limit);
    ColorResult r = clustered ? color_clustered(item.graph, t, opt) : color_defective(item.graph, t, opt);
    if (r.odd_minor) {
      if (!verify_odd_minor_model(item.graph, complete_graph(t), *r.odd_minor)) throw InternalError("bad odd minor");
      row.outcome = "odd-minor-found";
    } else {
      if (!verify_coloring(item.graph, *r.coloring, r.family)) throw InternalError("bad coloring");
      row.palette_used = r.coloring->used();
      row.achieved = std::to_string(r.achieved);
      row.outcome = "colored";
    }
  } catch (const SizeLimitExceeded&) {
    row.outcome = "size-guard";
  } catch (const HypothesisUnmet&) {
    row.outcome = "hypothesis-unmet";
  } catch (const std::exception&) {
    row.outcome = "error";
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

int cmd_corpus(const Common& c, const std::string& dir, const std::string& sweep, const std::string& t_range, int jobs,
               bool no_time) {
  bool clustered = c.mode == "clustered";
  if (!clustered && c.mode != "defective") throw InputError("--mode must be defective or clustered");
  std::vector<CorpusItem> items = sweep_items(sweep, c);
  if (!dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) items.push_back({p.filename().string(), load_graph(p.string(), c)});
  }
  std::vector<int> ts;
  auto dash = t_range.find('-');
  if (t_range.empty()) {
    ts.push_back(c.t);
  } else if (dash == std::string::npos) {
    ts = int_csv(t_range);
  } else {
    int lo = int_csv(t_range.substr(0, dash)).at(0), hi = int_csv(t_range.substr(dash + 1)).at(0);
    for (int t = lo; t <= hi; ++t) ts.push_back(t);
  }
  for (int t : ts) {
    if (t < 2) throw InputError("t must be at least 2");
  }

  std::vector<std::pair<const CorpusItem*, int>> work;
  for (const CorpusItem& item : items) {
    for (int t : ts) work.emplace_back(&item, t);
  }
  std::vector<Row> rows(work.size());
  jobs = std::max(1, jobs);
  for (std::size_t base = 0; base < work.size(); base += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<Row>> batch;
    for (std::size_t i = base; i < std::min(work.size(), base + static_cast<std::size_t>(jobs)); ++i) {
      batch.push_back(std::async(std::launch::async, run_item, std::cref(*work[i].first), work[i].second, clustered, std::cref(c)));
    }
    for (std::size_t k = 0; k < batch.size(); ++k) rows[base + k] = batch[k].get();
  }

  std::ostringstream csv;
  csv << "name,n,m,t,mode,palette_used,bound,achieved,outcome,wall_ms\n";
  for (const Row& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.6g", no_time ? 0.0 : r.wall_ms);
    csv << r.name << ',' << r.n << ',' << r.m << ',' << r.t << ',' << c.mode << ',' << r.palette_used << ','
        << r.bound << ',' << r.achieved << ',' << r.outcome << ',' << ms << "\n";
  }
  emit(csv.str(), c.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd clique minors, decompositions and colorings"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub, bool with_t) {
    sub->add_option("--format", c.format, "graph format: graph6, dimacs or edgelist")
        ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
    if (with_t) sub->add_option("--t", c.t, "clique size t");
    sub->add_option("--limit", c.limit, "size guard (default: ODDMINOR_LIMIT or the operation's own)");
    sub->add_option("--out", c.out, "output path (default stdout)");
  };

  std::string family, graph_path, cert_path, sigma, s_text, dir, sweep, t_range;
  std::vector<std::string> params;
  int s = -1, ell = 1, jobs = 1;
  bool no_time = false;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  common(gen, false);
  gen->add_option("family", family, "complete_bipartite | complete | cycle | random | join_subdivision | chorded_subdivision")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", c.seed, "random seed");
  gen->add_option("--cert", cert_path, "where to write the embedding certificate");

  auto* detect = app.add_subcommand("detect", "search for an odd K_t, a signed K_t or a bipartite subdivision");
  common(detect, true);
  detect->add_option("graph", graph_path)->required();
  detect->add_option("--mode", c.mode, "odd-clique (default), signed or subdivision");
  detect->add_option("--sigma", sigma, "negative edges of K_t as u,v,u,v,...");
  detect->add_option("--s", s, "clique part of K_s + I_t (subdivision mode)");

  auto* color = app.add_subcommand("color", "defective or clustered coloring");
  common(color, true);
  color->add_option("graph", graph_path)->required();
  color->add_option("--mode", c.mode, "defective (default) or clustered");
  color->add_flag("--trace", c.trace, "print the recursion trace to stderr");
  color->add_option("--c0", c.c0, "constant in N(s,t) for the report")->check(CLI::PositiveNumber);

  auto* decompose = app.add_subcommand("decompose", "odd K_t model or apex set plus bipartite block");
  common(decompose, true);
  decompose->add_option("graph", graph_path)->required();
  decompose->add_option("--cert", cert_path, "subdivision certificate to start from");

  auto* ep = app.add_subcommand("ep", "packing or cover of odd S-paths / parity-breaking C-paths");
  common(ep, false);
  ep->add_option("graph", graph_path)->required();
  ep->add_option("--ell", ell, "number of paths")->required();
  auto* s_opt = ep->add_option("--s", s_text, "S as a comma separated list");
  ep->add_option("--cert", cert_path, "subdivision certificate (parity-breaking paths)")->excludes(s_opt);

  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  common(verify, false);
  verify->add_option("graph", graph_path)->required();
  verify->add_option("certificate", cert_path)->required();

  auto* corpus = app.add_subcommand("corpus", "color a directory or a generated sweep and write CSV");
  common(corpus, true);
  corpus->add_option("--dir", dir, "directory of graph files");
  corpus->add_option("--sweep", sweep, "complete_bipartite, cycles, random or even_subdivisions");
  corpus->add_option("--t-range", t_range, "t values, e.g. 2-4 or 3,5");
  corpus->add_option("--mode", c.mode, "defective (default) or clustered");
  corpus->add_option("--seed", c.seed, "seed for the random sweep");
  corpus->add_option("--jobs", jobs, "instances run in parallel");
  corpus->add_flag("--no-time", no_time, "write 0 in the wall time column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (c.mode.empty()) c.mode = *detect ? "odd-clique" : "defective";

  try {
    if (*gen) return cmd_gen(c, family, params, cert_path);
    if (*detect) return cmd_detect(c, graph_path, sigma, s);
    if (*color) return cmd_color(c, graph_path);
    if (*decompose) return cmd_decompose(c, graph_path, cert_path);
    if (*ep) {
      if (cert_path.empty() && s_text.empty()) throw InputError("ep needs --s or --cert");
      return cmd_ep(c, graph_path, s_text, cert_path, ell);
    }
    if (*verify) return cmd_verify(c, graph_path, cert_path);
    if (*corpus) return cmd_corpus(c, dir, sweep, t_range, jobs, no_time);
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const HypothesisUnmet& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return kFalse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFalse;
  }
  return kOk;
}
