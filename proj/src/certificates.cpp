#include "oddminor/certificates.hpp"

#include <cstdio>
#include <initializer_list>
#include <set>

#include "json.hpp"

namespace oddminor {

using nlohmann::json;

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n");
  for (const Edge& e : g.edges()) feed(std::to_string(e.u) + " " + std::to_string(e.v) + "\n");
  return h;
}

std::string Certificate::kind() const {
  struct Name {
    std::string operator()(const OddMinorBody&) const { return "odd-minor-model"; }
    std::string operator()(const SignedMinorBody&) const { return "signed-minor-model"; }
    std::string operator()(const SubdivisionBody&) const { return "subdivision"; }
    std::string operator()(const PathSystemBody& b) const {
      return b.result.kind == OutcomeKind::Packing ? "packing" : "cover";
    }
    std::string operator()(const DecompositionBody&) const { return "decomposition"; }
    std::string operator()(const ColoringBody&) const { return "coloring"; }
  };
  return std::visit(Name{}, body);
}

Certificate make_certificate(const Graph& g, CertificateBody body) { return {graph_hash(g), std::move(body)}; }

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- writing

json to_json(const Edge& e) { return json::array({e.u, e.v}); }

json to_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (const Edge& e : es) a.push_back(to_json(e));
  return a;
}

json to_json(const Path& p) { return p.vertices; }

json to_json(const std::vector<Path>& ps) {
  json a = json::array();
  for (const Path& p : ps) a.push_back(to_json(p));
  return a;
}

json to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", to_json(g.edges())}}; }

json to_json(const Subgraph& s) { return {{"vertices", s.vertices}, {"edges", to_json(s.edges)}}; }

json to_json(const TwoColoring& c) {
  json o = json::object();
  for (auto [v, col] : c) o[std::to_string(v)] = col;
  return o;
}

json to_json(const SubdivisionEmbedding& e) {
  return {{"s", e.pattern.s},
          {"t", e.pattern.t},
          {"branch", e.branch},
          {"linking", to_json(e.linking)},
          {"origin", e.origin}};
}

json to_json(const FamilyClass& f) {
  switch (f.kind) {
    case FamilyClass::Kind::BoundedDegree:
      return {{"kind", "bounded-degree"}, {"bound", f.bound}};
    case FamilyClass::Kind::BoundedComponent:
      return {{"kind", "bounded-component"}, {"bound", f.bound}};
    case FamilyClass::Kind::MaxOf: {
      json m = json::array();
      for (const FamilyClass& x : f.members) m.push_back(to_json(x));
      return {{"kind", "max-of"}, {"members", m}};
    }
  }
  return {};
}

struct Writer {
  json operator()(const OddMinorBody& b) const {
    json trees = json::array();
    for (const Subgraph& t : b.model.trees) trees.push_back(to_json(t));
    json conns = json::array();
    for (const Connector& c : b.model.connectors) conns.push_back({{"h_edge", to_json(c.h_edge)}, {"path", to_json(c.path)}});
    return {{"pattern", to_json(b.pattern)},
            {"form", b.model.form == ConnectorForm::Edge ? "edge" : "path"},
            {"trees", trees},
            {"alpha", to_json(b.model.alpha)},
            {"connectors", conns}};
  }
  json operator()(const SignedMinorBody& b) const {
    json trees = json::array();
    for (const Subgraph& t : b.model.trees) trees.push_back(to_json(t));
    json cols = json::array();
    for (const TwoColoring& c : b.model.colorings) cols.push_back(to_json(c));
    json wit = json::array();
    for (const auto& [he, ge] : b.model.edge_witness) wit.push_back({{"h_edge", to_json(he)}, {"edge", to_json(ge)}});
    return {{"pattern", to_json(b.pattern)},
            {"sigma", to_json(std::vector<Edge>(b.sigma.begin(), b.sigma.end()))},
            {"trees", trees},
            {"colorings", cols},
            {"witness", wit}};
  }
  json operator()(const SubdivisionBody& b) const {
    return {{"embedding", to_json(b.embedding)}, {"bipartite", b.bipartite}};
  }
  json operator()(const PathSystemBody& b) const {
    json o = {{"ell", b.result.ell}};
    if (b.s) o["s"] = *b.s;
    if (b.embedding) o["embedding"] = to_json(*b.embedding);
    if (b.result.kind == OutcomeKind::Packing) {
      o["paths"] = to_json(b.result.paths);
    } else {
      o["cover"] = b.result.cover;
    }
    return o;
  }
  json operator()(const DecompositionBody& b) const {
    return {{"embedding", to_json(b.embedding)},
            {"max_apex", b.max_apex},
            {"apex", b.decomposition.apex},
            {"block", b.decomposition.block},
            {"retained_branch", b.decomposition.retained_branch}};
  }
  json operator()(const ColoringBody& b) const {
    json colors = json::object();
    for (std::size_t v = 0; v < b.coloring.colors.size(); ++v) colors[std::to_string(v)] = b.coloring.colors[v];
    return {{"palette", b.coloring.palette}, {"colors", colors}, {"family", to_json(b.family)}};
  }
};

// ---- reading

[[noreturn]] void schema_error(const std::string& what) { throw InputError("certificate schema: " + what); }

// Exactly the listed required keys plus any of the optional ones.
const json& object(const json& j, const std::string& where, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(where + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k)) schema_error(where + " lacks \"" + k + "\"");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) schema_error("unknown field \"" + k + "\" in " + where);
  }
  return j;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where + " must be an integer");
  auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) schema_error(where + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array");
  std::vector<int> out;
  for (const json& x : j) out.push_back(integer(x, where));
  return out;
}

Edge edge(const json& j, const std::string& where) {
  auto p = int_list(j, where);
  if (p.size() != 2) schema_error(where + " must be a pair");
  return {p[0], p[1]};
}

std::vector<Edge> edge_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array");
  std::vector<Edge> out;
  for (const json& x : j) out.push_back(edge(x, where));
  return out;
}

std::vector<Path> path_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array");
  std::vector<Path> out;
  for (const json& x : j) out.emplace_back(int_list(x, where));
  return out;
}

std::map<int, int> int_map(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be an object");
  std::map<int, int> out;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int key = 0;
    try {
      key = std::stoi(k, &used);
    } catch (const std::exception&) {
      schema_error(where + " key \"" + k + "\" is not a vertex");
    }
    if (used != k.size() || std::to_string(key) != k) schema_error(where + " key \"" + k + "\" is not a vertex");
    out[key] = integer(v, where);
  }
  return out;
}

Graph graph(const json& j, const std::string& where) {
  object(j, where, {"n", "edges"});
  int n = integer(j["n"], where + ".n");
  if (n < 0) schema_error(where + ".n must be nonnegative");
  auto es = edge_list(j["edges"], where + ".edges");
  return Graph::from_edges(n, es);
}

Subgraph subgraph(const json& j, const std::string& where) {
  object(j, where, {"vertices", "edges"});
  return {int_list(j["vertices"], where + ".vertices"), edge_list(j["edges"], where + ".edges")};
}

SubdivisionEmbedding embedding(const json& j) {
  object(j, "embedding", {"s", "t", "branch", "linking", "origin"});
  SubdivisionEmbedding e;
  e.pattern.s = integer(j["s"], "embedding.s");
  e.pattern.t = integer(j["t"], "embedding.t");
  if (e.pattern.s < 0 || e.pattern.t < 0) schema_error("embedding pattern sizes must be nonnegative");
  e.branch = int_list(j["branch"], "embedding.branch");
  e.linking = path_list(j["linking"], "embedding.linking");
  e.origin = int_list(j["origin"], "embedding.origin");
  return e;
}

FamilyClass family(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) schema_error("family needs a kind");
  const std::string kind = j["kind"];
  if (kind == "bounded-degree" || kind == "bounded-component") {
    object(j, "family", {"kind", "bound"});
    int b = integer(j["bound"], "family.bound");
    return kind == "bounded-degree" ? FamilyClass::bounded_degree(b) : FamilyClass::bounded_component(b);
  }
  if (kind == "max-of") {
    object(j, "family", {"kind", "members"});
    if (!j["members"].is_array()) schema_error("family.members must be an array");
    std::vector<FamilyClass> ms;
    for (const json& m : j["members"]) ms.push_back(family(m));
    return FamilyClass::max_of(std::move(ms));
  }
  schema_error("unknown family kind \"" + kind + "\"");
}

CertificateBody read_body(const std::string& kind, const json& p) {
  if (kind == "odd-minor-model") {
    object(p, "payload", {"pattern", "form", "trees", "alpha", "connectors"});
    OddMinorBody b;
    b.pattern = graph(p["pattern"], "pattern");
    if (p["form"] == "edge") {
      b.model.form = ConnectorForm::Edge;
    } else if (p["form"] == "path") {
      b.model.form = ConnectorForm::Path;
    } else {
      schema_error("form must be \"edge\" or \"path\"");
    }
    if (!p["trees"].is_array()) schema_error("trees must be an array");
    for (const json& t : p["trees"]) b.model.trees.push_back(subgraph(t, "tree"));
    b.model.alpha = int_map(p["alpha"], "alpha");
    if (!p["connectors"].is_array()) schema_error("connectors must be an array");
    for (const json& c : p["connectors"]) {
      object(c, "connector", {"h_edge", "path"});
      b.model.connectors.push_back({edge(c["h_edge"], "connector.h_edge"), Path(int_list(c["path"], "connector.path"))});
    }
    return b;
  }
  if (kind == "signed-minor-model") {
    object(p, "payload", {"pattern", "sigma", "trees", "colorings", "witness"});
    SignedMinorBody b;
    b.pattern = graph(p["pattern"], "pattern");
    for (const Edge& e : edge_list(p["sigma"], "sigma")) b.sigma.insert(e);
    if (!p["trees"].is_array() || !p["colorings"].is_array() || !p["witness"].is_array()) {
      schema_error("trees, colorings and witness must be arrays");
    }
    for (const json& t : p["trees"]) b.model.trees.push_back(subgraph(t, "tree"));
    for (const json& c : p["colorings"]) b.model.colorings.push_back(int_map(c, "coloring"));
    for (const json& w : p["witness"]) {
      object(w, "witness", {"h_edge", "edge"});
      b.model.edge_witness[edge(w["h_edge"], "witness.h_edge")] = edge(w["edge"], "witness.edge");
    }
    return b;
  }
  if (kind == "subdivision") {
    object(p, "payload", {"embedding", "bipartite"});
    if (!p["bipartite"].is_boolean()) schema_error("bipartite must be a boolean");
    return SubdivisionBody{embedding(p["embedding"]), p["bipartite"].get<bool>()};
  }
  if (kind == "packing" || kind == "cover") {
    const bool packing = kind == "packing";
    const char* list = packing ? "paths" : "cover";
    object(p, "payload", {"ell", list}, {"s", "embedding"});
    if (p.contains("s") == p.contains("embedding")) schema_error("exactly one of \"s\" and \"embedding\" is required");
    PathSystemBody b;
    if (p.contains("s")) b.s = int_list(p["s"], "s");
    if (p.contains("embedding")) b.embedding = embedding(p["embedding"]);
    b.result.ell = integer(p["ell"], "ell");
    b.result.kind = packing ? OutcomeKind::Packing : OutcomeKind::Cover;
    if (packing) {
      b.result.paths = path_list(p["paths"], "paths");
    } else {
      b.result.cover = int_list(p["cover"], "cover");
    }
    return b;
  }
  if (kind == "decomposition") {
    object(p, "payload", {"embedding", "max_apex", "apex", "block", "retained_branch"});
    DecompositionBody b;
    b.embedding = embedding(p["embedding"]);
    b.max_apex = integer(p["max_apex"], "max_apex");
    b.decomposition.apex = int_list(p["apex"], "apex");
    b.decomposition.block = int_list(p["block"], "block");
    b.decomposition.retained_branch = int_list(p["retained_branch"], "retained_branch");
    return b;
  }
  if (kind == "coloring") {
    object(p, "payload", {"palette", "colors", "family"});
    ColoringBody b;
    b.coloring.palette = integer(p["palette"], "palette");
    auto colors = int_map(p["colors"], "colors");
    int expect = 0;
    for (auto [v, c] : colors) {
      if (v != expect++) schema_error("colors must cover vertices 0..n-1");
      b.coloring.colors.push_back(c);
    }
    b.family = family(p["family"]);
    return b;
  }
  schema_error("unknown kind \"" + kind + "\"");
}

struct Checker {
  const Graph& g;
  Verdict operator()(const OddMinorBody& b) const { return verify_odd_minor_model(g, b.pattern, b.model); }
  Verdict operator()(const SignedMinorBody& b) const {
    for (const Edge& e : b.sigma) {
      if (!b.pattern.contains(e.u) || !b.pattern.contains(e.v) || !b.pattern.has_edge(e.u, e.v)) {
        return Verdict::fail("bad-shape");
      }
    }
    return verify_signed_minor_model(g, b.pattern, b.sigma, b.model);
  }
  Verdict operator()(const SubdivisionBody& b) const { return verify_subdivision(g, b.embedding, b.bipartite); }
  Verdict operator()(const PathSystemBody& b) const {
    if (b.s) {
      for (Vertex v : *b.s) {
        if (!g.contains(v)) return Verdict::fail("bad-shape");
      }
      if (make_vertex_set(*b.s) != *b.s) return Verdict::fail("bad-shape");
      return verify_odd_s_result(g, *b.s, b.result);
    }
    if (Verdict v = verify_subdivision(g, *b.embedding, true); !v) return v;
    return verify_parity_breaking_result(g, *b.embedding, b.result);
  }
  Verdict operator()(const DecompositionBody& b) const {
    if (Verdict v = verify_subdivision(g, b.embedding, true); !v) return v;
    return verify_decomposition(g, b.embedding, b.decomposition, b.max_apex);
  }
  Verdict operator()(const ColoringBody& b) const { return verify_coloring(g, b.coloring, b.family); }
};

}  // namespace

std::string serialize_certificate(const Certificate& c) {
  json j = {{"schema", std::string(kSchema)},
            {"kind", c.kind()},
            {"graph_hash", hex64(c.graph_hash)},
            {"payload", std::visit(Writer{}, c.body)}};
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  object(j, "certificate", {"schema", "kind", "graph_hash", "payload"});
  if (j["schema"] != kSchema) schema_error("schema must be \"" + std::string(kSchema) + "\"");
  if (!j["kind"].is_string()) schema_error("kind must be a string");
  if (!j["graph_hash"].is_string()) schema_error("graph_hash must be a string");
  const std::string hash = j["graph_hash"];
  if (hash.size() != 16 || hash.find_first_not_of("0123456789abcdef") != std::string::npos) {
    schema_error("graph_hash must be 16 lowercase hex digits");
  }
  Certificate c;
  c.graph_hash = std::stoull(hash, nullptr, 16);
  try {
    c.body = read_body(j["kind"].get<std::string>(), j["payload"]);
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
  return c;
}

Verdict verify_certificate(const Graph& g, const Certificate& c) {
  if (graph_hash(g) != c.graph_hash) {
    throw InputError("graph hash mismatch: certificate " + hex64(c.graph_hash) + ", graph " + hex64(graph_hash(g)));
  }
  return std::visit(Checker{g}, c.body);
}

}  // namespace oddminor
