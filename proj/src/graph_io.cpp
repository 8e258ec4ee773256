#include "oddminor/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "oddminor/errors.hpp"

namespace oddminor {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxShort = 62;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(trim(text.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long to_int(std::string_view token, std::string_view what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError(std::string(what) + ": expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

void checked_add(Graph& g, long long u, long long v, std::string_view where) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InputError(std::string(where) + ": vertex index out of range");
  }
  g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

Graph parse_graph6(std::string_view text) {
  std::string_view body = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (body.substr(0, header.size()) == header) body.remove_prefix(header.size());
  if (body.empty()) throw InputError("graph6: empty input");
  if (body.find('\n') != std::string_view::npos) throw InputError("graph6: expected a single graph");
  for (char c : body) {
    if (c < kGraph6Bias || c > 126) throw InputError("graph6: invalid character");
  }
  if (body.front() == 126) throw InputError("graph6: long form (n > 62) is not supported");
  const int n = body.front() - kGraph6Bias;
  body.remove_prefix(1);

  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(body.size()) != need) {
    throw InputError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(body.size()));
  }
  Graph g(n);
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = body[static_cast<std::size_t>(k / 6)] - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (; k < need * 6; ++k) {
    int byte = body[static_cast<std::size_t>(k / 6)] - kGraph6Bias;
    if ((byte >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return g;
}

Graph parse_dimacs(std::string_view text) {
  std::optional<Graph> g;
  long long declared_m = 0;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty() || line.front() == 'c') continue;
    auto tok = split_ws(line);
    std::string where = "dimacs line " + std::to_string(line_no);
    if (tok[0] == "p") {
      if (g) throw InputError(where + ": duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw InputError(where + ": malformed header, expected 'p edge n m'");
      }
      long long n = to_int(tok[2], where);
      declared_m = to_int(tok[3], where);
      if (n < 0 || declared_m < 0) throw InputError(where + ": negative size in header");
      g.emplace(static_cast<int>(n));
    } else if (tok[0] == "e") {
      if (!g) throw InputError(where + ": edge before problem line");
      if (tok.size() != 3) throw InputError(where + ": malformed edge line");
      checked_add(*g, to_int(tok[1], where) - 1, to_int(tok[2], where) - 1, where);
    } else {
      throw InputError(where + ": unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!g) throw InputError("dimacs: missing 'p edge n m' header");
  if (g->edge_count() != declared_m) {
    throw InputError("dimacs: header declares " + std::to_string(declared_m) + " edges, found " +
                     std::to_string(g->edge_count()));
  }
  return std::move(*g);
}

Graph parse_edgelist(std::string_view text) {
  std::optional<Graph> g;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tok = split_ws(line);
    std::string where = "edgelist line " + std::to_string(line_no);
    if (!g) {
      if (tok.size() != 2 || tok[0] != "n") throw InputError(where + ": expected 'n <count>' header");
      long long n = to_int(tok[1], where);
      if (n < 0) throw InputError(where + ": negative vertex count");
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (tok.size() != 2) throw InputError(where + ": expected 'u v'");
    checked_add(*g, to_int(tok[0], where), to_int(tok[1], where), where);
  }
  if (!g) throw InputError("edgelist: missing 'n <count>' header");
  return std::move(*g);
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxShort) throw InputError("graph6: long form (n > 62) is not supported");
  std::string out(1, static_cast<char>(n + kGraph6Bias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  out.push_back('\n');
  return out;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::EdgeList: return "edgelist";
  }
  return "?";
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return parse_graph6(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::EdgeList: return parse_edgelist(text);
  }
  throw InputError("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::Graph6:
      return write_graph6(g);
    case GraphFormat::Dimacs:
      out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
      for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
      return out.str();
    case GraphFormat::EdgeList:
      out << "n " << g.vertex_count() << '\n';
      for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
      return out.str();
  }
  return {};
}

}  // namespace oddminor
