#include "mist/io.hpp"

#include <sstream>
#include <vector>

namespace mist {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::BadHeader: return "BadHeader";
    case ParseErrorKind::BadEdgeLine: return "BadEdgeLine";
    case ParseErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ParseErrorKind::SelfLoop: return "SelfLoop";
    case ParseErrorKind::IdOutOfRange: return "IdOutOfRange";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + what),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool to_int(const std::string& s, long long& value) {
  if (s.empty() || s.size() > 12) return false;
  std::size_t used = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == s.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  Graph g;
  bool have_header = false;
  long long declared_edges = 0;
  int header_line = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto t = tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      long long n = 0;
      if (have_header || t.size() != 4 || t[1] != "mist" || !to_int(t[2], n) || !to_int(t[3], declared_edges) ||
          n < 1 || declared_edges < 0)
        throw ParseError(ParseErrorKind::BadHeader, line_no, "expected 'p mist <n> <m>'");
      g = Graph(static_cast<int>(n));
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (t[0] != "e") throw ParseError(ParseErrorKind::BadEdgeLine, line_no, "unknown line type '" + t[0] + "'");
    if (!have_header) throw ParseError(ParseErrorKind::BadHeader, line_no, "edge before header");
    long long u = 0, v = 0;
    if (t.size() != 3 || !to_int(t[1], u) || !to_int(t[2], v))
      throw ParseError(ParseErrorKind::BadEdgeLine, line_no, "expected 'e <u> <v>'");
    if (u < 1 || v < 1 || u > g.id_bound() || v > g.id_bound())
      throw ParseError(ParseErrorKind::IdOutOfRange, line_no, "vertex id outside 1.." + std::to_string(g.id_bound()));
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no, "self-loop at " + std::to_string(u));
    if (!g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
      throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " repeated");
  }
  if (!have_header) throw ParseError(ParseErrorKind::BadHeader, line_no, "missing header");
  if (g.edge_count() != declared_edges)
    throw ParseError(ParseErrorKind::BadHeader, header_line,
                     "header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(g.edge_count()));
  return g;
}

std::string emit_graph(const Graph& g, std::string_view comment) {
  std::vector<int> label(g.id_bound(), 0);
  int next = 0;
  for (Vertex v : g.vertices()) label[v] = ++next;
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p mist " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << label[e.u] << ' ' << label[e.v] << '\n';
  return out.str();
}

}  // namespace mist
