#include <fstream>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!g) {
      std::string kind;
      long long count = -1;
      if (first != "n" || !(fields >> count >> kind))
        throw ParseError(lineno, "expected header 'n <count> <directed|undirected>'");
      if (count < 1 || count > 10'000'000) throw ParseError(lineno, "vertex count must be positive");
      if (kind != "directed" && kind != "undirected")
        throw ParseError(lineno, "graph kind must be 'directed' or 'undirected', got '" + kind + "'");
      std::string extra;
      if (fields >> extra) throw ParseError(lineno, "trailing text after header");
      g.emplace(static_cast<int>(count), kind == "directed");
      continue;
    }
    long long u = 0, v = 0;
    std::istringstream edge(line);
    std::string extra;
    if (!(edge >> u >> v) || (edge >> extra))
      throw ParseError(lineno, "expected an edge 'u v'");
    if (u < 0 || v < 0 || u >= g->size() || v >= g->size())
      throw ParseError(lineno, "vertex out of range 0.." + std::to_string(g->size() - 1));
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (!g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(lineno, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
  }
  if (!g) throw ParseError(lineno, "missing header");
  return std::move(*g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.size() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream s;
  write_graph(s, g);
  return s.str();
}

} // namespace pursuit
