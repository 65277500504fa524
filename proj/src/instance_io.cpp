#include "fvs/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fvs {

Instance parse_instance(std::istream& in) {
  Instance inst;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  long long edges_seen = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;  // blank line
    if (tok == "c") continue;
    if (tok == "p") {
      if (have_header) throw parse_error(lineno, "duplicate header");
      std::string problem;
      long long n = -1, m = -1;
      if (!(ss >> problem >> n >> m) || problem != "fvs")
        throw parse_error(lineno, "malformed header, expected 'p fvs <n> <m>'");
      std::string trail;
      if (ss >> trail) throw parse_error(lineno, "trailing tokens after header");
      if (n < 0 || m < 0) throw parse_error(lineno, "negative size in header");
      if (n > 100'000'000) throw parse_error(lineno, "vertex count too large");
      inst.n = static_cast<int>(n);
      inst.m = m;
      for (long long i = 0; i < n; ++i) inst.graph.add_vertex();
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lineno, "edge line before header");
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw parse_error(lineno, "malformed edge line");
    std::string trail;
    if (es >> trail) throw parse_error(lineno, "trailing tokens after edge");
    if (edges_seen >= inst.m) throw parse_error(lineno, "more edge lines than the header announced");
    if (u < 1 || u > inst.n || v < 1 || v > inst.n)
      throw parse_error(lineno, "edge endpoint out of range");
    inst.graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    ++edges_seen;
  }
  if (!have_header) throw parse_error(lineno, "missing header");
  if (edges_seen != inst.m)
    throw parse_error(lineno, "fewer edge lines than the header announced");
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const MultiGraph& g,
                    const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "c " << c << "\n";
  const auto verts = g.vertices();
  std::vector<int> label(g.vertex_id_bound(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = static_cast<int>(i) + 1;
  out << "p fvs " << verts.size() << " " << g.num_edges() << "\n";
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    const int a = std::min(label[u], label[v]);
    const int b = std::max(label[u], label[v]);
    out << a << " " << b << "\n";
  }
}

std::string instance_to_string(const MultiGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_instance(out, g, comments);
  return out.str();
}

void save_instance(const std::string& path, const MultiGraph& g,
                   const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw parse_error(0, "cannot open '" + path + "' for writing");
  write_instance(out, g, comments);
  out.flush();
  if (!out) throw parse_error(0, "write to '" + path + "' failed");
}

}  // namespace fvs
