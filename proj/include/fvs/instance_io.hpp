#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvs/multigraph.hpp"

namespace fvs {

// Line-oriented instance format:
//   c <anything>          comments, anywhere
//   p fvs <n> <m>         header, exactly once, before the edges
//   <u> <v>               exactly m edge lines, endpoints in 1..n;
//                         duplicates are parallel edges, u = v a self-loop
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct Instance {
  MultiGraph graph;  // file vertex i (1-based) is VertexId i-1
  int n = 0;
  long long m = 0;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);  // parse_error (line 0) on I/O failure

// Emits the graph in the same format, compacting alive vertices to 1..n in
// ascending id order and normalizing each edge line to "min max". Comments go
// first, one "c ..." line each.
void write_instance(std::ostream& out, const MultiGraph& g,
                    const std::vector<std::string>& comments = {});
std::string instance_to_string(const MultiGraph& g,
                               const std::vector<std::string>& comments = {});
void save_instance(const std::string& path, const MultiGraph& g,
                   const std::vector<std::string>& comments = {});

}  // namespace fvs
