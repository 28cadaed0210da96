#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nutgraph/graph.hpp"

namespace nut {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: size header, then the upper triangle in column order packed into
// 6-bit groups offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// sparse6 (input only; a leading ':' selects it).
Graph from_sparse6(std::string_view line);

// Dispatches on the first character; strips an optional >>graph6<< or
// >>sparse6<< header and trailing whitespace.
Graph decode_graph_line(std::string_view line);

// Reads every non-empty line of a graph6/sparse6 stream.
std::vector<Graph> read_graph_lines(std::istream& in);

// Plain edge list: the vertex count, then one "u v" pair (0-based) per line.
// '#' starts a comment.
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);

}  // namespace nut
