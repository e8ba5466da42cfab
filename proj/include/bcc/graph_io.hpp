#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bcc/graph.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc {

/// Graph plus the comment lines ("c ..." with the leading "c " removed)
/// that preceded it on disk.
struct GraphFile {
  Graph graph;
  std::vector<std::string> comments;
};

/// Edge-list format:
///   c free text        (any number, anywhere before or between edges)
///   p <n> <m>          (exactly once, before the first edge)
///   <u> <v>            (0-based, m lines)
/// Throws ParseError with the offending line number.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

/// Comments first, then the header, then the edges in lexicographic order.
/// read_graph(write_graph(x)) == x and the text round-trips byte for byte.
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments = {});
std::string graph_to_string(const Graph& g,
                            const std::vector<std::string>& comments = {});

/// Tree format: "t <n>" header then n-1 lines "u v"; "c" comments allowed.
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);

}  // namespace bcc
