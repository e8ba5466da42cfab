#include "bcc/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "bcc/error.hpp"

namespace bcc {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long to_number(const std::string& tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

bool is_comment(const std::vector<std::string>& toks) {
  return !toks.empty() && toks[0] == "c";
}

std::string comment_text(const std::string& line) {
  auto pos = line.find('c');
  std::string rest = line.substr(pos + 1);
  if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
  return rest;
}

// Shared edge-line reader for both formats.
struct EdgeLines {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
};

Edge parse_edge(const std::vector<std::string>& toks, std::size_t line,
                long n) {
  if (toks.size() != 2)
    throw ParseError(line, "expected two vertex indices");
  long u = to_number(toks[0], line);
  long v = to_number(toks[1], line);
  for (long x : {u, v})
    if (x < 0 || x >= n)
      throw ParseError(line, "vertex " + std::to_string(x) +
                                 " outside [0, " + std::to_string(n) + ")");
  if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
  return {static_cast<Vertex>(std::min(u, v)),
          static_cast<Vertex>(std::max(u, v))};
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  GraphFile out;
  std::string line;
  std::size_t number = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split(line);
    if (toks.empty()) continue;
    if (is_comment(toks)) {
      out.comments.push_back(comment_text(line));
      continue;
    }
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(number, "second 'p' header");
      if (toks.size() != 3) throw ParseError(number, "header must be 'p <n> <m>'");
      n = to_number(toks[1], number);
      m = to_number(toks[2], number);
      if (n < 0 || m < 0) throw ParseError(number, "negative count in header");
      continue;
    }
    if (n < 0) throw ParseError(number, "edge before the 'p <n> <m>' header");
    Edge e = parse_edge(toks, number, n);
    if (!seen.insert(e).second)
      throw ParseError(number, "duplicate edge " + std::to_string(e.u) + " " +
                                   std::to_string(e.v));
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(number + 1, "missing 'p <n> <m>' header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(number + 1, "header declares " + std::to_string(m) +
                                     " edges, found " +
                                     std::to_string(edges.size()));
  out.graph = Graph(static_cast<int>(n), edges);
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << (c.empty() ? "c" : "c " + c) << '\n';
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g,
                            const std::vector<std::string>& comments) {
  std::ostringstream ss;
  write_graph(ss, g, comments);
  return ss.str();
}

Tree read_tree(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++number;
    auto toks = split(line);
    if (toks.empty() || is_comment(toks)) continue;
    if (toks[0] == "t") {
      if (n >= 0) throw ParseError(number, "second 't' header");
      if (toks.size() != 2) throw ParseError(number, "header must be 't <n>'");
      n = to_number(toks[1], number);
      if (n < 1) throw ParseError(number, "a tree needs at least one node");
      continue;
    }
    if (n < 0) throw ParseError(number, "edge before the 't <n>' header");
    edges.push_back(parse_edge(toks, number, n));
  }
  if (n < 0) throw ParseError(number + 1, "missing 't <n>' header");
  try {
    return Tree(static_cast<int>(n), std::move(edges));
  } catch (const InputError& e) {
    throw ParseError(number + 1, e.what());
  }
}

Tree read_tree_file(const std::string& path) {
  auto in = open(path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& t) {
  out << "t " << t.node_count() << '\n';
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

}  // namespace bcc
