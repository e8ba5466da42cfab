#include "bcc/serialize.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bcc/error.hpp"

namespace bcc {

namespace {

void write_set(std::ostream& out, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
}

VertexSet parse_set(const std::string& text, std::size_t line) {
  VertexSet out;
  std::istringstream ss(text);
  for (std::string tok; ss >> tok;) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError(line, "bad vertex '" + tok + "'");
    out.push_back(v);
  }
  auto norm = sets::normalized(out);
  if (norm.size() != out.size()) throw ParseError(line, "repeated vertex");
  return norm;
}

}  // namespace

void write_clique_tree(std::ostream& out, const CliqueTree& t) {
  for (int i = 0; i < t.node_count(); ++i) {
    out << 'K' << i << ':';
    for (Vertex v : t.cliques[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& e : t.edges) {
    out << "T: " << e.a << ' ' << e.b << " | mid:";
    for (Vertex v : e.middle) out << ' ' << v;
    out << '\n';
  }
}

void write_ranking(std::ostream& out, const Tree& t, const EdgeRanking& r) {
  for (int id = 0; id < t.edge_count(); ++id)
    out << t.edge(id).u << ' ' << t.edge(id).v << " : " << r.ranks.at(id)
        << '\n';
}

void write_cover(std::ostream& out, const BicliqueList& cover,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  for (const auto& b : cover) {
    out << "L: ";
    write_set(out, b.left);
    out << " | R: ";
    write_set(out, b.right);
    out << '\n';
  }
}

BicliqueList read_cover(std::istream& in) {
  BicliqueList out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' &&
        (first + 1 == line.size() || line[first + 1] == ' '))
      continue;
    auto bar = line.find('|');
    if (line.compare(first, 2, "L:") != 0 || bar == std::string::npos)
      throw ParseError(number, "expected 'L: ... | R: ...'");
    auto r = line.find("R:", bar);
    if (r == std::string::npos) throw ParseError(number, "missing 'R:'");
    Biclique b{parse_set(line.substr(first + 2, bar - first - 2), number),
               parse_set(line.substr(r + 2), number)};
    if (b.left.empty() || b.right.empty())
      throw ParseError(number, "empty biclique side");
    out.push_back(std::move(b));
  }
  return out;
}

BicliqueList read_cover_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_cover(in);
}

nlohmann::json to_json(const Biclique& b) {
  return {{"L", b.left}, {"R", b.right}};
}

nlohmann::json to_json(const BicliqueList& cover) {
  auto arr = nlohmann::json::array();
  for (const auto& b : cover) arr.push_back(to_json(b));
  return arr;
}

nlohmann::json to_json(const CliqueTree& t) {
  auto edges = nlohmann::json::array();
  for (const auto& e : t.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"mid", e.middle}});
  return {{"cliques", t.cliques}, {"edges", edges}};
}

BicliqueList cover_from_json(const nlohmann::json& j) {
  BicliqueList out;
  try {
    for (const auto& item : j)
      out.push_back({sets::normalized(item.at("L").get<VertexSet>()),
                     sets::normalized(item.at("R").get<VertexSet>())});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("cover JSON: ") + e.what());
  }
  return out;
}

}  // namespace bcc
