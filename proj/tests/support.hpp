#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "bcc/biclique.hpp"
#include "bcc/chordal.hpp"
#include "bcc/gen.hpp"
#include "bcc/graph.hpp"

namespace bcc::test {

inline Graph make_graph(int n, std::vector<Edge> edges) {
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

inline Graph cycle4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return Graph(n, e);
}

inline Graph random_cochordal(int n, double density, std::uint64_t seed) {
  return complement(gen_random_chordal(n, density, seed));
}

/// Clique indices split as in the containment proof: I holds every clique
/// meeting L, J the rest.
inline std::pair<std::vector<int>, std::vector<int>> split_for(
    const std::vector<VertexSet>& cliques, const VertexSet& left) {
  std::vector<int> I, J;
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
    (sets::disjoint(cliques[i], left) ? J : I).push_back(i);
  return {I, J};
}

/// Random connected set of nodes of a clique tree, grown from a random node.
inline std::vector<int> random_subtree(const CliqueTree& t,
                                       std::mt19937_64& rng) {
  const int d = t.node_count();
  auto adj = t.adjacency();
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::uniform_int_distribution<int> size_pick(1, d);
  const int target = size_pick(rng);
  std::vector<int> nodes{pick(rng)};
  std::vector<char> in(d, 0);
  in[nodes[0]] = 1;
  while (static_cast<int>(nodes.size()) < target) {
    std::vector<int> frontier;
    for (int x : nodes)
      for (int id : adj[x]) {
        int y = t.edges[id].a == x ? t.edges[id].b : t.edges[id].a;
        if (!in[y]) frontier.push_back(y);
      }
    if (frontier.empty()) break;
    int y = frontier[std::uniform_int_distribution<int>(
        0, static_cast<int>(frontier.size()) - 1)(rng)];
    in[y] = 1;
    nodes.push_back(y);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

/// The subtree on `nodes`, relabelled onto induced_subgraph(g, union).
inline std::pair<Graph, CliqueTree> restrict_to_subtree(
    const Graph& g, const CliqueTree& t, const std::vector<int>& nodes) {
  VertexSet vertices;
  for (int x : nodes) vertices = sets::unite(vertices, t.cliques[x]);
  InducedSubgraph sub = induced_subgraph(g, vertices);
  std::map<Vertex, Vertex> relabel;
  for (std::size_t i = 0; i < sub.original.size(); ++i)
    relabel[sub.original[i]] = static_cast<Vertex>(i);
  std::map<int, int> node_index;
  CliqueTree out;
  for (int x : nodes) {
    node_index[x] = out.node_count();
    VertexSet k;
    for (Vertex v : t.cliques[x]) k.push_back(relabel.at(v));
    out.cliques.push_back(sets::normalized(k));
  }
  for (const auto& e : t.edges)
    if (node_index.count(e.a) && node_index.count(e.b)) {
      VertexSet mid;
      for (Vertex v : e.middle) mid.push_back(relabel.at(v));
      out.edges.push_back({node_index[e.a], node_index[e.b],
                           sets::normalized(mid)});
    }
  return {sub.graph, out};
}

/// All bicliques of g by a double subset scan, for cross-checking.
inline BicliqueList naive_bicliques(const Graph& g) {
  const int n = g.order();
  BicliqueList out;
  for (unsigned l = 1; l < (1u << n); ++l)
    for (unsigned r = 1; r < (1u << n); ++r) {
      if (l & r) continue;
      if ((l & -l) > (r & -r)) continue;
      VertexSet L, R;
      for (int v = 0; v < n; ++v) {
        if (l >> v & 1) L.push_back(v);
        if (r >> v & 1) R.push_back(v);
      }
      if (is_biclique_subgraph(g, L, R)) out.push_back({L, R});
    }
  return out;
}

}  // namespace bcc::test
