#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace bcc {

using Vertex = int;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable after construction. Neighbour lists are kept sorted so that
/// set algebra on neighbourhoods is linear and deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  /// Throws InputError on self-loops or endpoints outside [0, n).
  /// Repeated edges (in either orientation) collapse to one.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;

  const VertexSet& neighborhood(Vertex v) const;
  int degree(Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

/// Position of each edge in Graph::edges(), looked up in O(log deg).
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);

  /// -1 when (u, v) is not an edge.
  long operator()(Vertex u, Vertex v) const;

 private:
  const Graph* g_;
  std::vector<long> offset_;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the host graph relabelled to i.
  std::vector<Vertex> original;
};

/// `subset` must be sorted and duplicate free.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

/// True iff both sides are nonempty, disjoint, and fully joined in `g`.
/// Vertices outside the graph yield false.
bool is_biclique_subgraph(const Graph& g, const VertexSet& left,
                          const VertexSet& right);

/// Connected-component id per vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

bool is_clique(const Graph& g, const VertexSet& s);

namespace sets {

VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet subtract(const VertexSet& a, const VertexSet& b);
bool includes(const VertexSet& super, const VertexSet& sub);
bool disjoint(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);
VertexSet normalized(VertexSet s);

}  // namespace sets

}  // namespace bcc
