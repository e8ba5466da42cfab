#include "bcc/graph.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "bcc/error.hpp"

namespace bcc {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") outside [0, " +
                       std::to_string(n) + ")");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(order()) + ")");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const VertexSet& Graph::neighborhood(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighborhood(v).size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

EdgeIndex::EdgeIndex(const Graph& g) : g_(&g), offset_(g.order() + 1, 0) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighborhood(u);
    offset_[u + 1] =
        offset_[u] + (nb.end() - std::upper_bound(nb.begin(), nb.end(), u));
  }
}

long EdgeIndex::operator()(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= g_->order() || u == v) return -1;
  const auto& nb = g_->neighborhood(u);
  auto first = std::upper_bound(nb.begin(), nb.end(), u);
  auto it = std::lower_bound(first, nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return offset_[u] + (it - first);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const auto& nb = g.neighborhood(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      it = std::lower_bound(it, nb.end(), v);
      if (it == nb.end() || *it != v) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex v = subset[i];
    if (v < 0 || v >= g.order())
      throw InputError("vertex " + std::to_string(v) + " not in graph");
    if (index[v] != -1) throw InputError("duplicate vertex in subset");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : subset)
    for (Vertex w : g.neighborhood(v))
      if (index[w] > index[v]) edges.push_back({index[v], index[w]});
  InducedSubgraph out{Graph(static_cast<int>(subset.size()), edges), subset};
  return out;
}

bool is_biclique_subgraph(const Graph& g, const VertexSet& left,
                          const VertexSet& right) {
  if (left.empty() || right.empty()) return false;
  auto in_range = [&](Vertex v) { return v >= 0 && v < g.order(); };
  if (!std::all_of(left.begin(), left.end(), in_range) ||
      !std::all_of(right.begin(), right.end(), in_range))
    return false;
  for (Vertex u : left) {
    const auto& nb = g.neighborhood(u);
    for (Vertex v : right)
      if (!std::binary_search(nb.begin(), nb.end(), v)) return false;
  }
  // Full join plus no self-loops already forces disjointness.
  return true;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighborhood(v))
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace sets {

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet subtract(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool includes(const VertexSet& super, const VertexSet& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace sets

}  // namespace bcc
