#include "bcc/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bcc {

Ordering Ordering::from_order(std::vector<Vertex> order) {
  Ordering out;
  out.position.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= static_cast<Vertex>(order.size()) ||
        out.position[v] != -1)
      throw InputError("ordering is not a permutation");
    out.position[v] = static_cast<int>(i);
  }
  out.order = std::move(order);
  return out;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
  std::vector<std::vector<int>> adj(cliques.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].a].push_back(static_cast<int>(e));
    adj[edges[e].b].push_back(static_cast<int>(e));
  }
  return adj;
}

NotChordalError::NotChordalError(int position, Vertex vertex)
    : DomainError("graph is not chordal: vertex " + std::to_string(vertex) +
                  " at elimination position " + std::to_string(position) +
                  " has non-adjacent later neighbours"),
      position_(position),
      vertex_(vertex) {}

namespace {

// One pass of MCS shared by mcs_order and clique_tree. Calls
// visit(v, position, labelled_neighbours) in visiting order.
template <class Visit>
void run_mcs(const Graph& g, Visit&& visit) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> labelled(n, 0);
  for (int pos = n - 1; pos >= 0; --pos) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!labelled[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visit(best, pos, weight[best]);
    labelled[best] = 1;
    for (Vertex w : g.neighborhood(best))
      if (!labelled[w]) ++weight[w];
  }
}

}  // namespace

Ordering mcs_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  run_mcs(g, [&](Vertex v, int pos, int) { order[pos] = v; });
  return Ordering::from_order(std::move(order));
}

std::optional<int> first_elimination_failure(const Graph& g,
                                             const Ordering& ord) {
  const int n = g.order();
  if (ord.size() != n || static_cast<int>(ord.position.size()) != n)
    throw InputError("ordering size does not match graph");
  for (int i = 0; i < n; ++i)
    if (ord.order[i] < 0 || ord.order[i] >= n ||
        ord.position[ord.order[i]] != i)
      throw InputError("ordering and its inverse disagree");

  // Each vertex's later neighbours minus its parent (the earliest later
  // neighbour) must be adjacent to the parent.
  for (int i = 0; i < n; ++i) {
    Vertex v = ord.order[i];
    Vertex parent = -1;
    for (Vertex w : g.neighborhood(v))
      if (ord.position[w] > i &&
          (parent == -1 || ord.position[w] < ord.position[parent]))
        parent = w;
    if (parent == -1) continue;
    for (Vertex w : g.neighborhood(v))
      if (ord.position[w] > i && w != parent && !g.adjacent(parent, w))
        return i;
  }
  return std::nullopt;
}

bool is_perfect_elimination_order(const Graph& g, const Ordering& ord) {
  return !first_elimination_failure(g, ord).has_value();
}

bool is_chordal(const Graph& g) {
  return is_perfect_elimination_order(g, mcs_order(g));
}

CliqueTree clique_tree(const Graph& g) {
  const int n = g.order();
  Ordering ord = mcs_order(g);
  if (auto bad = first_elimination_failure(g, ord))
    throw NotChordalError(*bad, ord.order[*bad]);

  CliqueTree tree;
  std::vector<int> clique_of(n, -1);
  std::vector<int> alpha(n, -1);
  std::vector<char> labelled(n, 0);
  VertexSet open;  // the clique currently being grown
  int prev_card = 0;
  bool have_open = false;

  run_mcs(g, [&](Vertex v, int pos, int new_card) {
    alpha[v] = pos;
    if (new_card <= prev_card) {
      // Close the open clique; on the very first vertex there is none.
      if (have_open) tree.cliques.push_back(sets::normalized(open));
      open.clear();
      for (Vertex w : g.neighborhood(v))
        if (labelled[w]) open.push_back(w);
      const int s = static_cast<int>(tree.cliques.size());
      if (new_card != 0) {
        Vertex u = *std::min_element(
            open.begin(), open.end(),
            [&](Vertex x, Vertex y) { return alpha[x] < alpha[y]; });
        tree.edges.push_back({clique_of[u], s, {}});
      }
      have_open = true;
    }
    clique_of[v] = static_cast<int>(tree.cliques.size());
    open.push_back(v);
    labelled[v] = 1;
    prev_card = new_card;
  });
  if (have_open) tree.cliques.push_back(sets::normalized(open));

  for (auto& e : tree.edges)
    e.middle = sets::intersect(tree.cliques[e.a], tree.cliques[e.b]);
  return tree;
}

bool verify_clique_tree(const Graph& g, const CliqueTree& t) {
  const int n = g.order();
  const int k = t.node_count();
  if (n == 0) return k == 0 && t.edges.empty();

  // Nodes: nonempty maximal cliques of g, none contained in another.
  for (const auto& c : t.cliques) {
    if (c.empty() || sets::normalized(c) != c) return false;
    if (c.front() < 0 || c.back() >= n) return false;
    if (!is_clique(g, c)) return false;
    for (Vertex x = 0; x < n; ++x) {
      if (sets::contains(c, x)) continue;
      const auto& nb = g.neighborhood(x);
      if (sets::includes(nb, c)) return false;  // c extends by x
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && sets::includes(t.cliques[j], t.cliques[i])) return false;

  // Edges: in range, middle = intersection, and the whole thing a forest
  // with exactly one tree per connected component of g.
  int components = 0;
  connected_components(g, &components);
  if (static_cast<int>(t.edges.size()) != k - components) return false;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    if (e.a < 0 || e.a >= k || e.b < 0 || e.b >= k || e.a == e.b)
      return false;
    if (e.middle != sets::intersect(t.cliques[e.a], t.cliques[e.b]))
      return false;
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }

  // Clique-intersection: the nodes holding any vertex induce a subtree,
  // i.e. c nodes joined by exactly c - 1 tree edges. Every vertex must
  // appear somewhere and every edge of g must sit inside some node.
  std::vector<int> node_hits(n, 0), edge_hits(n, 0);
  for (const auto& c : t.cliques)
    for (Vertex v : c) ++node_hits[v];
  for (const auto& e : t.edges)
    for (Vertex v : e.middle) ++edge_hits[v];
  for (Vertex v = 0; v < n; ++v)
    if (node_hits[v] == 0 || edge_hits[v] != node_hits[v] - 1) return false;
  for (const auto& e : g.edges()) {
    bool covered = false;
    for (const auto& c : t.cliques)
      if (sets::contains(c, e.u) && sets::contains(c, e.v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

MembershipCounts membership_counts(int n,
                                   const std::vector<VertexSet>& cliques) {
  MembershipCounts out;
  out.counts.assign(n, 0);
  for (const auto& c : cliques)
    for (Vertex v : c) ++out.counts[v];
  out.all_at_most_two = std::all_of(out.counts.begin(), out.counts.end(),
                                    [](int c) { return c <= 2; });
  return out;
}

MembershipCounts mis_membership_counts(const Graph& g) {
  return membership_counts(g.order(), clique_tree(complement(g)).cliques);
}

}  // namespace bcc
