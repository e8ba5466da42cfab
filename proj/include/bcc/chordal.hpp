#pragma once

#include <optional>
#include <vector>

#include "bcc/error.hpp"
#include "bcc/graph.hpp"

namespace bcc {

/// Vertex ordering. Positions are 0-based: order[i] is the vertex at
/// position i and position[v] its inverse.
struct Ordering {
  std::vector<Vertex> order;
  std::vector<int> position;

  static Ordering from_order(std::vector<Vertex> order);
  int size() const { return static_cast<int>(order.size()); }
};

struct CliqueTreeEdge {
  int a = 0;
  int b = 0;
  VertexSet middle;
};

/// Maximal cliques of a chordal graph joined by tree (or forest) edges.
struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<CliqueTreeEdge> edges;

  int node_count() const { return static_cast<int>(cliques.size()); }
  std::vector<std::vector<int>> adjacency() const;  // edge ids per node
};

/// Raised for non-chordal input. `position` is the first place where the
/// MCS ordering fails the perfect-elimination test, and `vertex` the vertex
/// at that place.
class NotChordalError : public DomainError {
 public:
  NotChordalError(int position, Vertex vertex);
  int position() const { return position_; }
  Vertex vertex() const { return vertex_; }

 private:
  int position_;
  Vertex vertex_;
};

/// Maximum cardinality search. The vertex visited first gets the last
/// position; ties go to the smallest vertex index.
Ordering mcs_order(const Graph& g);

/// First position whose later neighbours do not form a clique.
std::optional<int> first_elimination_failure(const Graph& g,
                                             const Ordering& ord);

bool is_perfect_elimination_order(const Graph& g, const Ordering& ord);

bool is_chordal(const Graph& g);

/// Clique tree built during maximum cardinality search. Disconnected
/// graphs give a forest with one tree per component.
CliqueTree clique_tree(const Graph& g);

bool verify_clique_tree(const Graph& g, const CliqueTree& t);

struct MembershipCounts {
  std::vector<int> counts;
  bool all_at_most_two = true;
};

/// Per vertex of `g`, the number of maximal independent sets containing
/// it, read off a clique tree of the complement.
MembershipCounts mis_membership_counts(const Graph& g);

/// Same counts straight from a list of cliques over `n` vertices.
MembershipCounts membership_counts(int n, const std::vector<VertexSet>& cliques);

}  // namespace bcc
