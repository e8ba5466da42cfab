#pragma once

#include <chrono>
#include <vector>

#include "bcc/biclique.hpp"
#include "bcc/graph.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc {

/// Caps for the exhaustive searches. Exceeding a size cap throws SizeError
/// up front; running out of time returns a window instead of a value.
struct OracleBudget {
  int cover_vertex_cap = 14;   // exact_bc, exact_bp
  int vertex_cap = 20;         // chromatic, matching, maximal bicliques
  int clique_vertex_cap = 256; // maximal clique enumeration, clique number
  int tree_edge_cap = 9;       // exhaustive_edge_ranking
  std::chrono::milliseconds time_limit{10'000};
};

/// [lower, upper] on an optimum; exact when the two meet.
struct OracleWindow {
  long lower = 0;
  long upper = 0;

  bool exact() const { return lower == upper; }
  long value() const;  // throws SizeError unless exact()
};

struct CoverCertificate {
  OracleWindow window;
  BicliqueList certificate;  // achieves window.upper
};

/// Bron–Kerbosch with pivoting; cliques sorted, list sorted.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 const OracleBudget& budget = {});

/// Inclusion-maximal bicliques (not necessarily induced), each unordered
/// pair once, left side holding the smaller vertex, list sorted.
BicliqueList enumerate_maximal_bicliques(const Graph& g,
                                         const OracleBudget& budget = {});

/// Minimum biclique cover by branch and bound over maximal bicliques.
CoverCertificate exact_bc(const Graph& g, const OracleBudget& budget = {});

/// Minimum biclique partition by branch and bound over bicliques of the
/// still-uncovered edges, pruned by the eigenvalue-inertia bound.
CoverCertificate exact_bp(const Graph& g, const OracleBudget& budget = {});

OracleWindow exact_chromatic(const Graph& g, const OracleBudget& budget = {});
OracleWindow exact_max_matching(const Graph& g, const OracleBudget& budget = {});
OracleWindow exact_clique_number(const Graph& g,
                                 const OracleBudget& budget = {});

/// Fewest ranks over all labelings checked pair by pair against the
/// definition. Throws SizeError above budget.tree_edge_cap edges.
int exhaustive_edge_ranking(const Tree& t, const OracleBudget& budget = {});

}  // namespace bcc
