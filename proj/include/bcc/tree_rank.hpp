#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcc/graph.hpp"

namespace bcc {

/// Connected acyclic graph with an explicit edge numbering. Edge ids index
/// into EdgeRanking::ranks.
class Tree {
 public:
  Tree() : Tree(1, {}) {}

  /// Throws InputError unless the edges form a spanning tree on 0..n-1.
  Tree(int nodes, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  /// (neighbour, edge id) pairs.
  const std::vector<std::pair<int, int>>& incident(int node) const {
    return adj_[node];
  }
  int max_degree() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct EdgeRanking {
  std::vector<int> ranks;  // per edge id, each >= 1

  int rank_count() const;
};

/// Throws InputError when `ranking` does not assign every edge a rank >= 1.
bool is_valid_edge_ranking(const Tree& t, const EdgeRanking& ranking);

/// Renumbers the distinct rank values to 1..r, preserving their order.
EdgeRanking normalize_ranks(EdgeRanking ranking);

/// max(max degree, ceil(log2 |V|)).
int edge_ranking_lower_bound(const Tree& t);

struct RankingResult {
  EdgeRanking ranking;
  int ranks = 0;
  bool optimal = false;
};

struct ExactRankingOptions {
  int max_edges = 64;
  /// Upper limit on memoised subtree states before giving up.
  std::size_t max_states = 2'000'000;
};

/// Minimum-rank edge ranking. Throws SizeError when the tree exceeds
/// `max_edges` or the search exhausts `max_states`.
RankingResult optimal_edge_ranking(const Tree& t,
                                   const ExactRankingOptions& opts = {});

/// Recursive most-balanced separator. Always valid, not always optimal.
RankingResult heuristic_edge_ranking(const Tree& t);

enum class RankingMode { exact, heuristic, automatic };

/// Exact when within caps, heuristic otherwise (the result says which).
RankingResult rank_tree(const Tree& t, RankingMode mode,
                        const ExactRankingOptions& opts = {});

}  // namespace bcc
