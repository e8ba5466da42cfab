#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcc/chordal.hpp"
#include "bcc/graph.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc {

struct Biclique {
  VertexSet left;
  VertexSet right;

  /// Same pair with the side holding the smallest vertex on the left.
  Biclique canonical() const;
  std::size_t edge_count() const { return left.size() * right.size(); }

  friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

using BicliqueList = std::vector<Biclique>;

/// Biclique {∪I \ ∪J, ∪J \ ∪I} from a two-way split of a clique family.
/// Returns nothing when either side comes out empty. Throws InputError
/// unless I and J are nonempty and partition the clique indices.
std::optional<Biclique> clique_split_biclique(
    const std::vector<VertexSet>& cliques, const std::vector<int>& left_ids,
    const std::vector<int>& right_ids);

enum class SplitPolicy {
  balanced,  // edge minimising the larger side, ties by smaller edge
  first,     // first tree edge still inside the subtree
};

/// Links the trees of a clique forest into one tree with empty-middle edges
/// between the smallest node of consecutive trees. Trees unchanged.
CliqueTree join_clique_forest(CliqueTree t);

/// Rewires each group of tree edges that share one nonempty middle set into
/// a chain. The result is still a clique tree of the same graph.
CliqueTree chain_equal_separators(const CliqueTree& t);

/// Clique tree (joined into one tree) as a bare Tree for ranking.
Tree tree_shape(const CliqueTree& t);

/// Recursive edge cuts of a clique tree of the complement. A forest is
/// joined first. Throws DomainError for structurally broken trees.
BicliqueList find_partition(const CliqueTree& t,
                            SplitPolicy policy = SplitPolicy::balanced);

struct LeveledBiclique {
  Biclique biclique;
  int ord = 0;  // 1-based smallest breadth-first position in the subtree
};

using LeveledBicliques = std::map<int, std::vector<LeveledBiclique>>;

/// Breadth-first positions (1-based) of clique-tree nodes from the
/// smallest-index leaf; neighbours visited in ascending node order.
std::vector<int> bfs_positions_from_leaf(const CliqueTree& t);

/// Cuts the subtree at its top-ranked edge, filing the biclique at level
/// r + 1 - rank. Throws InputError for an invalid ranking.
LeveledBicliques find_biclique_levels(const CliqueTree& t,
                                      const EdgeRanking& ranking,
                                      const std::vector<int>& bfs_position,
                                      int rank_count);

/// Greedy left-to-right merge of one level in ascending ord. Each incoming
/// biclique joins every existing member it fits with in either orientation;
/// it is appended only when it joins none. Throws InputError when an input
/// is not a biclique of g.
BicliqueList merge_bicliques(std::vector<LeveledBiclique> level,
                             const Graph& g);

struct CoverOptions {
  RankingMode ranking = RankingMode::automatic;
  ExactRankingOptions exact;
  /// Try chain_equal_separators and keep it when it lowers the rank count.
  bool reshape_tree = true;
};

struct CoverResult {
  BicliqueList cover;
  CliqueTree tree;  // the joined clique tree of the complement actually used
  EdgeRanking ranking;
  int ranks = 0;
  bool ranking_optimal = false;
  bool all_at_most_two = false;
  bool reshaped = false;
  int maximal_cliques = 0;  // mc of the complement
  std::vector<int> level_sizes_before;
  std::vector<int> level_sizes_after;
};

/// Biclique cover of a graph whose complement is chordal. Throws
/// NotChordalError otherwise.
CoverResult cover_cochordal(const Graph& g, const CoverOptions& opts = {});

/// First offending item found by check_cover.
struct CoverDiagnostic {
  bool ok = true;
  std::string message;
};

CoverDiagnostic check_cover(const Graph& g, const BicliqueList& cover,
                            bool exactly_once);

bool verify_cover(const Graph& g, const BicliqueList& cover);
bool verify_partition(const Graph& g, const BicliqueList& partition);

}  // namespace bcc
