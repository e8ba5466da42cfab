#include "bcc/biclique.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "bcc/error.hpp"

namespace bcc {

Biclique Biclique::canonical() const {
  if (left.empty() || (!right.empty() && right.front() < left.front()))
    return {right, left};
  return *this;
}

std::optional<Biclique> clique_split_biclique(
    const std::vector<VertexSet>& cliques, const std::vector<int>& left_ids,
    const std::vector<int>& right_ids) {
  const int d = static_cast<int>(cliques.size());
  if (left_ids.empty() || right_ids.empty())
    throw InputError("both index sets must be nonempty");
  std::vector<int> side(d, 0);
  for (int i : left_ids) {
    if (i < 0 || i >= d || side[i]) throw InputError("bad clique index split");
    side[i] = 1;
  }
  for (int j : right_ids) {
    if (j < 0 || j >= d || side[j]) throw InputError("bad clique index split");
    side[j] = 2;
  }
  if (std::count(side.begin(), side.end(), 0) != 0)
    throw InputError("index sets do not cover every clique");

  VertexSet left_union, right_union;
  for (int i : left_ids) left_union = sets::unite(left_union, cliques[i]);
  for (int j : right_ids) right_union = sets::unite(right_union, cliques[j]);
  Biclique b{sets::subtract(left_union, right_union),
             sets::subtract(right_union, left_union)};
  if (b.left.empty() || b.right.empty()) return std::nullopt;
  return b;
}

namespace {

// Union-find over clique-tree nodes; returns component id per node and
// the node list of each component in ascending order.
std::vector<std::vector<int>> forest_components(const CliqueTree& t) {
  const int k = t.node_count();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : t.edges) parent[find(e.a)] = find(e.b);
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(k, -1);
  for (int v = 0; v < k; ++v) {
    int r = find(v);
    if (group_of[r] == -1) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(v);
  }
  return groups;
}

CliqueTreeEdge make_edge(const CliqueTree& t, int a, int b) {
  if (a > b) std::swap(a, b);
  return {a, b, sets::intersect(t.cliques[a], t.cliques[b])};
}

}  // namespace

CliqueTree join_clique_forest(CliqueTree t) {
  auto groups = forest_components(t);
  for (std::size_t i = 1; i < groups.size(); ++i)
    t.edges.push_back(make_edge(t, groups[i - 1].front(), groups[i].front()));
  return t;
}

CliqueTree chain_equal_separators(const CliqueTree& t) {
  std::map<VertexSet, std::vector<int>> by_middle;
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    if (!t.edges[e].middle.empty())
      by_middle[t.edges[e].middle].push_back(static_cast<int>(e));

  CliqueTree out = t;
  for (const auto& [middle, ids] : by_middle) {
    if (ids.size() < 2) continue;
    // Drop this separator's edges, then relink the pieces in a chain
    // through the smallest node of each piece that contains the separator.
    CliqueTree cut;
    cut.cliques = out.cliques;
    for (const auto& e : out.edges)
      if (e.middle != middle) cut.edges.push_back(e);
    auto groups = forest_components(cut);
    std::vector<int> reps;
    for (const auto& g : groups) {
      bool touches = false;
      for (int id : ids)
        touches |= std::binary_search(g.begin(), g.end(), t.edges[id].a) ||
                   std::binary_search(g.begin(), g.end(), t.edges[id].b);
      if (!touches) continue;
      for (int v : g)
        if (sets::includes(out.cliques[v], middle)) {
          reps.push_back(v);
          break;
        }
    }
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 1; i < reps.size(); ++i)
      cut.edges.push_back(make_edge(cut, reps[i - 1], reps[i]));
    out = std::move(cut);
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const auto& x, const auto& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  return out;
}

Tree tree_shape(const CliqueTree& t) {
  std::vector<Edge> edges;
  edges.reserve(t.edges.size());
  for (const auto& e : t.edges) edges.push_back({e.a, e.b});
  return Tree(std::max(1, t.node_count()), std::move(edges));
}

namespace {

// Walks subtrees of a (connected) clique tree. Subtrees are sorted node
// lists; cut(e) splits one along tree edge e.
class CliqueTreeWalker {
 public:
  explicit CliqueTreeWalker(const CliqueTree& t)
      : t_(t), adj_(t.adjacency()), member_(t.node_count(), 0) {}

  std::vector<int> all_nodes() const {
    std::vector<int> s(t_.node_count());
    std::iota(s.begin(), s.end(), 0);
    return s;
  }

  std::vector<int> inner_edges(const std::vector<int>& s) {
    mark(s, 1);
    std::vector<int> out;
    for (int v : s)
      for (int e : adj_[v])
        if (t_.edges[e].a == v && member_[t_.edges[e].b]) out.push_back(e);
    mark(s, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Side of edge e containing `start` inside subtree s.
  std::vector<int> side(const std::vector<int>& s, int e, int start) {
    mark(s, 1);
    std::vector<int> out{start}, stack{start};
    member_[start] = 2;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int f : adj_[v]) {
        if (f == e) continue;
        int w = t_.edges[f].a == v ? t_.edges[f].b : t_.edges[f].a;
        if (member_[w] == 1) {
          member_[w] = 2;
          out.push_back(w);
          stack.push_back(w);
        }
      }
    }
    mark(s, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  Biclique cut_biclique(const std::vector<int>& a_side,
                        const std::vector<int>& b_side, int e) const {
    VertexSet left, right;
    for (int v : a_side) left = sets::unite(left, t_.cliques[v]);
    for (int v : b_side) right = sets::unite(right, t_.cliques[v]);
    const auto& mid = t_.edges[e].middle;
    Biclique b{sets::subtract(left, mid), sets::subtract(right, mid)};
    if (b.left.empty() || b.right.empty() ||
        !sets::disjoint(b.left, b.right))
      throw DomainError("clique tree edge " + std::to_string(e) +
                        " yields a degenerate cut; not a valid clique tree");
    return b;
  }

  const CliqueTree& tree() const { return t_; }

 private:
  void mark(const std::vector<int>& s, char value) {
    for (int v : s) member_[v] = value;
  }

  const CliqueTree& t_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> member_;
};

void check_tree_structure(const CliqueTree& t) {
  const int k = t.node_count();
  for (const auto& e : t.edges)
    if (e.a < 0 || e.a >= k || e.b < 0 || e.b >= k || e.a == e.b)
      throw DomainError("clique tree edge endpoint out of range");
  if (k > 0 && static_cast<int>(t.edges.size()) != k - 1)
    throw DomainError("clique tree is not a tree");
  if (forest_components(t).size() > 1)
    throw DomainError("clique tree is not connected");
}

}  // namespace

BicliqueList find_partition(const CliqueTree& input, SplitPolicy policy) {
  for (const auto& e : input.edges)
    if (e.a < 0 || e.a >= input.node_count() || e.b < 0 ||
        e.b >= input.node_count())
      throw DomainError("clique tree edge endpoint out of range");
  CliqueTree t = join_clique_forest(input);
  check_tree_structure(t);
  CliqueTreeWalker walk(t);
  BicliqueList out;

  std::function<void(const std::vector<int>&)> recurse =
      [&](const std::vector<int>& s) {
        if (s.size() <= 1) return;
        auto inner = walk.inner_edges(s);
        int chosen = inner.front();
        if (policy == SplitPolicy::balanced) {
          std::size_t best = s.size() + 1;
          for (int e : inner) {
            std::size_t a = walk.side(s, e, t.edges[e].a).size();
            std::size_t larger = std::max(a, s.size() - a);
            // inner is sorted by id; compare endpoints for the tie-break
            if (larger < best ||
                (larger == best &&
                 std::tie(t.edges[e].a, t.edges[e].b) <
                     std::tie(t.edges[chosen].a, t.edges[chosen].b))) {
              best = larger;
              chosen = e;
            }
          }
        }
        auto a_side = walk.side(s, chosen, t.edges[chosen].a);
        auto b_side = walk.side(s, chosen, t.edges[chosen].b);
        out.push_back(walk.cut_biclique(a_side, b_side, chosen));
        recurse(a_side);
        recurse(b_side);
      };
  recurse(walk.all_nodes());
  return out;
}

std::vector<int> bfs_positions_from_leaf(const CliqueTree& t) {
  const int k = t.node_count();
  std::vector<int> pos(k, 0);
  if (k == 0) return pos;
  auto adj = t.adjacency();
  int start = 0;
  for (int v = 0; v < k; ++v)
    if (adj[v].size() <= 1) {
      start = v;
      break;
    }
  std::vector<std::vector<int>> nbrs(k);
  for (int v = 0; v < k; ++v) {
    for (int e : adj[v])
      nbrs[v].push_back(t.edges[e].a == v ? t.edges[e].b : t.edges[e].a);
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }
  int next = 1;
  std::queue<int> q;
  q.push(start);
  pos[start] = next++;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbrs[v])
      if (pos[w] == 0) {
        pos[w] = next++;
        q.push(w);
      }
  }
  return pos;
}

LeveledBicliques find_biclique_levels(const CliqueTree& t,
                                      const EdgeRanking& ranking,
                                      const std::vector<int>& bfs_position,
                                      int rank_count) {
  LeveledBicliques levels;
  if (t.node_count() <= 1) return levels;
  Tree shape = [&] {
    try {
      return tree_shape(t);
    } catch (const InputError& e) {
      throw InputError(std::string("clique tree is not a single tree: ") +
                       e.what());
    }
  }();
  if (!is_valid_edge_ranking(shape, ranking))
    throw InputError("edge ranking violates the separation condition");
  if (ranking.rank_count() > rank_count)
    throw InputError("ranking uses more ranks than declared");
  if (static_cast<int>(bfs_position.size()) != t.node_count())
    throw InputError("ordering does not cover every clique-tree node");

  CliqueTreeWalker walk(t);
  std::function<void(const std::vector<int>&)> recurse =
      [&](const std::vector<int>& s) {
        if (s.size() <= 1) return;
        auto inner = walk.inner_edges(s);
        int top = *std::max_element(
            inner.begin(), inner.end(),
            [&](int x, int y) { return ranking.ranks[x] < ranking.ranks[y]; });
        int level = rank_count + 1 - ranking.ranks[top];
        int ord = bfs_position[s.front()];
        for (int v : s) ord = std::min(ord, bfs_position[v]);
        auto a_side = walk.side(s, top, t.edges[top].a);
        auto b_side = walk.side(s, top, t.edges[top].b);
        levels[level].push_back({walk.cut_biclique(a_side, b_side, top), ord});
        recurse(a_side);
        recurse(b_side);
      };
  recurse(walk.all_nodes());
  return levels;
}

BicliqueList merge_bicliques(std::vector<LeveledBiclique> level,
                             const Graph& g) {
  for (const auto& item : level)
    if (!is_biclique_subgraph(g, item.biclique.left, item.biclique.right))
      throw InputError("merge input is not a biclique of the graph");
  std::stable_sort(level.begin(), level.end(),
                   [](const auto& x, const auto& y) { return x.ord < y.ord; });

  BicliqueList merged;
  for (const auto& item : level) {
    const auto& [l, r] = item.biclique;
    bool append = true;
    for (auto& existing : merged) {
      VertexSet same_l = sets::unite(l, existing.left);
      VertexSet same_r = sets::unite(r, existing.right);
      if (is_biclique_subgraph(g, same_l, same_r)) {
        existing = {std::move(same_l), std::move(same_r)};
        append = false;
        continue;
      }
      VertexSet flip_l = sets::unite(r, existing.left);
      VertexSet flip_r = sets::unite(l, existing.right);
      if (is_biclique_subgraph(g, flip_l, flip_r)) {
        existing = {std::move(flip_l), std::move(flip_r)};
        append = false;
      }
    }
    if (append) merged.push_back(item.biclique);
  }
  return merged;
}

namespace {

struct ShapedTree {
  CliqueTree tree;
  RankingResult ranking;
};

ShapedTree rank_joined(const CliqueTree& forest, const CoverOptions& opts) {
  ShapedTree out{join_clique_forest(forest), {}};
  out.ranking = rank_tree(tree_shape(out.tree), opts.ranking, opts.exact);
  return out;
}

}  // namespace

CoverResult cover_cochordal(const Graph& g, const CoverOptions& opts) {
  CliqueTree base = clique_tree(complement(g));
  CoverResult out;
  out.maximal_cliques = base.node_count();
  out.all_at_most_two =
      membership_counts(g.order(), base.cliques).all_at_most_two;
  if (base.node_count() == 0) {
    out.ranking_optimal = true;
    return out;
  }

  ShapedTree chosen = rank_joined(base, opts);
  if (opts.reshape_tree) {
    ShapedTree alt = rank_joined(chain_equal_separators(base), opts);
    if (alt.ranking.ranks < chosen.ranking.ranks) {
      chosen = std::move(alt);
      out.reshaped = true;
    }
  }
  out.tree = std::move(chosen.tree);
  out.ranking = chosen.ranking.ranking;
  out.ranks = chosen.ranking.ranks;
  out.ranking_optimal = chosen.ranking.optimal;

  auto levels = find_biclique_levels(out.tree, out.ranking,
                                     bfs_positions_from_leaf(out.tree),
                                     out.ranks);
  for (int level = 1; level <= out.ranks; ++level) {
    auto it = levels.find(level);
    std::vector<LeveledBiclique> items =
        it == levels.end() ? std::vector<LeveledBiclique>{} : it->second;
    out.level_sizes_before.push_back(static_cast<int>(items.size()));
    auto merged = merge_bicliques(std::move(items), g);
    out.level_sizes_after.push_back(static_cast<int>(merged.size()));
    for (auto& b : merged) out.cover.push_back(std::move(b));
  }
  return out;
}

CoverDiagnostic check_cover(const Graph& g, const BicliqueList& cover,
                            bool exactly_once) {
  const int n = g.order();
  const EdgeIndex edge_id(g);
  auto pair_text = [](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return std::to_string(u) + " " + std::to_string(v);
  };

  std::vector<int> hits(g.size(), 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const auto& b = cover[i];
    if (b.left.empty() || b.right.empty())
      return {false, "biclique " + std::to_string(i) + " has an empty side"};
    if (sets::normalized(b.left) != b.left ||
        sets::normalized(b.right) != b.right)
      return {false, "biclique " + std::to_string(i) +
                         " has unsorted or repeated vertices"};
    if (!is_biclique_subgraph(g, b.left, b.right)) {
      for (Vertex u : b.left)
        for (Vertex v : b.right)
          if (u < 0 || v < 0 || u >= n || v >= n || u == v ||
              !g.adjacent(u, v))
            return {false, "biclique " + std::to_string(i) + ": pair " +
                               std::to_string(u) + " " + std::to_string(v) +
                               " is not an edge"};
      return {false, "biclique " + std::to_string(i) + " is malformed"};
    }
    for (Vertex u : b.left)
      for (Vertex v : b.right) {
        int& h = hits[edge_id(u, v)];
        if (++h > 1 && exactly_once)
          return {false, "edge " + pair_text(u, v) + " covered more than once"};
      }
  }
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (hits[e] == 0)
      return {false, "edge " + pair_text(edges[e].u, edges[e].v) +
                         " is not covered"};
  return {};
}

bool verify_cover(const Graph& g, const BicliqueList& cover) {
  return check_cover(g, cover, false).ok;
}

bool verify_partition(const Graph& g, const BicliqueList& partition) {
  return check_cover(g, partition, true).ok;
}

}  // namespace bcc
