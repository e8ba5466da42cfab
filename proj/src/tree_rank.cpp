#include "bcc/tree_rank.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "bcc/error.hpp"

namespace bcc {

Tree::Tree(int nodes, std::vector<Edge> edges) {
  if (nodes < 1) throw InputError("a tree needs at least one node");
  if (static_cast<int>(edges.size()) != nodes - 1)
    throw InputError("a tree on " + std::to_string(nodes) + " nodes needs " +
                     std::to_string(nodes - 1) + " edges, got " +
                     std::to_string(edges.size()));
  adj_.resize(nodes);
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t id = 0; id < edges.size(); ++id) {
    auto& e = edges[id];
    if (e.u < 0 || e.u >= nodes || e.v < 0 || e.v >= nodes || e.u == e.v)
      throw InputError("tree edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ") is invalid");
    if (e.u > e.v) std::swap(e.u, e.v);
    int ru = find(e.u), rv = find(e.v);
    if (ru == rv) throw InputError("tree edges contain a cycle");
    parent[ru] = rv;
    adj_[e.u].push_back({e.v, static_cast<int>(id)});
    adj_[e.v].push_back({e.u, static_cast<int>(id)});
  }
  edges_ = std::move(edges);
}

int Tree::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return static_cast<int>(best);
}

int EdgeRanking::rank_count() const {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

bool is_valid_edge_ranking(const Tree& t, const EdgeRanking& ranking) {
  if (static_cast<int>(ranking.ranks.size()) != t.edge_count())
    throw InputError("ranking covers " + std::to_string(ranking.ranks.size()) +
                     " edges, tree has " + std::to_string(t.edge_count()));
  for (int r : ranking.ranks)
    if (r < 1) throw InputError("edge rank must be >= 1");

  // Equal-rank edges need a larger rank between them: within every
  // component of the forest of edges ranked <= k there is at most one
  // edge of rank k. For k = max this forces a unique top edge.
  std::vector<int> ids(t.edge_count());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return ranking.ranks[a] < ranking.ranks[b];
  });
  std::vector<int> parent(t.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> seen_at(t.node_count(), -1);  // root -> last rank seen
  std::size_t i = 0;
  while (i < ids.size()) {
    const int k = ranking.ranks[ids[i]];
    std::size_t j = i;
    for (; j < ids.size() && ranking.ranks[ids[j]] == k; ++j) {
      const auto& e = t.edge(ids[j]);
      parent[find(e.u)] = find(e.v);
    }
    for (std::size_t q = i; q < j; ++q) {
      int root = find(t.edge(ids[q]).u);
      if (seen_at[root] == k) return false;
      seen_at[root] = k;
    }
    i = j;
  }
  return true;
}

EdgeRanking normalize_ranks(EdgeRanking ranking) {
  std::vector<int> values = ranking.ranks;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& r : ranking.ranks)
    r = static_cast<int>(std::lower_bound(values.begin(), values.end(), r) -
                         values.begin()) +
        1;
  return ranking;
}

namespace {

int ceil_log2(long x) {
  if (x <= 1) return 0;
  return static_cast<int>(std::bit_width(static_cast<unsigned long>(x - 1)));
}

}  // namespace

int edge_ranking_lower_bound(const Tree& t) {
  return std::max(t.max_degree(), ceil_log2(t.node_count()));
}

namespace {

// Subtrees are node subsets of the host tree stored as bit masks.
using Mask = std::vector<std::uint64_t>;

struct MaskHash {
  std::size_t operator()(const Mask& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : m) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

class SubtreeSplitter {
 public:
  explicit SubtreeSplitter(const Tree& t) : t_(t), words_((t.node_count() + 63) / 64) {}

  Mask empty() const { return Mask(words_, 0); }
  Mask full() const {
    Mask m = empty();
    for (int v = 0; v < t_.node_count(); ++v) set(m, v);
    return m;
  }
  static void set(Mask& m, int v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }
  static bool has(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1; }

  std::vector<int> nodes(const Mask& m) const {
    std::vector<int> out;
    for (int v = 0; v < t_.node_count(); ++v)
      if (has(m, v)) out.push_back(v);
    return out;
  }

  // Edge ids inside the subtree, each with the node count of the side
  // holding its smaller-index endpoint.
  std::vector<std::pair<int, int>> edges_with_side_sizes(
      const Mask& m, const std::vector<int>& members) const {
    std::vector<std::pair<int, int>> out;
    if (members.size() < 2) return out;
    const int root = members.front();
    std::vector<int> order{root}, parent_edge(t_.node_count(), -1),
        parent(t_.node_count(), -1), size(t_.node_count(), 1);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (auto [w, id] : t_.incident(v))
        if (has(m, w) && w != parent[v]) {
          parent[w] = v;
          parent_edge[w] = id;
          order.push_back(w);
        }
    }
    for (std::size_t i = order.size(); i-- > 1;)
      size[parent[order[i]]] += size[order[i]];
    const int total = static_cast<int>(members.size());
    for (std::size_t i = 1; i < order.size(); ++i) {
      int child = order[i];
      int id = parent_edge[child];
      int below = size[child];
      int side_u = (t_.edge(id).u == child) ? below : total - below;
      out.push_back({id, side_u});
    }
    return out;
  }

  // Component of `start` inside m once `cut` is removed.
  Mask side(const Mask& m, int start, int cut) const {
    Mask out = empty();
    std::vector<int> stack{start};
    set(out, start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, id] : t_.incident(v))
        if (id != cut && has(m, w) && !has(out, w)) {
          set(out, w);
          stack.push_back(w);
        }
    }
    return out;
  }

  int internal_max_degree(const Mask& m, const std::vector<int>& members) const {
    int best = 0;
    for (int v : members) {
      int d = 0;
      for (auto [w, id] : t_.incident(v)) d += has(m, w);
      best = std::max(best, d);
    }
    return best;
  }

  const Tree& tree() const { return t_; }

 private:
  const Tree& t_;
  std::size_t words_;
};

// Branch-and-bound over separator edges with a memo of exact values and
// proven lower bounds per subtree.
class ExactRanker {
 public:
  ExactRanker(const Tree& t, std::size_t max_states)
      : split_(t), max_states_(max_states) {}

  int solve(int upper) { return bounded(split_.full(), upper + 1); }

  void assign(const Mask& m, std::vector<int>& ranks) const {
    auto it = memo_.find(m);
    if (it == memo_.end() || it->second.exact < 0) return;  // single node
    const Entry& e = it->second;
    ranks[e.edge] = e.exact;
    const auto& ed = split_.tree().edge(e.edge);
    assign(split_.side(m, ed.u, e.edge), ranks);
    assign(split_.side(m, ed.v, e.edge), ranks);
  }

  Mask full() const { return split_.full(); }

 private:
  struct Entry {
    int lower = 0;
    int exact = -1;
    int edge = -1;
  };

  int static_lower(const Mask& m, const std::vector<int>& members) const {
    return std::max(split_.internal_max_degree(m, members),
                    ceil_log2(static_cast<long>(members.size())));
  }

  // Exact value when it is below `cap`; otherwise some value >= cap.
  int bounded(const Mask& m, int cap) {
    auto members = split_.nodes(m);
    if (members.size() <= 1) return 0;
    Entry& slot = memo_[m];
    if (slot.exact >= 0) return slot.exact;
    if (memo_.size() > max_states_)
      throw SizeError("exact edge-ranking search exceeded its state budget");
    int lo = std::max(slot.lower, static_lower(m, members));
    if (lo >= cap) return lo;

    const int total = static_cast<int>(members.size());
    auto candidates = split_.edges_with_side_sizes(m, members);
    std::sort(candidates.begin(), candidates.end(), [&](auto a, auto b) {
      int ba = std::max(a.second, total - a.second);
      int bb = std::max(b.second, total - b.second);
      if (ba != bb) return ba < bb;
      return a.first < b.first;
    });

    int best = cap;
    int best_edge = -1;
    for (auto [id, side_u] : candidates) {
      const auto& ed = split_.tree().edge(id);
      Mask a = split_.side(m, ed.u, id);
      Mask b = split_.side(m, ed.v, id);
      if (side_u < total - side_u) std::swap(a, b);  // larger side first
      int va = bounded(a, best - 1);
      if (va >= best - 1) continue;
      int vb = bounded(b, best - 1);
      if (vb >= best - 1) continue;
      best = 1 + std::max(va, vb);
      best_edge = id;
      if (best == lo) break;
    }
    // memo_ may have rehashed during recursion.
    Entry& out = memo_[m];
    if (best_edge >= 0) {
      out.exact = best;
      out.edge = best_edge;
      return best;
    }
    out.lower = std::max(lo, cap);
    return out.lower;
  }

  SubtreeSplitter split_;
  std::size_t max_states_;
  std::unordered_map<Mask, Entry, MaskHash> memo_;
};

int heuristic_rank(const SubtreeSplitter& split, const Mask& m,
                   std::vector<int>& ranks) {
  auto members = split.nodes(m);
  if (members.size() <= 1) return 0;
  const int total = static_cast<int>(members.size());
  const Tree& t = split.tree();
  int best_id = -1;
  int best_balance = total + 1;
  for (auto [id, side_u] : split.edges_with_side_sizes(m, members)) {
    int balance = std::max(side_u, total - side_u);
    if (balance < best_balance ||
        (balance == best_balance && t.edge(id) < t.edge(best_id))) {
      best_balance = balance;
      best_id = id;
    }
  }
  const auto& ed = t.edge(best_id);
  int a = heuristic_rank(split, split.side(m, ed.u, best_id), ranks);
  int b = heuristic_rank(split, split.side(m, ed.v, best_id), ranks);
  ranks[best_id] = 1 + std::max(a, b);
  return ranks[best_id];
}

}  // namespace

RankingResult heuristic_edge_ranking(const Tree& t) {
  SubtreeSplitter split(t);
  RankingResult out;
  out.ranking.ranks.assign(t.edge_count(), 0);
  heuristic_rank(split, split.full(), out.ranking.ranks);
  out.ranking = normalize_ranks(std::move(out.ranking));
  out.ranks = out.ranking.rank_count();
  out.optimal = out.ranks == edge_ranking_lower_bound(t);
  return out;
}

RankingResult optimal_edge_ranking(const Tree& t,
                                   const ExactRankingOptions& opts) {
  if (t.edge_count() > opts.max_edges)
    throw SizeError("tree has " + std::to_string(t.edge_count()) +
                    " edges, above the exact-search cap of " +
                    std::to_string(opts.max_edges) +
                    "; use heuristic_edge_ranking");
  RankingResult heuristic = heuristic_edge_ranking(t);
  if (heuristic.optimal) return heuristic;

  ExactRanker ranker(t, opts.max_states);
  RankingResult out;
  out.ranks = ranker.solve(heuristic.ranks);
  out.ranking.ranks.assign(t.edge_count(), 0);
  ranker.assign(ranker.full(), out.ranking.ranks);
  out.ranking = normalize_ranks(std::move(out.ranking));
  out.optimal = true;
  return out;
}

RankingResult rank_tree(const Tree& t, RankingMode mode,
                        const ExactRankingOptions& opts) {
  switch (mode) {
    case RankingMode::exact:
      return optimal_edge_ranking(t, opts);
    case RankingMode::heuristic:
      return heuristic_edge_ranking(t);
    case RankingMode::automatic:
      break;
  }
  if (t.edge_count() <= opts.max_edges) {
    try {
      return optimal_edge_ranking(t, opts);
    } catch (const SizeError&) {
    }
  }
  return heuristic_edge_ranking(t);
}

}  // namespace bcc
