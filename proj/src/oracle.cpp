#include "bcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/dynamic_bitset.hpp>

#include "bcc/error.hpp"

namespace bcc {

long OracleWindow::value() const {
  if (!exact())
    throw SizeError("oracle budget exhausted; window [" +
                    std::to_string(lower) + ", " + std::to_string(upper) + "]");
  return lower;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

struct OutOfTime {};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit)
      : end_(Clock::now() + limit) {}

  // Cheap enough to call from inner loops; samples the clock every 256 calls.
  void check() {
    if ((++ticks_ & 0xff) == 0 && Clock::now() > end_) throw OutOfTime{};
  }

 private:
  Clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

void require_at_most(int n, int cap, const char* what) {
  if (n > cap)
    throw SizeError(std::string(what) + ": " + std::to_string(n) +
                    " vertices exceeds the cap of " + std::to_string(cap));
}

VertexSet mask_to_set(std::uint64_t m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighborhood(v)) adj[v] |= std::uint64_t{1} << w;
  return adj;
}

// Repeatedly takes the star at the vertex of largest remaining degree.
// The result is a partition, so it also serves as a cover.
BicliqueList star_peeling(std::vector<std::uint64_t> rest) {
  BicliqueList out;
  for (;;) {
    int hub = -1, degree = 0;
    for (std::size_t v = 0; v < rest.size(); ++v)
      if (std::popcount(rest[v]) > degree) {
        degree = std::popcount(rest[v]);
        hub = static_cast<int>(v);
      }
    if (hub < 0) break;
    std::uint64_t leaves = rest[hub];
    out.push_back(Biclique{{hub}, mask_to_set(leaves)}.canonical());
    for (std::uint64_t m = leaves; m; m &= m - 1)
      rest[std::countr_zero(m)] &= ~(std::uint64_t{1} << hub);
    rest[hub] = 0;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 const OracleBudget& budget) {
  const int n = g.order();
  require_at_most(n, budget.clique_vertex_cap, "maximal clique enumeration");
  std::vector<Bits> adj(n, Bits(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighborhood(v)) adj[v].set(w);

  Deadline deadline(budget.time_limit);
  std::vector<VertexSet> out;
  VertexSet current;
  std::function<void(Bits, Bits)> expand = [&](Bits cand, Bits excl) {
    deadline.check();
    if (cand.none()) {
      if (excl.none()) out.push_back(sets::normalized(current));
      return;
    }
    // Pivot on the vertex covering most candidates.
    Bits pool = cand | excl;
    std::size_t pivot = pool.find_first();
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
      std::size_t c = (cand & adj[u]).count();
      if (c >= best) {
        if (c > best || u < pivot) pivot = u;
        best = c;
      }
    }
    Bits branch = cand - adj[pivot];
    for (auto v = branch.find_first(); v != Bits::npos;
         v = branch.find_next(v)) {
      current.push_back(static_cast<Vertex>(v));
      expand(cand & adj[v], excl & adj[v]);
      current.pop_back();
      cand.reset(v);
      excl.set(v);
    }
  };
  if (n > 0) {
    try {
      expand(Bits(n).set(), Bits(n));
    } catch (const OutOfTime&) {
      throw SizeError("maximal clique enumeration ran out of time");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BicliqueList enumerate_maximal_bicliques(const Graph& g,
                                         const OracleBudget& budget) {
  const int n = g.order();
  require_at_most(n, std::min(budget.vertex_cap, 30),
                  "maximal biclique enumeration");
  auto adj = adjacency_masks(g);
  const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;

  // Maximal bicliques are exactly the pairs closed under taking common
  // neighbourhoods: right = N(left) and left = N(right).
  auto common = [&](std::uint64_t s) {
    std::uint64_t c = all;
    for (std::uint64_t m = s; m; m &= m - 1) c &= adj[std::countr_zero(m)];
    return c;
  };
  Deadline deadline(budget.time_limit);
  BicliqueList out;
  try {
    for (std::uint64_t left = 1; left <= all; ++left) {
      deadline.check();
      std::uint64_t right = common(left);
      if (!right) continue;
      if ((left & -left) > (right & -right)) continue;  // emit each pair once
      if (common(right) != left) continue;
      out.push_back({mask_to_set(left), mask_to_set(right)});
    }
  } catch (const OutOfTime&) {
    throw SizeError("maximal biclique enumeration ran out of time");
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const BicliqueList& candidates,
              Deadline& deadline)
      : candidates_(candidates), deadline_(deadline) {
    const EdgeIndex index(g);
    m_ = g.size();
    covers_.assign(candidates.size(), Bits(m_));
    covering_.assign(m_, {});
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      for (Vertex u : candidates[b].left)
        for (Vertex v : candidates[b].right) covers_[b].set(index(u, v));
      for (auto e = covers_[b].find_first(); e != Bits::npos;
           e = covers_[b].find_next(e))
        covering_[e].push_back(static_cast<int>(b));
    }
    compatible_.assign(m_, Bits(m_));
    for (std::size_t e = 0; e < m_; ++e)
      for (int b : covering_[e]) compatible_[e] |= covers_[b];
    by_scarcity_.resize(m_);
    std::iota(by_scarcity_.begin(), by_scarcity_.end(), 0);
    std::stable_sort(by_scarcity_.begin(), by_scarcity_.end(),
                     [&](int x, int y) {
                       return covering_[x].size() < covering_[y].size();
                     });
  }

  // Edges no single candidate covers together each need their own member.
  int packing_bound(const Bits& uncovered) const {
    Bits blocked(m_);
    int count = 0;
    for (int e : by_scarcity_)
      if (uncovered.test(e) && !blocked.test(e)) {
        ++count;
        blocked |= compatible_[e];
      }
    return count;
  }

  std::vector<int> greedy() const {
    Bits uncovered(m_);
    uncovered.set();
    std::vector<int> chosen;
    while (uncovered.any()) {
      int best = -1;
      std::size_t gain = 0;
      for (std::size_t b = 0; b < covers_.size(); ++b) {
        std::size_t c = (covers_[b] & uncovered).count();
        if (c > gain) {
          gain = c;
          best = static_cast<int>(b);
        }
      }
      chosen.push_back(best);
      uncovered -= covers_[best];
    }
    return chosen;
  }

  bool feasible(int k, std::vector<int>& chosen) {
    Bits uncovered(m_);
    uncovered.set();
    return dfs(uncovered, k, chosen);
  }

  std::size_t edge_count() const { return m_; }

 private:
  bool dfs(const Bits& uncovered, int depth, std::vector<int>& chosen) {
    deadline_.check();
    if (uncovered.none()) return true;
    if (depth == 0 || packing_bound(uncovered) > depth) return false;
    int pick = -1;
    for (int e : by_scarcity_)
      if (uncovered.test(e)) {
        pick = e;
        break;
      }
    std::vector<std::pair<std::size_t, int>> options;
    for (int b : covering_[pick])
      options.push_back({(covers_[b] & uncovered).count(), b});
    std::sort(options.begin(), options.end(),
              [](auto x, auto y) { return x.first > y.first; });
    for (auto [gain, b] : options) {
      chosen.push_back(b);
      if (dfs(uncovered - covers_[b], depth - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const BicliqueList& candidates_;
  Deadline& deadline_;
  std::size_t m_ = 0;
  std::vector<Bits> covers_;
  std::vector<std::vector<int>> covering_;
  std::vector<Bits> compatible_;
  std::vector<int> by_scarcity_;
};

}  // namespace

CoverCertificate exact_bc(const Graph& g, const OracleBudget& budget) {
  require_at_most(g.order(), budget.cover_vertex_cap, "exact_bc");
  CoverCertificate out;
  if (g.size() == 0) return out;

  OracleBudget wide = budget;
  wide.vertex_cap = std::max(budget.vertex_cap, budget.cover_vertex_cap);
  BicliqueList maximal;
  try {
    maximal = enumerate_maximal_bicliques(g, wide);
  } catch (const SizeError&) {
    // Only the clock can stop the enumeration here; fall back to stars.
    out.certificate = star_peeling(adjacency_masks(g));
    out.window = {1, static_cast<long>(out.certificate.size())};
    return out;
  }
  Deadline deadline(budget.time_limit);
  CoverSearch search(g, maximal, deadline);

  auto to_list = [&](const std::vector<int>& ids) {
    BicliqueList list;
    for (int b : ids) list.push_back(maximal[b]);
    return list;
  };
  std::vector<int> best = search.greedy();
  Bits all(search.edge_count());
  all.set();
  long lower = std::max(1, search.packing_bound(all));
  long upper = static_cast<long>(best.size());
  try {
    for (; lower < upper; ++lower) {
      std::vector<int> chosen;
      if (search.feasible(static_cast<int>(lower), chosen)) {
        best = chosen;
        upper = static_cast<long>(chosen.size());
        break;
      }
    }
  } catch (const OutOfTime&) {
  }
  out.window = {lower, upper};
  out.certificate = to_list(best);
  return out;
}

namespace {

// Largest count of positive or negative adjacency eigenvalues: every
// biclique partition of the edges has at least that many members.
int inertia_bound(const std::vector<std::uint64_t>& adj) {
  std::vector<int> live;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (adj[v]) live.push_back(static_cast<int>(v));
  if (live.empty()) return 0;
  const int k = static_cast<int>(live.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((adj[live[i]] >> live[j]) & 1) a(i, j) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, Eigen::EigenvaluesOnly);
  int pos = 0, neg = 0;
  for (int i = 0; i < k; ++i) {
    double x = solver.eigenvalues()(i);
    if (x > 1e-7) ++pos;
    if (x < -1e-7) ++neg;
  }
  return std::max(pos, neg);
}

class PartitionSearch {
 public:
  PartitionSearch(std::vector<std::uint64_t> adj, Deadline& deadline)
      : adj_(std::move(adj)), deadline_(deadline) {}

  bool feasible(int depth, BicliqueList& chosen) {
    deadline_.check();
    int live_vertex = -1;
    int min_degree = 1 << 30;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      int d = std::popcount(adj_[v]);
      if (d > 0 && d < min_degree) {
        min_degree = d;
        live_vertex = static_cast<int>(v);
      }
    }
    if (live_vertex < 0) return true;
    if (depth == 0 || inertia_bound(adj_) > depth) return false;

    const int u = live_vertex;
    const int v = std::countr_zero(adj_[u]);
    // Every biclique of the remaining edges with u on the left, v on the right.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> options;
    const std::uint64_t left_pool = adj_[v] & ~(std::uint64_t{1} << u);
    for (std::uint64_t sub = left_pool;; sub = (sub - 1) & left_pool) {
      std::uint64_t left = sub | (std::uint64_t{1} << u);
      std::uint64_t common = ~std::uint64_t{0};
      for (std::uint64_t m = left; m; m &= m - 1)
        common &= adj_[std::countr_zero(m)];
      if ((common >> v) & 1) {
        std::uint64_t right_pool = common & ~(std::uint64_t{1} << v);
        for (std::uint64_t rs = right_pool;; rs = (rs - 1) & right_pool) {
          options.push_back({left, rs | (std::uint64_t{1} << v)});
          if (rs == 0) break;
        }
      }
      if (sub == 0) break;
    }
    std::stable_sort(options.begin(), options.end(), [](auto x, auto y) {
      return std::popcount(x.first) * std::popcount(x.second) >
             std::popcount(y.first) * std::popcount(y.second);
    });
    for (auto [left, right] : options) {
      remove(left, right);
      chosen.push_back({mask_to_set(left), mask_to_set(right)});
      bool ok = feasible(depth - 1, chosen);
      restore(left, right);
      if (ok) return true;
      chosen.pop_back();
    }
    return false;
  }

 private:
  void remove(std::uint64_t left, std::uint64_t right) {
    for (std::uint64_t m = left; m; m &= m - 1) adj_[std::countr_zero(m)] &= ~right;
    for (std::uint64_t m = right; m; m &= m - 1) adj_[std::countr_zero(m)] &= ~left;
  }
  void restore(std::uint64_t left, std::uint64_t right) {
    for (std::uint64_t m = left; m; m &= m - 1) adj_[std::countr_zero(m)] |= right;
    for (std::uint64_t m = right; m; m &= m - 1) adj_[std::countr_zero(m)] |= left;
  }

  std::vector<std::uint64_t> adj_;
  Deadline& deadline_;
};

}  // namespace

CoverCertificate exact_bp(const Graph& g, const OracleBudget& budget) {
  require_at_most(g.order(), std::min(budget.cover_vertex_cap, 64), "exact_bp");
  CoverCertificate out;
  if (g.size() == 0) return out;
  auto adj = adjacency_masks(g);

  BicliqueList best = star_peeling(adj);
  long lower = std::max(1, inertia_bound(adj));
  long upper = static_cast<long>(best.size());
  Deadline deadline(budget.time_limit);
  PartitionSearch search(adj, deadline);
  try {
    for (; lower < upper; ++lower) {
      BicliqueList chosen;
      if (search.feasible(static_cast<int>(lower), chosen)) {
        best = std::move(chosen);
        upper = static_cast<long>(best.size());
        break;
      }
    }
  } catch (const OutOfTime&) {
  }
  for (auto& b : best) b = b.canonical();
  out.window = {lower, upper};
  out.certificate = std::move(best);
  return out;
}

OracleWindow exact_clique_number(const Graph& g, const OracleBudget& budget) {
  long best = 0;
  try {
    for (const auto& c : enumerate_maximal_cliques(g, budget))
      best = std::max<long>(best, static_cast<long>(c.size()));
  } catch (const SizeError&) {
    if (g.order() > budget.clique_vertex_cap) throw;
    return {std::min<long>(1, g.order()), g.order()};
  }
  return {best, best};
}

OracleWindow exact_chromatic(const Graph& g, const OracleBudget& budget) {
  const int n = g.order();
  require_at_most(n, budget.vertex_cap, "exact_chromatic");
  if (n == 0) return {0, 0};
  std::vector<int> color(n, -1);
  int best = n + 1;

  // Greedy clique for an immediate floor.
  long floor = 0;
  {
    VertexSet clique;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    for (Vertex v : order)
      if (std::all_of(clique.begin(), clique.end(),
                      [&](Vertex c) { return g.adjacent(v, c); }))
        clique.push_back(v);
    floor = static_cast<long>(clique.size());
  }

  Deadline deadline(budget.time_limit);
  // DSATUR-ordered backtracking.
  std::function<void(int, int)> search = [&](int colored, int used) {
    deadline.check();
    if (used >= best) return;
    if (colored == n) {
      best = used;
      return;
    }
    Vertex pick = -1;
    int pick_sat = -1, pick_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      std::uint64_t seen = 0;
      int deg = 0;
      for (Vertex w : g.neighborhood(v)) {
        if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
        else ++deg;
      }
      int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    std::uint64_t blocked = 0;
    for (Vertex w : g.neighborhood(pick))
      if (color[w] >= 0) blocked |= std::uint64_t{1} << color[w];
    for (int c = 0; c < used; ++c) {
      if ((blocked >> c) & 1) continue;
      color[pick] = c;
      search(colored + 1, used);
      color[pick] = -1;
      if (best == floor) return;
    }
    if (used + 1 < best) {
      color[pick] = used;
      search(colored + 1, used + 1);
      color[pick] = -1;
    }
  };
  try {
    search(0, 0);
  } catch (const OutOfTime&) {
    return {floor, best};
  }
  return {best, best};
}

OracleWindow exact_max_matching(const Graph& g, const OracleBudget& budget) {
  const int n = g.order();
  require_at_most(n, std::min(budget.vertex_cap, 64), "exact_max_matching");
  auto adj = adjacency_masks(g);
  long best = 0;
  Deadline deadline(budget.time_limit);
  // Lowest free vertex with a free neighbour is either matched to one of
  // them or left out for good.
  std::function<void(std::uint64_t, long)> search = [&](std::uint64_t free,
                                                        long matched) {
    deadline.check();
    std::uint64_t active = 0;
    for (std::uint64_t m = free; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (adj[v] & free) active |= std::uint64_t{1} << v;
    }
    if (matched + std::popcount(active) / 2 <= best) return;
    if (!active) {
      best = std::max(best, matched);
      return;
    }
    int v = std::countr_zero(active);
    std::uint64_t rest = free & ~(std::uint64_t{1} << v);
    for (std::uint64_t m = adj[v] & rest; m; m &= m - 1) {
      int w = std::countr_zero(m);
      search(rest & ~(std::uint64_t{1} << w), matched + 1);
    }
    search(rest, matched);
  };
  const std::uint64_t all =
      n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  try {
    search(all, 0);
  } catch (const OutOfTime&) {
    return {best, n / 2};
  }
  return {best, best};
}

int exhaustive_edge_ranking(const Tree& t, const OracleBudget& budget) {
  const int m = t.edge_count();
  if (m > budget.tree_edge_cap)
    throw SizeError("exhaustive edge ranking limited to " +
                    std::to_string(budget.tree_edge_cap) + " edges");
  if (m == 0) return 0;

  // Edge lists of the node path between every pair of nodes.
  const int n = t.node_count();
  std::vector<std::vector<int>> parent_edge(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> parent(n, std::vector<int>(n, -1));
  for (int root = 0; root < n; ++root) {
    std::vector<int> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, id] : t.incident(x))
        if (!seen[y]) {
          seen[y] = 1;
          parent[root][y] = x;
          parent_edge[root][y] = id;
          stack.push_back(y);
        }
    }
  }
  auto path_edges = [&](int from, int to) {
    std::vector<int> out;
    for (int x = to; x != from; x = parent[from][x])
      out.push_back(parent_edge[from][x]);
    return out;
  };

  // For edges e, f the edges strictly between them: the shortest node path
  // joining an endpoint of e to an endpoint of f, which avoids e and f.
  struct PairCheck {
    int e, f;
    std::vector<int> between;
  };
  std::vector<std::vector<PairCheck>> due(m);  // keyed by last edge assigned
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      std::vector<int> shortest;
      bool first = true;
      for (int a : {t.edge(e).u, t.edge(e).v})
        for (int b : {t.edge(f).u, t.edge(f).v}) {
          auto p = path_edges(a, b);
          if (first || p.size() < shortest.size()) shortest = p;
          first = false;
        }
      int last = f;
      for (int x : shortest) last = std::max(last, x);
      due[last].push_back({e, f, shortest});
    }

  Deadline deadline(budget.time_limit);
  std::vector<int> rank(m, 0);
  std::function<bool(int, int)> assign = [&](int i, int r) {
    deadline.check();
    if (i == m) return true;
    for (int k = 1; k <= r; ++k) {
      rank[i] = k;
      bool ok = true;
      for (const auto& c : due[i]) {
        if (rank[c.e] != rank[c.f]) continue;
        bool separated = false;
        for (int x : c.between) separated |= rank[x] > rank[c.e];
        if (!separated) {
          ok = false;
          break;
        }
      }
      if (ok && assign(i + 1, r)) return true;
    }
    rank[i] = 0;
    return false;
  };
  try {
    for (int r = 1;; ++r)
      if (assign(0, r)) return r;
  } catch (const OutOfTime&) {
    throw SizeError("exhaustive edge ranking ran out of time");
  }
}

}  // namespace bcc
