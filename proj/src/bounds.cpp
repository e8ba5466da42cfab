#include "bcc/bounds.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "bcc/chordal.hpp"
#include "bcc/error.hpp"

namespace bcc {

int ceil_log2(long x) {
  int k = 0;
  while (k < 62 && (1L << k) < x) ++k;
  return k;
}

long complement_clique_count(const Graph& g, const OracleBudget& budget) {
  if (g.order() == 0) return 0;
  Graph c = complement(g);
  if (is_chordal(c)) return clique_tree(c).node_count();
  return static_cast<long>(enumerate_maximal_cliques(c, budget).size());
}

int lb_log_mc(const Graph& g, const OracleBudget& budget) {
  return ceil_log2(complement_clique_count(g, budget));
}

namespace {

long greedy_colour_count(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<int> colour(g.order(), -1);
  int used = 0;
  for (Vertex v : order) {
    std::vector<char> taken(used + 1, 0);
    for (Vertex w : g.neighborhood(v))
      if (colour[w] >= 0) taken[colour[w]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    colour[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace

ChiBound lb_log_chi(const Graph& g, const OracleBudget& budget) {
  ChiBound out;
  try {
    OracleWindow w = exact_chromatic(g, budget);
    if (w.exact()) {
      out.chi = w.lower;
      out.certified = true;
    } else {
      out.chi = w.upper;
    }
  } catch (const SizeError&) {
    out.chi = greedy_colour_count(g);
  }
  out.value = ceil_log2(out.chi);
  return out;
}

Graph conflict_graph(const Graph& g, ConflictRule rule) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      bool straight = g.adjacent(a, c) && g.adjacent(b, d);
      bool crossed = g.adjacent(a, d) && g.adjacent(b, c);
      bool excused = rule == ConflictRule::any_four_cycle
                         ? straight || crossed
                         : straight != crossed;
      if (!excused) out.push_back({i, j});
    }
  return Graph(m, out);
}

OmegaBound lb_omega_conflict(const Graph& g, ConflictRule rule,
                             const OracleBudget& budget) {
  OmegaBound out;
  OracleWindow w = exact_clique_number(conflict_graph(g, rule), budget);
  out.value = static_cast<int>(w.lower);
  out.certified = w.exact();
  return out;
}

Rational lb_matching(const Graph& g) {
  if (g.size() == 0) return {0, 1};
  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.order());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(g.order());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  long size = static_cast<long>(boost::matching_size(bg, &mate[0]));
  return {size * size, static_cast<long>(g.size())};
}

BpWindow bp_bc_window(const Graph& g, std::optional<long> bc,
                      std::optional<long> bp) {
  Graph c = complement(g);
  if (!is_chordal(c)) clique_tree(c);  // throws with the certificate
  long mc = g.order() == 0 ? 1 : clique_tree(c).node_count();
  BpWindow out;
  out.bp_upper = mc - 1;
  if (bc && *bc < 62) out.bp_upper = std::min(out.bp_upper, (1L << *bc) - 1);
  if (bp) {
    out.bc_lower_from_bp = ceil_log2(*bp + 1);
    if (*bp > out.bp_upper) out.consistent = false;
    if (bc && *bc < *out.bc_lower_from_bp) out.consistent = false;
  }
  return out;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::heuristic: return "heuristic";
    case Provenance::conditional: return "conditional";
  }
  return "?";
}

namespace {

BoundValue known(long v, Provenance p = Provenance::exact) {
  return {v, p, true, {}};
}

BoundValue missing(const std::string& why) {
  BoundValue b;
  b.note = why;
  return b;
}

}  // namespace

BoundReport full_report(const Graph& g, const ReportOptions& opts) {
  BoundReport r;
  r.n = g.order();
  r.m = static_cast<long>(g.size());
  const Graph comp = complement(g);
  r.complement_chordal = is_chordal(comp);

  try {
    long mc = g.order() == 0 ? 1 : complement_clique_count(g, opts.budget);
    r.mc_complement = known(mc);
    r.lb_log_mc = known(ceil_log2(mc));
  } catch (const std::exception& e) {
    r.mc_complement = r.lb_log_mc = missing(e.what());
  }

  {
    ChiBound chi = lb_log_chi(g, opts.budget);
    r.lb_log_chi = {chi.value,
                    chi.certified ? Provenance::exact : Provenance::heuristic,
                    chi.certified,
                    chi.certified ? "" : "greedy colouring, not certified"};
  }

  if (g.order() > opts.budget.vertex_cap) {
    r.lb_omega_conflict = r.omega_conflict_induced =
        missing("vertex count above the oracle cap");
  } else {
    for (auto [rule, slot] :
         {std::pair{ConflictRule::any_four_cycle, &r.lb_omega_conflict},
          std::pair{ConflictRule::induced_four_cycle,
                    &r.omega_conflict_induced}}) {
      try {
        OmegaBound w = lb_omega_conflict(g, rule, opts.budget);
        *slot = {w.value, Provenance::exact, w.certified,
                 w.certified ? "" : "clique search ran out of time"};
      } catch (const std::exception& e) {
        *slot = missing(e.what());
      }
    }
    r.omega_conflict_induced.certified = false;
    r.omega_conflict_induced.note = "induced 4-cycle rule; not a bound";
  }

  r.lb_matching = lb_matching(g);
  r.lb_matching_ceil = known(r.lb_matching->ceil());

  if (r.complement_chordal) {
    if (r.mc_complement.value)
      r.ub_mc_minus_one = known(std::max(0L, *r.mc_complement.value - 1));
    try {
      CoverResult cover = cover_cochordal(g, opts.cover);
      if (!verify_cover(g, cover.cover)) {
        r.violations.push_back("cover_cochordal produced an invalid cover");
        r.ub_cover = missing("cover failed verification");
      } else {
        r.ub_cover = known(static_cast<long>(cover.cover.size()));
      }
      r.ranking_optimal = cover.ranking_optimal;
      r.all_at_most_two = cover.all_at_most_two;
      r.ub_edge_ranking = {cover.ranks, Provenance::conditional,
                           cover.ranking_optimal && cover.all_at_most_two,
                           {}};
      if (!r.ub_edge_ranking.certified)
        r.ub_edge_ranking.note = cover.all_at_most_two
                                     ? "ranking not certified optimal"
                                     : "a vertex lies in three or more "
                                       "maximal independent sets";
      r.cover = std::move(cover);
    } catch (const std::exception& e) {
      r.ub_cover = r.ub_edge_ranking = missing(e.what());
    }
  } else {
    const char* why = "complement is not chordal";
    r.ub_mc_minus_one = r.ub_cover = r.ub_edge_ranking = missing(why);
  }

  if (opts.run_oracles) {
    try {
      r.exact_bc = exact_bc(g, opts.budget);
    } catch (const SizeError&) {
    }
    if (r.complement_chordal) {
      try {
        r.exact_bp = exact_bp(g, opts.budget);
      } catch (const SizeError&) {
      }
    }
  }

  if (r.complement_chordal) {
    std::optional<long> bc, bp;
    if (r.exact_bc && r.exact_bc->window.exact()) bc = r.exact_bc->window.lower;
    if (r.exact_bp && r.exact_bp->window.exact()) bp = r.exact_bp->window.lower;
    r.bp_window = bp_bc_window(g, bc, bp);
    if (!r.bp_window->consistent)
      r.violations.push_back("bp/bc window violated");
  }

  // Sandwich check over certified entries.
  std::vector<std::pair<std::string, long>> lower, upper;
  auto add = [](auto& list, const char* name, const BoundValue& b) {
    if (b.value && b.certified) list.push_back({name, *b.value});
  };
  add(lower, "lb_log_mc", r.lb_log_mc);
  add(lower, "lb_log_chi", r.lb_log_chi);
  add(lower, "lb_omega_conflict", r.lb_omega_conflict);
  add(lower, "lb_matching", r.lb_matching_ceil);
  add(upper, "ub_mc_minus_one", r.ub_mc_minus_one);
  add(upper, "ub_cover", r.ub_cover);
  add(upper, "ub_edge_ranking", r.ub_edge_ranking);
  // Pinned means the closed-form bounds alone meet, before any oracle input.
  if (!lower.empty() && !upper.empty()) {
    long best_lower = 0, best_upper = upper.front().second;
    for (const auto& entry : lower) best_lower = std::max(best_lower, entry.second);
    for (const auto& entry : upper) best_upper = std::min(best_upper, entry.second);
    r.bc_pinned = best_lower == best_upper;
  }
  if (r.bp_window && r.bp_window->bc_lower_from_bp)
    lower.push_back({"bc_lower_from_bp", *r.bp_window->bc_lower_from_bp});
  if (r.exact_bc) {
    lower.push_back({"oracle_bc_lower", r.exact_bc->window.lower});
    upper.push_back({"oracle_bc_upper", r.exact_bc->window.upper});
  }
  for (const auto& [ln, lv] : lower)
    for (const auto& [un, uv] : upper)
      if (lv > uv)
        r.violations.push_back(ln + " = " + std::to_string(lv) + " exceeds " +
                               un + " = " + std::to_string(uv));
  if (r.lb_log_mc.value && r.lb_log_chi.certified &&
      *r.lb_log_mc.value < *r.lb_log_chi.value)
    r.violations.push_back("lb_log_mc below lb_log_chi");
  if (r.exact_bc && r.exact_bp && r.exact_bp->window.upper < r.exact_bc->window.lower)
    r.violations.push_back("exact_bp below exact_bc");

  r.consistent = r.violations.empty();
  return r;
}

}  // namespace bcc
