// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bcc/biclique.hpp"
#include "bcc/bounds.hpp"
#include "bcc/chordal.hpp"
#include "bcc/gen.hpp"
#include "bcc/oracle.hpp"
#include "bcc/tree_rank.hpp"
#include "support.hpp"

using namespace bcc;
using namespace bcc::test;

namespace {

// Collects failures for one criterion; `detail` goes on the summary line.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  int failed = 0;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string str(long x) { return std::to_string(x); }

Biclique canon(VertexSet l, VertexSet r) { return Biclique{l, r}.canonical(); }

void copath_exactness(Check& c) {
  for (int n = 3; n <= 12; ++n) {
    Graph g = gen_copath(n).graph;
    CoverResult r = cover_cochordal(g);
    const long want = ceil_log2(n - 1);
    c.expect(verify_cover(g, r.cover), "n=" + str(n) + " cover invalid");
    c.expect(static_cast<long>(r.cover.size()) == want,
             "n=" + str(n) + " size " + str(r.cover.size()) + " != " + str(want));
    if (n <= 10) {
      OracleWindow w = exact_bc(g).window;
      c.expect(w.exact() && w.lower == want,
               "n=" + str(n) + " oracle [" + str(w.lower) + "," + str(w.upper) + "]");
    }
  }
  c.detail = "n = 3..12, oracle n <= 10";
}

void fig2_walkthrough(Check& c) {
  Graph g = gen_fig_graph("fig2").graph;
  CliqueTree t = join_clique_forest(clique_tree(complement(g)));
  RankingResult rank = optimal_edge_ranking(tree_shape(t));
  LeveledBicliques levels = find_biclique_levels(
      t, rank.ranking, bfs_positions_from_leaf(t), rank.ranks);
  const Vertex a = 0, b = 1, cc = 2, d = 3, e = 4;
  c.expect(levels.size() == 2, "expected two levels");
  c.expect(levels[1].size() == 1 &&
               levels[1][0].biclique.canonical() == canon({a, b}, {d, e}),
           "level 1 is not {{a,b},{d,e}}");
  BicliqueList merged = merge_bicliques(levels[2], g);
  c.expect(merged.size() == 1 && merged[0].canonical() == canon({a, e}, {cc}),
           "level 2 does not merge to {{a,e},{c}}");
  CoverResult r = cover_cochordal(g);
  c.expect(r.cover.size() == 2 && verify_cover(g, r.cover), "final cover size != 2");
  c.detail = "level 1 {a,b}|{d,e}, level 2 -> {a,e}|{c}";
}

void fig3_counterexample(Check& c) {
  Graph g = gen_fig_graph("fig3").graph;
  CoverResult r = cover_cochordal(g);
  c.expect(verify_cover(g, r.cover), "cover invalid");
  c.expect(r.cover.size() == 3, "cover size " + str(r.cover.size()));
  OracleWindow w = exact_bc(g).window;
  c.expect(w.exact() && w.lower == 3, "oracle bc != 3");
  MembershipCounts m = mis_membership_counts(g);
  c.expect(!m.all_at_most_two, "membership flag should be false");
  c.expect(m.counts[2] == 3, "vertex c should be in 3 maximal independent sets");
  c.detail = "cover 3, oracle 3, c in " + str(m.counts[2]) + " MIS, ranks " +
             str(r.ranks);
}

void lower_bound_dominance(Check& c) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(size(rng), density(rng), rng);
    ChiBound chi = lb_log_chi(g);
    c.expect(chi.certified, "chromatic number not exact on trial " + str(trial));
    c.expect(lb_log_mc(g) >= chi.value, "trial " + str(trial) + " log mc < log chi");
  }
  Graph c4c = gen_fig_graph("fig1_c4c").graph;
  c.expect(lb_log_mc(c4c) == 2 && lb_log_chi(c4c).value == 1,
           "C4 complement: expected 2 > 1");
  Graph k5 = gen_fig_graph("fig1_k5").graph;
  const int omega_induced = lb_omega_conflict(k5, ConflictRule::induced_four_cycle).value;
  const int omega_sound = lb_omega_conflict(k5, ConflictRule::any_four_cycle).value;
  const Rational match = lb_matching(k5);
  c.expect(omega_induced == 2, "omega(K5_E) under the induced-cycle rule is " + str(omega_induced));
  c.expect(match.num == 4 && match.den == 10, "matching bound != 4/10");
  c.expect(lb_log_mc(k5) == 3, "lb_log_mc(K5) != 3");
  c.expect(lb_log_mc(k5) > std::max<long>(omega_induced, match.ceil()),
           "K5: log mc does not dominate");
  c.expect(lb_log_mc(k5) > std::max<long>(omega_sound, match.ceil()),
           "K5: log mc does not dominate the sound omega");
  c.detail = "500 random graphs; K5: omega 2 (4-cycle-only rule gives " +
             str(omega_sound) + "), matching 4/10";
}

void log_mc_sandwich(Check& c) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(size(rng), density(rng), rng);
    OracleWindow w = exact_bc(g).window;
    c.expect(w.exact(), "oracle inexact on trial " + str(trial));
    solved += w.exact();
    c.expect(lb_log_mc(g) <= w.lower,
             "trial " + str(trial) + ": log mc " + str(lb_log_mc(g)) + " > bc " +
                 str(w.lower));
  }
  c.detail = str(solved) + "/300 solved exactly";
}

void partition_guarantee(Check& c) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    Graph g = random_cochordal(n, density, rng());
    CliqueTree t = clique_tree(complement(g));
    BicliqueList p = find_partition(t);
    c.expect(verify_partition(g, p), "trial " + str(trial) + " not a partition");
    long mc = static_cast<long>(enumerate_maximal_cliques(complement(g)).size());
    c.expect(static_cast<long>(p.size()) == mc - 1,
             "trial " + str(trial) + " size " + str(p.size()) + " != mc-1 = " +
                 str(mc - 1));
  }
  c.detail = "200 co-chordal graphs, n <= 14";
}

void edge_ranking_exactness(Check& c) {
  int trees = 0;
  for (int nodes = 1; nodes <= 9; ++nodes)
    for (const Tree& t : enumerate_free_trees(nodes)) {
      ++trees;
      RankingResult r = optimal_edge_ranking(t);
      c.expect(is_valid_edge_ranking(t, r.ranking), "invalid optimal ranking");
      c.expect(r.ranks == exhaustive_edge_ranking(t),
               "mismatch on a " + str(nodes) + "-node tree");
    }
  for (int n = 1; n <= 17; ++n)
    c.expect(optimal_edge_ranking(path_tree(n)).ranks == ceil_log2(n),
             "path P" + str(n));
  for (int m = 1; m <= 8; ++m)
    c.expect(optimal_edge_ranking(star_tree(m)).ranks == m, "star K1," + str(m));
  c.detail = str(trees) + " free trees, paths to 17, stars to 8";
}

void ranking_bound(Check& c) {
  std::mt19937_64 rng(99);
  const char* shapes[] = {"path", "star", "caterpillar", "random"};
  for (int trial = 0; trial < 200; ++trial) {
    const std::string shape = shapes[trial % 4];
    Tree t = shape == "path"   ? path_tree(1 + rng() % 16)
             : shape == "star" ? star_tree(1 + rng() % 7)
             : shape == "caterpillar"
                 ? caterpillar_tree(1 + rng() % 5, static_cast<int>(rng() % 3))
                 : random_tree(1 + rng() % 16, rng());
    std::vector<int> middles(t.edge_count());
    for (int& m : middles) m = 1 + static_cast<int>(rng() % 2);
    std::vector<int> sizes(t.node_count());
    for (int i = 0; i < t.node_count(); ++i) {
      int shared = 0;
      for (auto [nbr, id] : t.incident(i)) shared += middles[id];
      int extra = static_cast<int>(rng() % 3);
      sizes[i] = shared + (t.incident(i).size() <= 1 ? 1 + extra : extra);
    }
    NamedInstance inst = gen_two_membership_cochordal(t, sizes, middles, rng());
    CoverResult r = cover_cochordal(inst.graph);
    const int chi = optimal_edge_ranking(t).ranks;
    const std::string tag = shape + " #" + str(trial);
    c.expect(r.all_at_most_two, tag + ": flag false");
    c.expect(verify_cover(inst.graph, r.cover), tag + ": invalid cover");
    c.expect(static_cast<int>(r.cover.size()) <= chi,
             tag + ": size " + str(r.cover.size()) + " > " + str(chi));
    for (int after : r.level_sizes_after)
      c.expect(after == 1, tag + ": a level kept " + str(after) + " bicliques");
  }
  c.detail = "200 instances over path/star/caterpillar/random shapes";
}

void bp_bc_window_check(Check& c) {
  std::vector<Graph> instances;
  for (int n = 3; n <= 10; ++n) instances.push_back(gen_copath(n).graph);
  for (int m = 1; m <= 4; ++m) instances.push_back(gen_cowindmill(m, 3).graph);
  instances.push_back(gen_fig_graph("fig2").graph);
  instances.push_back(gen_fig_graph("fig3").graph);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial)
    instances.push_back(random_cochordal(2 + static_cast<int>(rng() % 9),
                                         std::uniform_real_distribution<double>(0, 1)(rng),
                                         rng()));
  int solved = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Graph& g = instances[i];
    OracleWindow bc = exact_bc(g).window;
    CoverCertificate bp = exact_bp(g);
    if (!bc.exact() || !bp.window.exact()) continue;
    ++solved;
    const long mc = complement_clique_count(g);
    c.expect(verify_partition(g, bp.certificate), "instance " + str(i) + ": bad partition");
    c.expect(bc.lower >= ceil_log2(bp.window.lower + 1),
             "instance " + str(i) + ": bc < log(bp+1)");
    c.expect(bp.window.lower <= std::max(0L, mc - 1),
             "instance " + str(i) + ": bp > mc-1");
  }
  c.expect(solved >= static_cast<int>(instances.size()) * 9 / 10,
           "too few instances solved: " + str(solved));
  for (int n = 2; n <= 8; ++n) {
    Graph k = complete_graph(n);
    c.expect(exact_bc(k).window.lower == ceil_log2(n) && exact_bc(k).window.exact(),
             "bc(K" + str(n) + ")");
    OracleWindow bp = exact_bp(k).window;
    c.expect(bp.exact() && bp.lower == n - 1, "bp(K" + str(n) + ")");
  }
  c.detail = str(solved) + "/" + str(instances.size()) + " co-chordal solved; K2..K8";
}

void cowindmill_covers(Check& c) {
  for (int m = 2; m <= 6; ++m)
    for (int k = 2; k <= 3; ++k) {
      Graph g = gen_cowindmill(m, k).graph;
      CoverResult r = cover_cochordal(g);
      const std::string tag = "m=" + str(m) + " k=" + str(k);
      c.expect(verify_cover(g, r.cover), tag + ": invalid cover");
      c.expect(static_cast<long>(r.cover.size()) == ceil_log2(m),
               tag + ": size " + str(r.cover.size()));
      c.expect(lb_log_mc(g) == ceil_log2(m), tag + ": lb_log_mc");
    }
  c.detail = "m = 2..6, k = 2..3";
}

void structural_suites(Check& c) {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  auto random_input = [&] {
    return random_graph(2 + static_cast<int>(rng() % 9), density(rng), rng);
  };
  int split_cases = 0, nonempty_cases = 0, disjoint_cases = 0;
  int containment_cases = 0, subtree_cases = 0;

  // Clique splits are bicliques and touch neither side's induced graph.
  while (disjoint_cases < 200) {
    Graph g = random_input();
    auto cliques = enumerate_maximal_cliques(complement(g));
    const int d = static_cast<int>(cliques.size());
    if (d < 2) continue;
    std::vector<int> I, J;
    for (int i = 0; i < d; ++i) (rng() % 2 ? I : J).push_back(i);
    if (I.empty() || J.empty()) continue;
    auto bq = clique_split_biclique(cliques, I, J);
    ++split_cases;
    if (!bq) continue;
    c.expect(is_biclique_subgraph(g, bq->left, bq->right), "split is not a biclique");
    VertexSet left_union, right_union;
    for (int i : I) left_union = sets::unite(left_union, cliques[i]);
    for (int j : J) right_union = sets::unite(right_union, cliques[j]);
    for (Vertex u : bq->left)
      for (Vertex v : bq->right) {
        c.expect(!(sets::contains(left_union, u) && sets::contains(left_union, v)),
                 "split edge inside the left union");
        c.expect(!(sets::contains(right_union, u) && sets::contains(right_union, v)),
                 "split edge inside the right union");
      }
    ++disjoint_cases;
  }

  // Two distinct maximal cliques of the complement always span an edge.
  while (nonempty_cases < 200) {
    Graph g = random_input();
    if (g.size() == 0) continue;
    auto cliques = enumerate_maximal_cliques(complement(g));
    for (std::size_t i = 0; i < cliques.size() && nonempty_cases < 200; ++i)
      for (std::size_t j = i + 1; j < cliques.size() && nonempty_cases < 200; ++j) {
        auto sub = induced_subgraph(g, sets::unite(cliques[i], cliques[j]));
        c.expect(sub.graph.size() >= 1, "two maximal cliques span no edge");
        ++nonempty_cases;
      }
  }

  // Every biclique sits inside the clique split built from its left side.
  while (containment_cases < 200) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 7), density(rng), rng);
    if (g.size() == 0) continue;
    auto cliques = enumerate_maximal_cliques(complement(g));
    auto bicliques = enumerate_maximal_bicliques(g);
    const auto& bq = bicliques[rng() % bicliques.size()];
    // Shrink it at random so non-maximal bicliques are covered too.
    VertexSet left{bq.left[rng() % bq.left.size()]};
    VertexSet right = bq.right;
    for (Vertex v : bq.left)
      if (rng() % 2) left = sets::unite(left, {v});
    auto [I, J] = split_for(cliques, left);
    c.expect(!I.empty() && !J.empty(), "containment split has an empty side");
    if (I.empty() || J.empty()) continue;
    auto big = clique_split_biclique(cliques, I, J);
    c.expect(big.has_value(), "containment split vanished");
    if (big)
      c.expect(sets::includes(big->left, left) && sets::includes(big->right, right),
               "biclique not contained in its clique split");
    ++containment_cases;
  }

  // Subtrees of clique trees are clique trees of what they cover.
  while (subtree_cases < 200) {
    Graph g = gen_random_chordal(2 + static_cast<int>(rng() % 18), density(rng), rng());
    CliqueTree t = clique_tree(g);
    auto [sub_graph, sub_tree] = restrict_to_subtree(g, t, random_subtree(t, rng));
    c.expect(verify_clique_tree(sub_graph, sub_tree), "subtree is not a clique tree");
    ++subtree_cases;
  }

  std::ostringstream ss;
  ss << "split " << split_cases << ", nonempty " << nonempty_cases
     << ", not-cover " << disjoint_cases << ", containment " << containment_cases
     << ", subtree " << subtree_cases;
  c.detail = ss.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "co-path covers are exact", 10, copath_exactness},
      {"AC2", "figure 2 level walkthrough", 1, fig2_walkthrough},
      {"AC3", "figure 3 counterexample", 5, fig3_counterexample},
      {"AC4", "log mc dominates log chi", 30, lower_bound_dominance},
      {"AC5", "log mc never exceeds bc", 300, log_mc_sandwich},
      {"AC6", "edge-cut partitions have mc - 1 members", 60, partition_guarantee},
      {"AC7", "optimal edge ranking is exact", 120, edge_ranking_exactness},
      {"AC8", "cover size within the ranking bound", 120, ranking_bound},
      {"AC9", "bp / bc window", 300, bp_bc_window_check},
      {"AC10", "co-windmill covers meet the log bound", 10, cowindmill_covers},
      {"AC11", "structural property suites", 300, structural_suites},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > crit.budget_seconds)
      check.expect(false, "took " + std::to_string(secs) + " s, limit " +
                              std::to_string(crit.budget_seconds) + " s");
    const bool ok = check.failed == 0;
    failed += !ok;
    std::printf("%-5s %s  %-42s %8.3f s  %s\n", crit.id, ok ? "PASS" : "FAIL",
                crit.title, secs, check.detail.c_str());
    for (const auto& f : check.failures) std::printf("      - %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
