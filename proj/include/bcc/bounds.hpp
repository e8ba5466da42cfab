#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcc/biclique.hpp"
#include "bcc/graph.hpp"
#include "bcc/oracle.hpp"

namespace bcc {

/// Smallest k with 2^k >= x; 0 for x <= 1.
int ceil_log2(long x);

/// Number of maximal cliques of the complement: read from a clique tree when
/// the complement is chordal, enumerated otherwise (SizeError above the cap).
long complement_clique_count(const Graph& g, const OracleBudget& budget = {});

/// ceil(log2 mc(G^c)).
int lb_log_mc(const Graph& g, const OracleBudget& budget = {});

struct ChiBound {
  int value = 0;       // ceil(log2 chi)
  long chi = 0;        // exact chromatic number, or a greedy upper bound
  bool certified = false;
};

/// ceil(log2 chi(G)). Beyond the oracle cap the greedy colouring count is
/// used and the result is flagged uncertified.
ChiBound lb_log_chi(const Graph& g, const OracleBudget& budget = {});

/// How two vertex-disjoint edges ab, cd are excused from conflicting.
enum class ConflictRule {
  /// {ac, bd} or {ad, bc} present: the edges lie on some 4-cycle, so one
  /// biclique can hold both. Gives a valid lower bound on bc.
  any_four_cycle,
  /// Excused only by an induced 4-cycle (the other diagonal pair absent).
  /// Reproduces omega(K5_E) = 2 but is not a lower bound in general.
  induced_four_cycle,
};

/// Vertex i is the i-th edge of Graph::edges(). Edges sharing an endpoint
/// never conflict.
Graph conflict_graph(const Graph& g,
                     ConflictRule rule = ConflictRule::any_four_cycle);

struct OmegaBound {
  int value = 0;
  bool certified = false;  // false when the clique search hit its budget
};

OmegaBound lb_omega_conflict(const Graph& g,
                             ConflictRule rule = ConflictRule::any_four_cycle,
                             const OracleBudget& budget = {});

struct Rational {
  long num = 0;
  long den = 1;
  long ceil() const { return den == 0 ? 0 : (num + den - 1) / den; }
  double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
};

/// |M(G)|^2 / |E(G)| with an exact maximum matching; 0/1 for edgeless graphs.
Rational lb_matching(const Graph& g);

struct BpWindow {
  long bp_upper = 0;                      // min(mc - 1, 2^bc - 1)
  std::optional<int> bc_lower_from_bp;    // ceil(log2(bp + 1)) for known bp
  bool consistent = true;
};

/// Ties bp and bc together on a co-chordal graph. Throws NotChordalError
/// when the complement is not chordal.
BpWindow bp_bc_window(const Graph& g, std::optional<long> bc,
                      std::optional<long> bp = std::nullopt);

enum class Provenance { exact, heuristic, conditional };
std::string to_string(Provenance p);

/// One number in a report. Empty `value` means not computed; `note` says why.
struct BoundValue {
  std::optional<long> value;
  Provenance provenance = Provenance::exact;
  bool certified = false;
  std::string note;
};

struct ReportOptions {
  OracleBudget budget;
  CoverOptions cover;
  bool run_oracles = true;
};

struct BoundReport {
  int n = 0;
  long m = 0;
  bool complement_chordal = false;

  BoundValue mc_complement;
  BoundValue lb_log_mc;
  BoundValue lb_log_chi;
  BoundValue lb_omega_conflict;          // any_four_cycle rule
  BoundValue omega_conflict_induced;     // informational only
  std::optional<Rational> lb_matching;
  BoundValue lb_matching_ceil;

  BoundValue ub_mc_minus_one;
  BoundValue ub_cover;                   // size of the verified cover
  BoundValue ub_edge_ranking;            // rank count of the clique tree
  bool ranking_optimal = false;
  bool all_at_most_two = false;
  std::optional<CoverResult> cover;

  std::optional<BpWindow> bp_window;
  std::optional<CoverCertificate> exact_bc;
  std::optional<CoverCertificate> exact_bp;

  /// Lower and upper bound agree without any oracle.
  bool bc_pinned = false;

  bool consistent = true;
  std::vector<std::string> violations;
};

/// Computes everything applicable; individual failures become notes.
BoundReport full_report(const Graph& g, const ReportOptions& opts = {});

}  // namespace bcc
