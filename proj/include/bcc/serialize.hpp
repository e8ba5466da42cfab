#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcc/biclique.hpp"
#include "bcc/chordal.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc {

// Clique tree:  "K<i>: v1 v2 ..." per node, then "T: i j | mid: ..." per edge.
void write_clique_tree(std::ostream& out, const CliqueTree& t);

// Ranking: one "u v : rank" line per tree edge, in edge-id order.
void write_ranking(std::ostream& out, const Tree& t, const EdgeRanking& r);

// Cover: "c <text>" metadata lines, then one "L: ... | R: ..." per biclique.
void write_cover(std::ostream& out, const BicliqueList& cover,
                 const std::vector<std::string>& comments = {});

/// Parses write_cover output. Comments are skipped; throws ParseError on
/// malformed lines.
BicliqueList read_cover(std::istream& in);
BicliqueList read_cover_file(const std::string& path);

nlohmann::json to_json(const Biclique& b);
nlohmann::json to_json(const BicliqueList& cover);
nlohmann::json to_json(const CliqueTree& t);

/// Accepts the array form written by to_json(BicliqueList).
BicliqueList cover_from_json(const nlohmann::json& j);

}  // namespace bcc
