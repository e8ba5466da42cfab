#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcc/graph.hpp"
#include "bcc/tree_rank.hpp"

namespace bcc {

struct ExpectedValues {
  std::optional<long> bc;
  std::optional<long> mc_complement;
  std::string source;  // where the expectation comes from
};

struct NamedInstance {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;  // labels[v] names vertex v
  ExpectedValues expected;
};

/// Complement of the path on n >= 2 vertices, labelled a, b, c, ...
NamedInstance gen_copath(int n);

/// Complement of the windmill: m copies of K_k glued at vertex 0.
NamedInstance gen_cowindmill(int m, int k);

/// "fig1_c4c", "fig1_k5", "fig2", "fig3". Throws InputError otherwise.
NamedInstance gen_fig_graph(const std::string& id);

/// Chordal graph by repeated simplicial attachment. density in [0, 1]
/// bounds the attachment clique at 1 + floor(density * (n - 1)) vertices;
/// 0 gives a tree, 1 the complete graph.
Graph gen_random_chordal(int n, double density, std::uint64_t seed);

/// Complement of a chordal graph whose clique tree is `shape`, node i
/// holding a clique of clique_sizes[i] vertices and edge j of `shape`
/// carrying a middle set of middle_sizes[j] vertices. Every vertex sits in
/// one or two maximal cliques. Vertex labels are shuffled by `seed`.
/// Throws InputError when the sizes do not fit together.
NamedInstance gen_two_membership_cochordal(const Tree& shape,
                                           const std::vector<int>& clique_sizes,
                                           const std::vector<int>& middle_sizes,
                                           std::uint64_t seed);

Tree path_tree(int nodes);
Tree star_tree(int leaves);
/// Spine of `spine` nodes, each carrying `legs` pendant leaves.
Tree caterpillar_tree(int spine, int legs);
/// Uniform labelled tree from a random Pruefer sequence.
Tree random_tree(int nodes, std::uint64_t seed);

/// One representative per isomorphism class of trees on `nodes` nodes.
std::vector<Tree> enumerate_free_trees(int nodes);

/// Lower-case letters a..z, then v26, v27, ...
std::vector<std::string> default_labels(int n);

}  // namespace bcc
