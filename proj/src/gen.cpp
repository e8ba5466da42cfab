#include "bcc/gen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bcc/bounds.hpp"
#include "bcc/error.hpp"

namespace bcc {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v)
    out.push_back(v < 26 ? std::string(1, char('a' + v))
                         : "v" + std::to_string(v));
  return out;
}

NamedInstance gen_copath(int n) {
  if (n < 2) throw InputError("co-path needs n >= 2");
  std::vector<Edge> path;
  for (int v = 0; v + 1 < n; ++v) path.push_back({v, v + 1});
  NamedInstance out{"copath" + std::to_string(n),
                    complement(Graph(n, path)),
                    default_labels(n),
                    {ceil_log2(n - 1), n - 1, "co-path family"}};
  return out;
}

NamedInstance gen_cowindmill(int m, int k) {
  if (m < 1 || k < 2) throw InputError("co-windmill needs m >= 1, k >= 2");
  const int n = 1 + m * (k - 1);
  std::vector<Edge> windmill;
  for (int c = 0; c < m; ++c) {
    std::vector<Vertex> blade{0};
    for (int i = 0; i < k - 1; ++i) blade.push_back(1 + c * (k - 1) + i);
    for (std::size_t i = 0; i < blade.size(); ++i)
      for (std::size_t j = i + 1; j < blade.size(); ++j)
        windmill.push_back({blade[i], blade[j]});
  }
  return {"cowindmill_" + std::to_string(m) + "_" + std::to_string(k),
          complement(Graph(n, windmill)),
          default_labels(n),
          {ceil_log2(m), m, "co-windmill family"}};
}

NamedInstance gen_fig_graph(const std::string& id) {
  if (id == "fig1_c4c") {
    std::vector<Edge> e{{0, 2}, {1, 3}};
    return {id, Graph(4, e), default_labels(4), {1, 4, "figure 1"}};
  }
  if (id == "fig1_k5") {
    std::vector<Edge> e;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) e.push_back({u, v});
    return {id, Graph(5, e), default_labels(5), {3, 5, "figure 1"}};
  }
  if (id == "fig2") {
    NamedInstance out = gen_copath(5);
    out.name = id;
    out.expected.source = "figure 2";
    return out;
  }
  if (id == "fig3") {
    // a..f = 0..5; edges ad ae af be bf cf
    std::vector<Edge> e{{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}};
    return {id, Graph(6, e), default_labels(6), {3, 4, "figure 3"}};
  }
  throw InputError("unknown figure id '" + id + "'");
}

Graph gen_random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("random chordal graph needs n >= 1");
  density = std::clamp(density, 0.0, 1.0);
  const int cap = 1 + static_cast<int>(density * (n - 1));
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> adj(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    // Greedy random clique among earlier vertices, seeded at a random one.
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int target = std::min(cap, static_cast<int>(v));
    VertexSet clique{pick(rng)};
    VertexSet candidates = adj[clique[0]];
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (Vertex c : candidates) {
      if (static_cast<int>(clique.size()) >= target) break;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) {
            return sets::contains(adj[x], c);
          }))
        clique.push_back(c);
    }
    for (Vertex c : clique) {
      edges.push_back({c, v});
      adj[c].insert(std::upper_bound(adj[c].begin(), adj[c].end(), v), v);
      adj[v].push_back(c);
    }
    std::sort(adj[v].begin(), adj[v].end());
  }
  return Graph(n, edges);
}

NamedInstance gen_two_membership_cochordal(const Tree& shape,
                                           const std::vector<int>& clique_sizes,
                                           const std::vector<int>& middle_sizes,
                                           std::uint64_t seed) {
  const int d = shape.node_count();
  if (static_cast<int>(clique_sizes.size()) != d ||
      static_cast<int>(middle_sizes.size()) != shape.edge_count())
    throw InputError("size lists do not match the tree shape");
  std::vector<int> shared(d, 0);
  for (int j = 0; j < shape.edge_count(); ++j) {
    if (middle_sizes[j] < 1) throw InputError("middle sets must be nonempty");
    shared[shape.edge(j).u] += middle_sizes[j];
    shared[shape.edge(j).v] += middle_sizes[j];
  }
  std::vector<int> own(d);
  for (int i = 0; i < d; ++i) {
    own[i] = clique_sizes[i] - shared[i];
    const int degree = static_cast<int>(shape.incident(i).size());
    // A leaf (or lone node) needs a private vertex to stay maximal.
    if (own[i] < 0 || (degree <= 1 && own[i] < 1))
      throw InputError("clique " + std::to_string(i) +
                       " too small for its middle sets");
  }

  int n = std::accumulate(own.begin(), own.end(), 0) +
          std::accumulate(middle_sizes.begin(), middle_sizes.end(), 0);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<VertexSet> cliques(d);
  int next = 0;
  for (int i = 0; i < d; ++i)
    for (int c = 0; c < own[i]; ++c) cliques[i].push_back(label[next++]);
  for (int j = 0; j < shape.edge_count(); ++j)
    for (int c = 0; c < middle_sizes[j]; ++c) {
      cliques[shape.edge(j).u].push_back(label[next]);
      cliques[shape.edge(j).v].push_back(label[next]);
      ++next;
    }
  std::vector<Edge> edges;
  for (const auto& k : cliques)
    for (std::size_t a = 0; a < k.size(); ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b)
        edges.push_back({std::min(k[a], k[b]), std::max(k[a], k[b])});
  Graph chordal(n, edges);
  return {"twomember_" + std::to_string(d) + "_" + std::to_string(seed),
          complement(chordal),
          default_labels(n),
          {std::nullopt, d, "two-membership construction"}};
}

Tree path_tree(int nodes) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < nodes; ++v) e.push_back({v, v + 1});
  return Tree(nodes, e);
}

Tree star_tree(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Tree(leaves + 1, e);
}

Tree caterpillar_tree(int spine, int legs) {
  if (spine < 1 || legs < 0) throw InputError("bad caterpillar shape");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < spine; ++v) e.push_back({v, v + 1});
  int next = spine;
  for (int v = 0; v < spine; ++v)
    for (int l = 0; l < legs; ++l) e.push_back({v, next++});
  return Tree(next, e);
}

Tree random_tree(int nodes, std::uint64_t seed) {
  if (nodes < 1) throw InputError("tree needs at least one node");
  if (nodes <= 2) return path_tree(nodes);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::vector<int> code(nodes - 2);
  for (int& x : code) x = pick(rng);
  std::vector<int> degree(nodes, 1);
  for (int x : code) ++degree[x];
  std::set<int> leaves;
  for (int v = 0; v < nodes; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> e;
  for (int x : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--degree[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  e.push_back({a, b});
  return Tree(nodes, e);
}

namespace {

// AHU encoding rooted at `root`.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int root,
                        int parent) {
  std::vector<std::string> kids;
  for (int c : adj[root])
    if (c != parent) kids.push_back(rooted_code(adj, c, root));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

std::string canonical_code(const std::vector<std::vector<int>>& adj) {
  // Root at the centre (or both centres) so the code is unique.
  const int n = static_cast<int>(adj.size());
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Tree> enumerate_free_trees(int nodes) {
  if (nodes < 1) return {};
  std::vector<std::vector<Edge>> level{{}};
  for (int size = 1; size < nodes; ++size) {
    std::map<std::string, std::vector<Edge>> grown;
    for (const auto& edges : level)
      for (int attach = 0; attach < size; ++attach) {
        auto next = edges;
        next.push_back({attach, size});
        std::vector<std::vector<int>> adj(size + 1);
        for (auto [u, v] : next) {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
        grown.emplace(canonical_code(adj), std::move(next));
      }
    level.clear();
    for (auto& [code, edges] : grown) level.push_back(std::move(edges));
  }
  std::vector<Tree> out;
  for (auto& edges : level) out.emplace_back(nodes, std::move(edges));
  return out;
}

}  // namespace bcc
