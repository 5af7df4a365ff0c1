#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grounded/graph.hpp"

namespace grounded {

enum class node_label : char { q = 'Q', s = 'S', p = 'P' };

struct tree_node {
  node_label label = node_label::q;
  vertex pole_s = 0;
  vertex pole_t = 0;
  int parent = -1;
  std::vector<int> children;
  edge e;  // Q-nodes only
};

// Alternating S/P tree with Q leaves, rooted at a Q-node with one child.
// Nodes are stored in preorder (root = 0), so every child index exceeds its
// parent's. S-node children chain from pole_s to pole_t; P-node children are
// ordered by smallest internal vertex, a Q child first.
struct decomposition_tree {
  std::vector<tree_node> nodes;
  int root = 0;

  const tree_node& operator[](int i) const { return nodes[i]; }
  int size() const { return static_cast<int>(nodes.size()); }
};

// Series/parallel reductions towards the root edge, then canonicalization.
// The root edge defaults to the lexicographically smallest edge.
// Throws not_biconnected, not_series_parallel.
decomposition_tree build_decomposition_tree(const graph& g);
decomposition_tree build_decomposition_tree(const graph& g, edge root_edge);

namespace detail {
// Same as above for callers that already checked biconnectivity.
decomposition_tree build_biconnected_tree(const graph& g, edge root_edge);
}  // namespace detail

struct tree_report {
  bool ok = true;
  std::vector<std::string> violations;
};

tree_report validate_tree(const decomposition_tree& t, const graph& g);

// Edges of the subgraph represented by node `i`.
std::vector<edge> subtree_edges(const decomposition_tree& t, int i);

// One node per line: `id label pole_s pole_t children...`.
void write_tree(std::ostream& os, const decomposition_tree& t);
std::string tree_to_string(const decomposition_tree& t);

}  // namespace grounded
