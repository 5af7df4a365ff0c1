#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grounded/decomposition.hpp"

namespace grounded {

// ell[i]: longest pole-to-pole path inside G(node i);
// ell_prime[i]: longest pole-to-pole path in G - G(node i).
struct length_annotation {
  std::vector<std::int64_t> ell;
  std::vector<std::int64_t> ell_prime;
};

std::vector<std::int64_t> bottom_up_lengths(const decomposition_tree& t);
std::vector<std::int64_t> top_down_lengths(const decomposition_tree& t, const std::vector<std::int64_t>& ell);
length_annotation annotate(const decomposition_tree& t);

struct p_node_entry {
  int node = 0;
  vertex s = 0;
  vertex t = 0;
  std::vector<std::int64_t> lengths;  // children's ell, then ell_prime
  int heavy_entries = 0;              // entries greater than three
};

struct heaviness_report {
  std::vector<p_node_entry> p_nodes;
  bool at_most_two_heavy = true;
  std::optional<std::size_t> witness;  // index into p_nodes
  // Transitive edges make the verdict advisory only.
  std::vector<edge> transitive;
  bool advisory = false;
};

heaviness_report check_two_heavy(const decomposition_tree& t, const length_annotation& lengths);

// Transitive edges read off the tree: Q children of P-nodes, plus the root
// edge when the root's child is a P-node.
std::vector<edge> tree_transitive_edges(const decomposition_tree& t);

// The complete fast pipeline. Errors are reported in the result, not thrown.
struct decision {
  bool biconnected = false;
  bool series_parallel = false;
  std::optional<decomposition_tree> tree;
  std::optional<length_annotation> lengths;
  std::optional<heaviness_report> report;

  // Representable as a grounded L-⌐L / outerstring graph, with a definitive
  // verdict (requires no transitive edges).
  bool representable() const {
    return biconnected && series_parallel && report && !report->advisory && report->at_most_two_heavy;
  }
};

decision decide(const graph& g);

}  // namespace grounded
