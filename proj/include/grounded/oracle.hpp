#pragma once

#include <optional>

#include "grounded/components.hpp"

namespace grounded {

// Brute-force ground truth. Uses the graph type and the definition-level
// classifiers only, never decomposition trees.

struct heaviness_witness {
  int k = 0;  // max heavy components over all separation pairs
  std::optional<separation_pair> witness;
};

// Throws instance_too_large above `bound` vertices, not_biconnected.
heaviness_witness oracle_heaviness(const graph& g, int bound = 16);

// Critical components of the pair (s, t); 0 when (s, t) is not a separation pair.
int oracle_critical_count(const graph& g, vertex s, vertex t, int max_internal = 20);

// Longest simple s-t path (edges) by backtracking; -1 when t is unreachable.
// Throws instance_too_large above `bound` vertices.
int oracle_longest_path(const graph& g, vertex s, vertex t, int bound = 16);

}  // namespace grounded
