#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grounded/error.hpp"

namespace grounded {

using vertex = int;

// Undirected edge with u < v.
struct edge {
  vertex u = 0;
  vertex v = 0;

  edge() = default;
  edge(vertex a, vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const edge&, const edge&) = default;
  friend auto operator<=>(const edge&, const edge&) = default;
};

// Simple undirected graph on dense ids 0..n-1. Immutable after construction.
class graph {
 public:
  graph() = default;

  // Throws error_kind::invalid_argument on self-loops, duplicate edges or
  // out-of-range endpoints.
  graph(int n, const std::vector<std::pair<vertex, vertex>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  // Sorted lexicographically.
  const std::vector<edge>& edges() const { return edges_; }

  // Sorted ascending.
  const std::vector<vertex>& neighbors(vertex v) const { return adj_[v]; }
  int degree(vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(vertex a, vertex b) const;

  // Display names; defaults to the decimal id.
  std::string name(vertex v) const;
  void set_names(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }

  // Ids as they appeared in the input file (identity unless remapped).
  std::int64_t external_id(vertex v) const;
  void set_external_ids(std::vector<std::int64_t> ids);
  const std::vector<std::int64_t>& external_ids() const { return external_ids_; }

  // Subgraph induced by `keep` (in the given order); vertex i of the result is keep[i].
  graph induced(const std::vector<vertex>& keep) const;

  friend bool operator==(const graph& a, const graph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<vertex>> adj_;
  std::vector<edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::int64_t> external_ids_;
};

bool is_connected(const graph& g);

// Connected, at least 3 vertices, no cutvertex.
bool is_biconnected(const graph& g);

// Connected components of g minus the vertices flagged in `removed`;
// each component is sorted, components ordered by smallest member.
std::vector<std::vector<vertex>> components_without(const graph& g, const std::vector<char>& removed);

// Common families, used by tests, the corpus and the CLI.
graph make_cycle(int n);
graph make_path(int n);
graph make_complete(int n);
// Internally disjoint s-t paths with the given edge lengths; s = 0, t = 1.
graph make_theta(const std::vector<int>& lengths);

}  // namespace grounded
