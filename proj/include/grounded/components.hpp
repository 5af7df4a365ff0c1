#pragma once

#include <optional>
#include <vector>

#include "grounded/graph.hpp"

namespace grounded {

// Unordered vertex pair stored with s < t.
struct separation_pair {
  vertex s = 0;
  vertex t = 0;

  separation_pair() = default;
  separation_pair(vertex a, vertex b) : s(a < b ? a : b), t(a < b ? b : a) {}

  friend bool operator==(const separation_pair&, const separation_pair&) = default;
  friend auto operator<=>(const separation_pair&, const separation_pair&) = default;
};

// Light components come in three shapes relative to poles (s, t):
//   path_len2: a single vertex `hub` adjacent to both poles;
//   fan_at_t:  `hub` adjacent to t, every leaf adjacent to `hub` and s;
//   fan_at_s:  `hub` adjacent to s, every leaf adjacent to `hub` and t.
enum class shape_kind { path_len2, fan_at_t, fan_at_s };

struct light_shape {
  shape_kind kind = shape_kind::path_len2;
  vertex hub = 0;
  std::vector<vertex> leaves;  // sorted; empty for path_len2

  friend bool operator==(const light_shape&, const light_shape&) = default;
};

struct component_info {
  vertex s = 0;  // poles, in the caller's orientation
  vertex t = 0;
  std::vector<vertex> internal;  // sorted
  bool heavy = false;
  std::optional<bool> critical;
  std::optional<light_shape> shape;
};

// Brute force over all vertex pairs. Throws not_biconnected.
std::vector<separation_pair> separation_pairs(const graph& g);

// Edges whose endpoints form a separation pair (brute force). Throws not_biconnected.
std::vector<edge> transitive_edges(const graph& g);

// One record per connected component of G - s - t, ordered by smallest
// internal vertex, heavy flag filled. Throws not_separation_pair when G - s - t
// is connected.
std::vector<component_info> components_of_pair(const graph& g, vertex s, vertex t);

// Heavy: some internal vertex is adjacent to neither pole.
bool classify_heavy(const component_info& c, const graph& g);

// Exhaustive search for a witness vertex v (adjacent to neither pole) and a
// simple path s .. v .. t inside the component whose s-side interior avoids t's
// neighbourhood and whose t-side interior avoids s's neighbourhood.
// Throws instance_too_large above `max_internal` internal vertices.
bool classify_critical(const component_info& c, const graph& g, int max_internal = 20);

// Throws shape_violation when the component is heavy or fits no light shape.
// A single-leaf fan (a path s-a-b-t) is reported as fan_at_t.
light_shape classify_light_shape(const component_info& c, const graph& g);

}  // namespace grounded
