#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grounded/graph.hpp"

namespace grounded {

using coord = std::int64_t;

enum class orientation { l, mirrored_l };

// A 1-bend curve: vertical segment (anchor_x, anchor_y) -> (anchor_x, depth_y),
// then a straight segment to (tip_x, tip_y). y grows downward, the ground line
// is y = 0. A well-formed grounded L or ⌐L has anchor_y == 0 and
// tip_y == depth_y > 0; the extra coordinates exist so the verifier can
// describe malformed input.
struct grounded_curve {
  vertex v = 0;
  orientation o = orientation::l;
  coord anchor_x = 0;
  coord depth_y = 1;
  coord tip_x = 1;
  coord anchor_y = 0;
  coord tip_y = 1;

  bool horizontal_tail() const { return tip_y == depth_y; }

  friend bool operator==(const grounded_curve&, const grounded_curve&) = default;
};

grounded_curve make_curve(vertex v, orientation o, coord anchor_x, coord depth_y, coord tip_x);

struct representation {
  std::vector<grounded_curve> curves;

  friend bool operator==(const representation&, const representation&) = default;
};

struct crossing {
  vertex a = 0;  // a < b
  vertex b = 0;
  int count = 0;

  friend bool operator==(const crossing&, const crossing&) = default;
  friend auto operator<=>(const crossing&, const crossing&) = default;
};

// Pairs with a positive number of transversal intersections, sorted.
// Throws degenerate_position on shared anchors or depths, or when two curves
// touch without crossing. The parallel kernel uses OpenMP; the serial one is
// the reference it is tested against.
std::vector<crossing> crossings(const representation& rep);
std::vector<crossing> crossings_serial(const representation& rep);

// Intersections between two curves, counted segment pair by segment pair.
// Throws degenerate_position on touching or overlapping segments.
int curve_crossings(const grounded_curve& a, const grounded_curve& b);

enum class verify_mode { l_and_mirrored, l_only };

struct verification_report {
  bool grounded = true;            // anchored on y = 0, strictly below elsewhere
  bool shape_ok = true;            // bend is the bottommost point, orientation matches the tip side
  bool axis_aligned = true;        // second segment horizontal
  bool adjacency_ok = true;        // crossing <=> edge
  bool one_string_ok = true;       // at most one crossing per pair
  bool general_position_ok = true; // distinct anchors, distinct depths, no touching

  std::vector<vertex> off_ground;
  std::vector<vertex> bad_shape;
  std::vector<vertex> not_axis_aligned;
  std::vector<edge> missing;  // edges whose curves do not cross
  std::vector<edge> extra;    // crossings between non-adjacent vertices
  std::vector<edge> multiple; // pairs crossing more than once
  std::string degeneracy;

  bool ok() const {
    return grounded && shape_ok && axis_aligned && adjacency_ok && one_string_ok && general_position_ok;
  }
};

// Throws vertex_mismatch unless rep has exactly one curve per vertex of g.
verification_report verify(const graph& g, const representation& rep,
                           verify_mode mode = verify_mode::l_and_mirrored);

std::string describe(const verification_report& r, const graph& g);

}  // namespace grounded
