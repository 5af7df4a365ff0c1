#pragma once

#include <list>
#include <vector>

#include "grounded/components.hpp"
#include "grounded/geometry.hpp"
#include "grounded/heaviness.hpp"

namespace grounded {

struct pair_choice {
  vertex s = 0;
  vertex t = 0;
  int k = 0;  // heavy components at (s, t)
  std::vector<component_info> components;
  std::size_t g1 = 0;  // indices into components
  std::size_t g2 = 1;
};

// Pair with the most heavy components, read off P-node annotations and S-node
// chains; ties broken by smallest (s, t). G1 and G2 are the heavy components
// first, then the longest pole paths. Throws no_separation_pair (triangle) and
// too_heavy (k >= 3).
pair_choice choose_pair(const graph& g, const decomposition_tree& t, const length_annotation& lengths);

// Longest s-t path inside component c (s first), taken from the component's own
// decomposition tree. Throws not_induced if the path has a chord in g.
std::vector<vertex> longest_pole_path(const graph& g, const component_info& c);

// The heavy cycle is s = cycle[0], p1 up to t, then p2 back towards s; `hub` is
// s's neighbour on p2. Anchor order is s, hub, cycle[1], ..., cycle[n-2].
struct heavy_cycle_plan {
  vertex s = 0;
  vertex t = 0;
  int k = 0;
  std::vector<vertex> p1, p2;  // s ... t
  std::vector<vertex> cycle;
  std::vector<vertex> p;       // cycle minus s, left to right by anchor
  std::vector<int> position;   // per graph vertex: index in cycle, or -1

  vertex hub() const { return cycle.back(); }
  int t_index() const { return static_cast<int>(p1.size()) - 1; }
};

heavy_cycle_plan plan_heavy_cycle(const graph& g, const pair_choice& choice);

// A connected component of G minus the cycle. For hub components u is the hub
// and v the other attachment; otherwise u precedes v in cycle order.
struct residual_component {
  std::vector<vertex> vertices;
  vertex attach_u = 0;
  vertex attach_v = 0;
  bool at_hub = false;
  light_shape shape;  // with poles (attach_u, attach_v)
};

// Throws insertion_failure when a component does not attach to exactly two
// vertices of one path, shape_violation when it is not light.
std::vector<residual_component> find_residuals(const graph& g, const heavy_cycle_plan& plan);

// Inner before enclosing, left before right; hub components last, the one
// whose second attachment is closest to the hub first. Throws nesting_violation on crossing intervals.
std::vector<std::size_t> order_residuals(const heavy_cycle_plan& plan, const std::vector<residual_component>& rs);

// Two ordered sequences (anchors left to right, bends top to bottom) that are
// normalized to integer coordinates at the end. Markers occupy anchor slots
// without producing curves.
class layout {
 public:
  explicit layout(int n);

  int add_curve(vertex v, orientation o);
  int add_marker();
  int curve_of(vertex v) const { return curve_[v]; }

  void x_back(int id);
  void x_after(int ref, const std::vector<int>& ids);
  void x_before(int ref, const std::vector<int>& ids);
  void y_back(int id);
  void y_before(int ref, const std::vector<int>& ids);  // immediately above ref
  void y_after(int ref, const std::vector<int>& ids);   // immediately below ref

  void tip_past(int id, int target);
  void tip_minimal(int id);

  representation normalize() const;

 private:
  struct slot {
    vertex v = -1;  // -1 for markers
    orientation o = orientation::l;
    int tip_target = -1;  // -1: one unit past the own anchor
    std::list<int>::iterator x_it, y_it;
  };
  std::vector<slot> slots_;
  std::vector<int> curve_;
  std::list<int> xs_, ys_;
};

// Which bend level fan-shaped hub components use: just above succ(v)
// (default) or just above v.
enum class hub_depth { successor, attachment };

struct cycle_drawing {
  layout lay;
  std::vector<int> marker;       // per cycle index
  std::vector<int> hub_bipolar;  // per cycle index: first bipolar curve placed there, or -1
  std::vector<int> front_first;  // per cycle index: leftmost curve anchored left of s, or -1
};

cycle_drawing draw_heavy_cycle(const graph& g, const heavy_cycle_plan& plan);

void insert_light_component(cycle_drawing& d, const heavy_cycle_plan& plan, const residual_component& r,
                            hub_depth reading = hub_depth::successor);

struct construct_options {
  bool verify_result = true;
  hub_depth reading = hub_depth::successor;
};

// Throws not_biconnected, not_series_parallel, transitive_edges_present,
// too_heavy, insertion_failure.
representation construct_representation(const graph& g, const construct_options& options = {});

}  // namespace grounded
