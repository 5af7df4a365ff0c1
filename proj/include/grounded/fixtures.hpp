#pragma once

#include "grounded/graph.hpp"

namespace grounded {

// The 21-vertex graph that has a grounded L-⌐L representation but no grounded
// L-representation. Vertex names: s, t, u, v1..v5, w1..w5, x1, x2, x4, x5,
// y1, y2, y4, y5.
graph fig5_fixture();

}  // namespace grounded
