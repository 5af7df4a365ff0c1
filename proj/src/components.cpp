#include "grounded/components.hpp"

#include <algorithm>
#include <functional>

namespace grounded {

namespace {

void require_biconnected(const graph& g) {
  if (!is_biconnected(g)) throw error(error_kind::not_biconnected, "graph is not biconnected");
}

bool in_sorted(const std::vector<vertex>& xs, vertex v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

}  // namespace

std::vector<separation_pair> separation_pairs(const graph& g) {
  require_biconnected(g);
  std::vector<separation_pair> out;
  std::vector<char> removed(g.n(), 0);
  for (vertex s = 0; s < g.n(); ++s) {
    removed[s] = 1;
    for (vertex t = s + 1; t < g.n(); ++t) {
      removed[t] = 1;
      if (components_without(g, removed).size() > 1) out.emplace_back(s, t);
      removed[t] = 0;
    }
    removed[s] = 0;
  }
  return out;
}

std::vector<edge> transitive_edges(const graph& g) {
  std::vector<edge> out;
  for (const separation_pair& p : separation_pairs(g))
    if (g.adjacent(p.s, p.t)) out.emplace_back(p.s, p.t);
  return out;
}

std::vector<component_info> components_of_pair(const graph& g, vertex s, vertex t) {
  if (s == t || s < 0 || t < 0 || s >= g.n() || t >= g.n())
    throw error(error_kind::invalid_argument, "bad pole pair");
  std::vector<char> removed(g.n(), 0);
  removed[s] = removed[t] = 1;
  auto comps = components_without(g, removed);
  if (comps.size() < 2)
    throw error(error_kind::not_separation_pair,
                "(" + g.name(s) + "," + g.name(t) + ") does not disconnect the graph");
  std::vector<component_info> out;
  out.reserve(comps.size());
  for (auto& comp : comps) {
    component_info c;
    c.s = s;
    c.t = t;
    c.internal = std::move(comp);
    c.heavy = classify_heavy(c, g);
    out.push_back(std::move(c));
  }
  return out;
}

bool classify_heavy(const component_info& c, const graph& g) {
  for (vertex x : c.internal)
    if (!g.adjacent(x, c.s) && !g.adjacent(x, c.t)) return true;
  return false;
}

bool classify_critical(const component_info& c, const graph& g, int max_internal) {
  if (static_cast<int>(c.internal.size()) > max_internal)
    throw error(error_kind::instance_too_large,
                "component has " + std::to_string(c.internal.size()) + " internal vertices");
  const vertex s = c.s, t = c.t;
  std::vector<char> inside(g.n(), 0), used(g.n(), 0);
  for (vertex x : c.internal) inside[x] = 1;

  // Second half: v .. t, interior avoids N(s).
  std::function<bool(vertex)> to_t = [&](vertex x) -> bool {
    for (vertex y : g.neighbors(x)) {
      if (y == t) return true;
      if (!inside[y] || used[y] || g.adjacent(y, s)) continue;
      used[y] = 1;
      bool ok = to_t(y);
      used[y] = 0;
      if (ok) return true;
    }
    return false;
  };

  for (vertex v : c.internal) {
    if (g.adjacent(v, s) || g.adjacent(v, t)) continue;
    // First half: s .. v, interior avoids N(t).
    std::function<bool(vertex)> to_v = [&](vertex x) -> bool {
      for (vertex y : g.neighbors(x)) {
        if (!inside[y] || used[y]) continue;
        if (y == v) {
          used[v] = 1;
          bool ok = to_t(v);
          used[v] = 0;
          if (ok) return true;
          continue;
        }
        if (g.adjacent(y, t)) continue;
        used[y] = 1;
        bool ok = to_v(y);
        used[y] = 0;
        if (ok) return true;
      }
      return false;
    };
    if (to_v(s)) return true;
  }
  return false;
}

light_shape classify_light_shape(const component_info& c, const graph& g) {
  const vertex s = c.s, t = c.t;
  auto fail = [&](const std::string& why) -> error {
    return error(error_kind::shape_violation,
                 "component at (" + g.name(s) + "," + g.name(t) + "): " + why);
  };
  if (c.internal.empty()) throw fail("no internal vertices");
  if (classify_heavy(c, g)) throw fail("component is heavy");

  if (c.internal.size() == 1) {
    vertex w = c.internal[0];
    if (g.adjacent(w, s) && g.adjacent(w, t)) return {shape_kind::path_len2, w, {}};
    throw fail("single internal vertex not adjacent to both poles");
  }

  // Exactly the edges hub-pole, leaf-other pole and leaf-hub, nothing else.
  auto try_fan = [&](vertex hub_pole, vertex leaf_pole, shape_kind kind) -> std::optional<light_shape> {
    std::vector<vertex> hubs;
    for (vertex x : c.internal)
      if (g.adjacent(x, hub_pole)) hubs.push_back(x);
    if (hubs.size() != 1) return std::nullopt;
    vertex hub = hubs[0];
    if (g.adjacent(hub, leaf_pole)) return std::nullopt;
    light_shape shape{kind, hub, {}};
    for (vertex x : c.internal) {
      if (x == hub) continue;
      if (!g.adjacent(x, leaf_pole) || !g.adjacent(x, hub)) return std::nullopt;
      for (vertex y : g.neighbors(x))
        if (y != leaf_pole && y != hub) return std::nullopt;
      shape.leaves.push_back(x);
    }
    for (vertex y : g.neighbors(hub))
      if (y != hub_pole && !in_sorted(c.internal, y)) return std::nullopt;
    return shape;
  };

  if (auto shape = try_fan(t, s, shape_kind::fan_at_t)) return *shape;
  if (auto shape = try_fan(s, t, shape_kind::fan_at_s)) return *shape;
  throw fail("matches none of the light shapes");
}

}  // namespace grounded
