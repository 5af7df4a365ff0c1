#include "grounded/oracle.hpp"

#include <functional>

namespace grounded {

heaviness_witness oracle_heaviness(const graph& g, int bound) {
  if (g.n() > bound)
    throw error(error_kind::instance_too_large,
                std::to_string(g.n()) + " vertices exceed the oracle bound " + std::to_string(bound));
  heaviness_witness out;
  for (const separation_pair& p : separation_pairs(g)) {
    int k = 0;
    for (const component_info& c : components_of_pair(g, p.s, p.t)) k += c.heavy;
    if (!out.witness || k > out.k) {
      out.k = k;
      out.witness = p;
    }
  }
  return out;
}

int oracle_critical_count(const graph& g, vertex s, vertex t, int max_internal) {
  std::vector<component_info> comps;
  try {
    comps = components_of_pair(g, s, t);
  } catch (const error& e) {
    if (e.kind() != error_kind::not_separation_pair) throw;
    return 0;
  }
  int count = 0;
  for (const component_info& c : comps) count += classify_critical(c, g, max_internal);
  return count;
}

int oracle_longest_path(const graph& g, vertex s, vertex t, int bound) {
  if (g.n() > bound)
    throw error(error_kind::instance_too_large,
                std::to_string(g.n()) + " vertices exceed the oracle bound " + std::to_string(bound));
  std::vector<char> used(g.n(), 0);
  int best = -1;
  std::function<void(vertex, int)> walk = [&](vertex v, int len) {
    if (v == t) {
      best = std::max(best, len);
      return;
    }
    used[v] = 1;
    for (vertex w : g.neighbors(v))
      if (!used[w]) walk(w, len + 1);
    used[v] = 0;
  };
  walk(s, 0);
  return best;
}

}  // namespace grounded
