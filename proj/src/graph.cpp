#include "grounded/graph.hpp"

#include <algorithm>
#include <numeric>

namespace grounded {

std::string_view to_string(error_kind kind) {
  switch (kind) {
    case error_kind::parse: return "ParseError";
    case error_kind::invalid_argument: return "InvalidArgument";
    case error_kind::not_biconnected: return "NotBiconnected";
    case error_kind::not_series_parallel: return "NotSeriesParallel";
    case error_kind::not_separation_pair: return "NotSeparationPair";
    case error_kind::no_separation_pair: return "NoSeparationPair";
    case error_kind::instance_too_large: return "InstanceTooLarge";
    case error_kind::shape_violation: return "ShapeViolation";
    case error_kind::transitive_edges_present: return "TransitiveEdgesPresent";
    case error_kind::too_heavy: return "TooHeavy";
    case error_kind::not_induced: return "NotInduced";
    case error_kind::nesting_violation: return "NestingViolation";
    case error_kind::insertion_failure: return "InsertionFailure";
    case error_kind::degenerate_position: return "DegeneratePosition";
    case error_kind::vertex_mismatch: return "VertexMismatch";
  }
  return "Error";
}

graph::graph(int n, const std::vector<std::pair<vertex, vertex>>& edges) {
  if (n < 0) throw error(error_kind::invalid_argument, "negative vertex count");
  adj_.resize(n);
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw error(error_kind::invalid_argument,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    if (a == b) throw error(error_kind::invalid_argument, "self-loop at " + std::to_string(a));
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw error(error_kind::invalid_argument,
                "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  std::vector<int> deg(n, 0);
  for (const edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < n; ++v) adj_[v].reserve(deg[v]);
  // Edges are sorted, so pushing in order keeps every list sorted.
  for (const edge& e : edges_) adj_[e.u].push_back(e.v);
  for (const edge& e : edges_) adj_[e.v].push_back(e.u);
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool graph::adjacent(vertex a, vertex b) const {
  const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), other);
}

std::string graph::name(vertex v) const {
  if (v >= 0 && v < static_cast<int>(names_.size()) && !names_[v].empty()) return names_[v];
  return std::to_string(external_id(v));
}

void graph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n())
    throw error(error_kind::invalid_argument, "name list size differs from vertex count");
  names_ = std::move(names);
}

std::int64_t graph::external_id(vertex v) const {
  if (v >= 0 && v < static_cast<int>(external_ids_.size())) return external_ids_[v];
  return v;
}

void graph::set_external_ids(std::vector<std::int64_t> ids) {
  if (!ids.empty() && static_cast<int>(ids.size()) != n())
    throw error(error_kind::invalid_argument, "id list size differs from vertex count");
  external_ids_ = std::move(ids);
}

graph graph::induced(const std::vector<vertex>& keep) const {
  std::vector<int> pos(n(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;
  std::vector<std::pair<vertex, vertex>> es;
  for (const edge& e : edges_)
    if (pos[e.u] >= 0 && pos[e.v] >= 0) es.emplace_back(pos[e.u], pos[e.v]);
  graph h(static_cast<int>(keep.size()), es);
  if (!names_.empty()) {
    std::vector<std::string> nm;
    for (vertex v : keep) nm.push_back(names_[v]);
    h.set_names(std::move(nm));
  }
  return h;
}

std::vector<std::vector<vertex>> components_without(const graph& g, const std::vector<char>& removed) {
  std::vector<std::vector<vertex>> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<vertex> stack;
  for (vertex start = 0; start < g.n(); ++start) {
    if (removed[start] || seen[start]) continue;
    std::vector<vertex> comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (vertex y : g.neighbors(x))
        if (!removed[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> removed(g.n(), 0);
  return components_without(g, removed).size() == 1;
}

bool is_biconnected(const graph& g) {
  const int n = g.n();
  if (n < 3) return false;
  // Iterative DFS computing low-points; a non-root vertex x is a cutvertex if
  // some child c has low[c] >= disc[x]; the root is one if it has > 1 child.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<vertex> stack{0};
  disc[0] = low[0] = 0;
  int time = 1;
  int root_children = 0;
  while (!stack.empty()) {
    vertex x = stack.back();
    const auto& nb = g.neighbors(x);
    if (next[x] < nb.size()) {
      vertex y = nb[next[x]++];
      if (disc[y] < 0) {
        parent[y] = x;
        disc[y] = low[y] = time++;
        if (x == 0) ++root_children;
        stack.push_back(y);
      } else if (y != parent[x]) {
        low[x] = std::min(low[x], disc[y]);
      }
    } else {
      stack.pop_back();
      vertex p = parent[x];
      if (p >= 0) {
        low[p] = std::min(low[p], low[x]);
        if (p != 0 && low[x] >= disc[p]) return false;
      }
    }
  }
  if (time != n) return false;
  return root_children == 1;
}

graph make_cycle(int n) {
  std::vector<std::pair<vertex, vertex>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return graph(n, es);
}

graph make_path(int n) {
  std::vector<std::pair<vertex, vertex>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return graph(n, es);
}

graph make_complete(int n) {
  std::vector<std::pair<vertex, vertex>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return graph(n, es);
}

graph make_theta(const std::vector<int>& lengths) {
  std::vector<std::pair<vertex, vertex>> es;
  int n = 2;
  for (int len : lengths) {
    if (len < 1) throw error(error_kind::invalid_argument, "theta branch length must be >= 1");
    vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      es.emplace_back(prev, n);
      prev = n++;
    }
    es.emplace_back(prev, 1);
  }
  return graph(n, es);
}

}  // namespace grounded
