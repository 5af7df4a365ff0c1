#include "grounded/decomposition.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>
#include <sstream>

namespace grounded {

namespace {

// Binary node produced by one reduction step. For S, `mid` is the eliminated
// vertex; children[0] joins a-mid and children[1] joins mid-b.
struct raw_node {
  node_label label;
  vertex a, b;
  vertex mid = -1;
  std::array<int, 2> children{-1, -1};
};

struct virtual_edge {
  vertex a, b;
  int node;
  bool alive;
  int slot_a, slot_b;  // positions in the incidence array of a and b
};

std::uint64_t key(vertex a, vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Open-addressing map from endpoint pairs to virtual edge ids, with
// tombstones. Keys and values share a slot so a probe touches one cache line.
// The table is rebuilt when live entries plus tombstones pass 3/4 of it.
class pair_map {
 public:
  explicit pair_map(std::size_t expected) { rebuild(expected); }

  int find(std::uint64_t k) const {
    for (std::size_t i = slot(k);; i = (i + 1) & mask_) {
      if (cells_[i].key == empty) return -1;
      if (cells_[i].key == k) return cells_[i].val;
    }
  }

  void insert(std::uint64_t k, int v) {
    if (4 * (used_ + 1) > 3 * cells_.size()) rebuild(live_ + 1);
    std::size_t i = slot(k);
    while (cells_[i].key != empty && cells_[i].key != tomb) i = (i + 1) & mask_;
    if (cells_[i].key == empty) ++used_;
    cells_[i] = {k, v};
    ++live_;
  }

  void erase(std::uint64_t k) {
    for (std::size_t i = slot(k);; i = (i + 1) & mask_) {
      if (cells_[i].key == empty) return;
      if (cells_[i].key == k) {
        cells_[i].key = tomb;
        --live_;
        return;
      }
    }
  }

 private:
  static constexpr std::uint64_t empty = ~0ULL;
  static constexpr std::uint64_t tomb = ~0ULL - 1;
  struct cell {
    std::uint64_t key;
    int val;
  };
  std::vector<cell> cells_;
  std::size_t mask_ = 0, used_ = 0, live_ = 0;

  std::size_t slot(std::uint64_t k) const { return (k * 0x9E3779B97F4A7C15ULL >> 17) & mask_; }

  void rebuild(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    std::vector<cell> old(cap, cell{empty, 0});
    old.swap(cells_);
    mask_ = cap - 1;
    used_ = live_ = 0;
    for (const cell& c : old)
      if (c.key != empty && c.key != tomb) insert(c.key, c.val);
  }
};

struct task {
  int raw;
  vertex from, to;
  int parent;
};

}  // namespace

decomposition_tree build_decomposition_tree(const graph& g) {
  if (g.m() == 0) throw error(error_kind::not_biconnected, "graph has no edges");
  return build_decomposition_tree(g, g.edges().front());
}

decomposition_tree build_decomposition_tree(const graph& g, edge root_edge) {
  if (!is_biconnected(g)) throw error(error_kind::not_biconnected, "graph is not biconnected");
  return detail::build_biconnected_tree(g, root_edge);
}

decomposition_tree detail::build_biconnected_tree(const graph& g, edge root_edge) {
  if (!g.adjacent(root_edge.u, root_edge.v))
    throw error(error_kind::invalid_argument, "root edge is not an edge of the graph");
  const int n = g.n();
  const vertex rs = root_edge.u, rt = root_edge.v;

  std::vector<raw_node> raw;
  std::vector<virtual_edge> ves;
  raw.reserve(2 * static_cast<std::size_t>(g.m()));
  ves.reserve(g.m());

  // Incidence slots in CSR layout. A vertex keeps its number of slots for the
  // whole reduction: a series step at x replaces the edges x-a and x-b by a-b
  // in the slots they held at a and b, and a parallel merge frees them (-1).
  // Each slot also records the far endpoint so lookups stay in one range.
  std::vector<int> first(n + 1, 0);
  for (vertex v = 0; v < n; ++v) first[v + 1] = first[v] + g.degree(v);
  std::vector<int> slots(first[n], -1);
  std::vector<vertex> far(first[n], -1);
  std::vector<int> fill(first.begin(), first.end() - 1);
  std::vector<int> deg(n, 0);

  // Edges between two vertices of large original degree are found through
  // the hash map; any other edge by scanning the smaller endpoint's slots.
  constexpr int scan_limit = 16;
  auto big = [&](vertex v) { return first[v + 1] - first[v] > scan_limit; };
  std::size_t big_edges = 0;
  for (const edge& e : g.edges()) big_edges += big(e.u) && big(e.v);
  pair_map by_ends(big_edges);
  auto find_edge = [&](vertex a, vertex b) -> int {
    if (big(a) && big(b)) return by_ends.find(key(a, b));
    vertex v = big(a) ? b : a, w = v == a ? b : a;
    for (int i = first[v]; i < first[v + 1]; ++i)
      if (slots[i] >= 0 && far[i] == w) return slots[i];
    return -1;
  };
  auto add_edge = [&](vertex a, vertex b, int node, int slot_a, int slot_b) {
    int id = static_cast<int>(ves.size());
    ves.push_back({a, b, node, true, slot_a, slot_b});
    slots[slot_a] = slots[slot_b] = id;
    far[slot_a] = b;
    far[slot_b] = a;
    if (big(a) && big(b)) by_ends.insert(key(a, b), id);
  };

  for (const edge& e : g.edges()) {
    if (e == root_edge) continue;
    raw.push_back({node_label::q, e.u, e.v});
    add_edge(e.u, e.v, static_cast<int>(raw.size()) - 1, fill[e.u]++, fill[e.v]++);
    ++deg[e.u];
    ++deg[e.v];
  }

  std::vector<vertex> queue;
  std::vector<char> removed(n, 0);
  for (vertex v = 0; v < n; ++v)
    if (v != rs && v != rt && deg[v] == 2) queue.push_back(v);

  auto slot_at = [&](const virtual_edge& e, vertex v) { return e.a == v ? e.slot_a : e.slot_b; };

  while (!queue.empty()) {
    vertex x = queue.back();
    queue.pop_back();
    if (removed[x] || deg[x] != 2) continue;
    int live[2], found_live = 0;
    for (int i = first[x]; i < first[x + 1] && found_live < 2; ++i)
      if (slots[i] >= 0) live[found_live++] = slots[i];
    const virtual_edge e1 = ves[live[0]];
    const virtual_edge e2 = ves[live[1]];
    vertex a = e1.a == x ? e1.b : e1.a;
    vertex b = e2.a == x ? e2.b : e2.a;
    const int at_a = slot_at(e1, a), at_b = slot_at(e2, b);
    ves[live[0]].alive = ves[live[1]].alive = false;
    if (big(x) && big(a)) by_ends.erase(key(x, a));
    if (big(x) && big(b)) by_ends.erase(key(x, b));
    removed[x] = 1;
    for (int i = first[x]; i < first[x + 1]; ++i) slots[i] = -1;
    slots[at_a] = slots[at_b] = -1;

    raw.push_back({node_label::s, a, b, x, {e1.node, e2.node}});
    int s_node = static_cast<int>(raw.size()) - 1;
    int found = find_edge(a, b);
    if (found >= 0) {
      virtual_edge& f = ves[found];
      raw.push_back({node_label::p, f.a, f.b, -1, {f.node, s_node}});
      f.node = static_cast<int>(raw.size()) - 1;
      for (vertex y : {a, b}) {
        --deg[y];
        if (y != rs && y != rt && deg[y] == 2) queue.push_back(y);
      }
    } else {
      add_edge(a, b, s_node, at_a, at_b);
    }
  }

  int top = -1;
  int alive = 0;
  for (const virtual_edge& ve : ves)
    if (ve.alive) {
      ++alive;
      top = ve.node;
      if (edge(ve.a, ve.b) != root_edge) top = -2;
    }
  if (alive != 1 || top < 0)
    throw error(error_kind::not_series_parallel, "graph contains a K4 subdivision");

  // Smallest internal vertex per raw node, for P-child ordering.
  constexpr int none = std::numeric_limits<int>::max();
  std::vector<int> min_internal(raw.size(), none);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const raw_node& r = raw[i];
    if (r.label == node_label::q) continue;
    int best = r.label == node_label::s ? r.mid : none;
    for (int c : r.children) best = std::min(best, min_internal[c]);
    min_internal[i] = best;
  }

  decomposition_tree t;
  t.nodes.reserve(raw.size() + 1);
  tree_node root;
  root.label = node_label::q;
  root.pole_s = rs;
  root.pole_t = rt;
  root.e = root_edge;
  t.nodes.push_back(root);
  t.root = 0;

  std::vector<task> stack{{top, rs, rt, 0}};
  std::vector<task> flat, expand;
  while (!stack.empty()) {
    task cur = stack.back();
    stack.pop_back();
    const raw_node& r = raw[cur.raw];
    int id = t.size();
    tree_node node;
    node.label = r.label;
    node.pole_s = cur.from;
    node.pole_t = cur.to;
    node.parent = cur.parent;
    if (r.label == node_label::q) node.e = edge(r.a, r.b);
    t.nodes.push_back(std::move(node));
    t.nodes[cur.parent].children.push_back(id);
    if (r.label == node_label::q) continue;

    // Flatten same-label descendants into one maximal node.
    flat.clear();
    expand.assign(1, cur);
    while (!expand.empty()) {
      task x = expand.back();
      expand.pop_back();
      const raw_node& xr = raw[x.raw];
      if (xr.label != r.label) {
        flat.push_back(x);
        continue;
      }
      if (xr.label == node_label::s) {
        // Chain x.from -> mid -> x.to; push in reverse so the front pops first.
        bool forward = xr.a == x.from;
        int first = forward ? xr.children[0] : xr.children[1];
        int second = forward ? xr.children[1] : xr.children[0];
        expand.push_back({second, xr.mid, x.to, id});
        expand.push_back({first, x.from, xr.mid, id});
      } else {
        for (auto it = xr.children.rbegin(); it != xr.children.rend(); ++it)
          expand.push_back({*it, x.from, x.to, id});
      }
    }
    t.nodes[id].children.reserve(flat.size());
    if (r.label == node_label::p) {
      // Ranks are distinct: one Q child at most, and the others have disjoint interiors.
      std::sort(flat.begin(), flat.end(), [&](const task& l, const task& rr) {
        auto rank = [&](const task& k) { return raw[k.raw].label == node_label::q ? -1 : min_internal[k.raw]; };
        return rank(l) < rank(rr);
      });
    }
    for (auto it = flat.rbegin(); it != flat.rend(); ++it) stack.push_back(*it);
  }
  return t;
}

tree_report validate_tree(const decomposition_tree& t, const graph& g) {
  tree_report rep;
  auto bad = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  if (t.nodes.empty() || t.root < 0 || t.root >= t.size()) {
    bad("empty tree or invalid root");
    return rep;
  }
  const tree_node& root = t[t.root];
  if (root.label != node_label::q) bad("root is not a Q-node");
  if (root.children.size() != 1) bad("root does not have exactly one child");

  std::vector<edge> seen;
  std::vector<int> visits(t.size(), 0);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (++visits[i] > 1) {
      bad("node " + std::to_string(i) + " reached twice");
      continue;
    }
    const tree_node& x = t[i];
    std::string tag = "node " + std::to_string(i) + ": ";
    for (int c : x.children) {
      if (c < 0 || c >= t.size()) {
        bad(tag + "child index out of range");
        continue;
      }
      if (t[c].parent != i) bad(tag + "child " + std::to_string(c) + " has wrong parent");
      if (t[c].label == x.label) bad(tag + "adjacent nodes share label " + std::string(1, char(x.label)));
      stack.push_back(c);
    }
    switch (x.label) {
      case node_label::q:
        if (edge(x.pole_s, x.pole_t) != x.e) bad(tag + "Q poles differ from its edge");
        if (i != t.root && !x.children.empty()) bad(tag + "Q-node is not a leaf");
        seen.push_back(x.e);
        break;
      case node_label::s: {
        if (x.children.size() < 2) bad(tag + "S-node with fewer than two children");
        if (x.children.empty()) break;
        vertex at = x.pole_s;
        for (int c : x.children) {
          if (c < 0 || c >= t.size()) break;
          if (t[c].pole_s != at) bad(tag + "S chain broken");
          at = t[c].pole_t;
        }
        if (at != x.pole_t) bad(tag + "S chain does not end at pole_t");
        break;
      }
      case node_label::p:
        if (x.children.size() < 2) bad(tag + "P-node with fewer than two children");
        for (int c : x.children)
          if (c >= 0 && c < t.size() && (t[c].pole_s != x.pole_s || t[c].pole_t != x.pole_t))
            bad(tag + "P child poles differ");
        break;
    }
  }
  if (!root.children.empty()) {
    const tree_node& c = t[root.children[0]];
    if (edge(c.pole_s, c.pole_t) != edge(root.pole_s, root.pole_t)) bad("root child poles differ from root edge");
  }
  for (int i = 0; i < t.size(); ++i)
    if (visits[i] == 0) bad("node " + std::to_string(i) + " unreachable");
  std::sort(seen.begin(), seen.end());
  if (seen != g.edges()) bad("Q-node edges do not reassemble the graph");
  return rep;
}

std::vector<edge> subtree_edges(const decomposition_tree& t, int i) {
  std::vector<edge> out;
  std::vector<int> stack{i};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (t[x].label == node_label::q) out.push_back(t[x].e);
    for (int c : t[x].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void write_tree(std::ostream& os, const decomposition_tree& t) {
  for (int i = 0; i < t.size(); ++i) {
    const tree_node& x = t[i];
    os << i << ' ' << static_cast<char>(x.label) << ' ' << x.pole_s << ' ' << x.pole_t;
    for (int c : x.children) os << ' ' << c;
    os << '\n';
  }
}

std::string tree_to_string(const decomposition_tree& t) {
  std::ostringstream os;
  write_tree(os, t);
  return os.str();
}

}  // namespace grounded
