#include "grounded/construct.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace grounded {

namespace {

struct candidate {
  int k;
  vertex s, t;
};

bool better(const candidate& a, const candidate& b) {
  if (a.k != b.k) return a.k > b.k;
  return std::tie(a.s, a.t) < std::tie(b.s, b.t);
}

candidate make_candidate(int k, vertex a, vertex b) { return {k, std::min(a, b), std::max(a, b)}; }

// Windows (a, b) of an S-node chain x_0 .. x_k: the pair (x_a, x_b) separates
// the children a+1..b from the rest whenever b - a >= 2 and (a, b) != (0, k).
void s_node_candidates(const decomposition_tree& t, int i, const length_annotation& lengths,
                       std::vector<candidate>& out) {
  const tree_node& x = t[i];
  const int k = static_cast<int>(x.children.size());
  if (k < 3) return;
  std::vector<vertex> chain{x.pole_s};
  std::vector<std::int64_t> prefix{0};
  for (int c : x.children) {
    chain.push_back(t[c].pole_t);
    prefix.push_back(prefix.back() + lengths.ell[c]);
  }
  const std::int64_t total = lengths.ell[i] + lengths.ell_prime[i];
  auto count = [&](int a, int b) {
    std::int64_t inner = prefix[b] - prefix[a];
    return int(inner > 3) + int(total - inner > 3);
  };
  auto add = [&](int a, int b) { out.push_back(make_candidate(count(a, b), chain[a], chain[b])); };

  // Two heavy sides: for each a, the shortest window with inner length >= 4.
  int b = 2;
  for (int a = 0; a + 2 <= k; ++a) {
    b = std::max(b, a + 2);
    while (b <= k && prefix[b] - prefix[a] < 4) ++b;
    if (b > k) break;
    if ((a != 0 || b != k) && count(a, b) == 2) {
      add(a, b);
      return;
    }
  }
  // Otherwise the extreme windows decide whether one heavy side is possible.
  add(0, k - 1);
  add(1, k);
  for (int a = 0; a + 2 <= k; ++a)
    if (a != 0 || a + 2 != k) add(a, a + 2);
}

}  // namespace

pair_choice choose_pair(const graph& g, const decomposition_tree& t, const length_annotation& lengths) {
  std::vector<candidate> cands;
  for (int i = 0; i < t.size(); ++i) {
    const tree_node& x = t[i];
    if (x.label == node_label::p && x.parent != t.root) {
      int k = 0;
      for (int c : x.children) k += lengths.ell[c] > 3;
      k += lengths.ell_prime[i] > 3;
      cands.push_back(make_candidate(k, x.pole_s, x.pole_t));
    } else if (x.label == node_label::s) {
      s_node_candidates(t, i, lengths, cands);
    }
  }
  if (cands.empty()) throw error(error_kind::no_separation_pair, "graph has no separation pair");
  candidate best = *std::min_element(cands.begin(), cands.end(), better);

  pair_choice choice;
  choice.s = best.s;
  choice.t = best.t;
  choice.components = components_of_pair(g, best.s, best.t);
  for (const component_info& c : choice.components) choice.k += c.heavy;
  if (choice.k >= 3)
    throw error(error_kind::too_heavy, "pair (" + g.name(best.s) + "," + g.name(best.t) + ") has " +
                                           std::to_string(choice.k) + " heavy components");

  std::vector<std::size_t> path_len(choice.components.size());
  for (std::size_t i = 0; i < choice.components.size(); ++i)
    path_len[i] = longest_pole_path(g, choice.components[i]).size();
  std::vector<std::size_t> order(choice.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = choice.components[a];
    const auto& cb = choice.components[b];
    if (ca.heavy != cb.heavy) return ca.heavy;
    return path_len[a] > path_len[b];
  });
  choice.g1 = order[0];
  choice.g2 = order[1];
  return choice;
}

std::vector<vertex> longest_pole_path(const graph& g, const component_info& c) {
  // Local graph: s -> 0, t -> 1, internal vertices after; the edge 0-1 closes
  // the component so that its own decomposition tree hangs below that edge.
  std::vector<vertex> keep{c.s, c.t};
  keep.insert(keep.end(), c.internal.begin(), c.internal.end());
  graph h = g.induced(keep);
  std::vector<std::pair<vertex, vertex>> es;
  for (const edge& e : h.edges()) es.emplace_back(e.u, e.v);
  if (!h.adjacent(0, 1)) es.emplace_back(0, 1);
  graph closed(h.n(), es);
  decomposition_tree tree = build_decomposition_tree(closed, edge(0, 1));
  std::vector<std::int64_t> ell = bottom_up_lengths(tree);

  const int top = tree[tree.root].children.at(0);
  std::vector<vertex> local{tree[top].pole_s};
  std::vector<int> stack{top};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const tree_node& x = tree[i];
    if (x.label == node_label::q) {
      local.push_back(x.pole_t);
    } else if (x.label == node_label::s) {
      for (auto it = x.children.rbegin(); it != x.children.rend(); ++it) stack.push_back(*it);
    } else {
      int pick = x.children[0];
      for (int ch : x.children)
        if (ell[ch] > ell[pick]) pick = ch;
      stack.push_back(pick);
    }
  }
  if (local.front() != 0) std::reverse(local.begin(), local.end());

  std::vector<vertex> path;
  for (vertex v : local) path.push_back(keep[v]);

  std::vector<int> on_path(g.n(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) on_path[path[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < path.size(); ++i)
    for (vertex w : g.neighbors(path[i])) {
      int j = on_path[w];
      if (j >= 0 && std::abs(j - static_cast<int>(i)) > 1)
        throw error(error_kind::not_induced, "path between " + g.name(c.s) + " and " + g.name(c.t) +
                                                 " has chord (" + g.name(path[i]) + "," + g.name(w) + ")");
    }
  return path;
}

heavy_cycle_plan plan_heavy_cycle(const graph& g, const pair_choice& choice) {
  heavy_cycle_plan plan;
  plan.s = choice.s;
  plan.t = choice.t;
  plan.k = choice.k;
  plan.p1 = longest_pole_path(g, choice.components[choice.g1]);
  plan.p2 = longest_pole_path(g, choice.components[choice.g2]);
  plan.cycle = plan.p1;
  for (std::size_t i = plan.p2.size() - 2; i >= 1; --i) plan.cycle.push_back(plan.p2[i]);
  plan.position.assign(g.n(), -1);
  for (std::size_t i = 0; i < plan.cycle.size(); ++i) plan.position[plan.cycle[i]] = static_cast<int>(i);
  plan.p.push_back(plan.hub());
  plan.p.insert(plan.p.end(), plan.cycle.begin() + 1, plan.cycle.end() - 1);
  return plan;
}

std::vector<residual_component> find_residuals(const graph& g, const heavy_cycle_plan& plan) {
  std::vector<char> removed(g.n(), 0);
  for (vertex v : plan.cycle) removed[v] = 1;
  const int m = plan.t_index();
  const int hub_index = static_cast<int>(plan.cycle.size()) - 1;

  std::vector<residual_component> out;
  for (auto& comp : components_without(g, removed)) {
    std::vector<int> att;
    for (vertex v : comp) {
      bool touches = false;
      for (vertex w : g.neighbors(v))
        if (removed[w]) {
          att.push_back(plan.position[w]);
          touches = true;
        }
      if (!touches)
        throw error(error_kind::insertion_failure, "residual vertex " + g.name(v) + " has no cycle neighbour");
    }
    std::sort(att.begin(), att.end());
    att.erase(std::unique(att.begin(), att.end()), att.end());
    if (att.size() != 2)
      throw error(error_kind::insertion_failure, "component containing " + g.name(comp.front()) +
                                                     " attaches to " + std::to_string(att.size()) +
                                                     " cycle vertices");
    int a = att[0], b = att[1];
    bool a_inner1 = a > 0 && a < m, b_inner1 = b > 0 && b < m;
    bool a_inner2 = a > m, b_inner2 = b > m;
    if ((a_inner1 && b_inner2) || (a_inner2 && b_inner1))
      throw error(error_kind::insertion_failure, "component containing " + g.name(comp.front()) +
                                                     " attaches to both paths");
    residual_component r;
    r.vertices = comp;
    r.at_hub = b == hub_index;
    if (r.at_hub) {
      r.attach_u = plan.cycle[b];
      r.attach_v = plan.cycle[a];
    } else {
      r.attach_u = plan.cycle[a];
      r.attach_v = plan.cycle[b];
    }
    component_info info;
    info.s = r.attach_u;
    info.t = r.attach_v;
    info.internal = comp;
    r.shape = classify_light_shape(info, g);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> order_residuals(const heavy_cycle_plan& plan, const std::vector<residual_component>& rs) {
  const int hub_index = static_cast<int>(plan.cycle.size()) - 1;
  struct interval {
    int lo, hi;
  };
  std::vector<interval> iv(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    int a = plan.position[rs[i].attach_u], b = plan.position[rs[i].attach_v];
    iv[i] = rs[i].at_hub ? interval{b, hub_index} : interval{a, b};
  }

  std::vector<std::size_t> generic, hub;
  for (std::size_t i = 0; i < rs.size(); ++i) (rs[i].at_hub ? hub : generic).push_back(i);
  std::sort(generic.begin(), generic.end(), [&](std::size_t a, std::size_t b) {
    int la = iv[a].hi - iv[a].lo, lb = iv[b].hi - iv[b].lo;
    return std::tie(la, iv[a].lo, rs[a].vertices.front()) < std::tie(lb, iv[b].lo, rs[b].vertices.front());
  });
  std::sort(hub.begin(), hub.end(), [&](std::size_t a, std::size_t b) {
    // Closest to the hub first (innermost), bipolar vertices before fans.
    int la = -iv[a].lo, lb = -iv[b].lo;
    bool fa = rs[a].shape.kind != shape_kind::path_len2, fb = rs[b].shape.kind != shape_kind::path_len2;
    return std::tie(la, fa, rs[a].vertices.front()) < std::tie(lb, fb, rs[b].vertices.front());
  });

  // Intervals must form a laminar family: sweep by (lo asc, hi desc) with a
  // stack of open intervals.
  std::vector<std::size_t> by_lo(rs.size());
  std::iota(by_lo.begin(), by_lo.end(), 0);
  std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
    return iv[a].lo != iv[b].lo ? iv[a].lo < iv[b].lo : iv[a].hi > iv[b].hi;
  });
  std::vector<std::size_t> open;
  for (std::size_t i : by_lo) {
    while (!open.empty() && iv[open.back()].hi <= iv[i].lo) open.pop_back();
    if (!open.empty() && iv[i].hi > iv[open.back()].hi)
      throw error(error_kind::nesting_violation,
                  "attachment intervals [" + std::to_string(iv[open.back()].lo) + "," +
                      std::to_string(iv[open.back()].hi) + "] and [" + std::to_string(iv[i].lo) + "," +
                      std::to_string(iv[i].hi) + "] overlap");
    open.push_back(i);
  }

  generic.insert(generic.end(), hub.begin(), hub.end());
  return generic;
}

layout::layout(int n) : curve_(n, -1) {}

int layout::add_curve(vertex v, orientation o) {
  slot s;
  s.v = v;
  s.o = o;
  s.x_it = xs_.end();
  s.y_it = ys_.end();
  slots_.push_back(s);
  int id = static_cast<int>(slots_.size()) - 1;
  curve_[v] = id;
  return id;
}

int layout::add_marker() {
  slot s;
  s.x_it = xs_.end();
  s.y_it = ys_.end();
  slots_.push_back(s);
  return static_cast<int>(slots_.size()) - 1;
}

void layout::x_back(int id) { slots_[id].x_it = xs_.insert(xs_.end(), id); }

void layout::x_after(int ref, const std::vector<int>& ids) {
  auto pos = std::next(slots_[ref].x_it);
  for (int id : ids) slots_[id].x_it = xs_.insert(pos, id);
}

void layout::x_before(int ref, const std::vector<int>& ids) {
  auto pos = slots_[ref].x_it;
  for (int id : ids) slots_[id].x_it = xs_.insert(pos, id);
}

void layout::y_back(int id) { slots_[id].y_it = ys_.insert(ys_.end(), id); }

void layout::y_after(int ref, const std::vector<int>& ids) {
  auto pos = std::next(slots_[ref].y_it);
  for (int id : ids) slots_[id].y_it = ys_.insert(pos, id);
}

void layout::y_before(int ref, const std::vector<int>& ids) {
  auto pos = slots_[ref].y_it;
  for (int id : ids) slots_[id].y_it = ys_.insert(pos, id);
}

void layout::tip_past(int id, int target) { slots_[id].tip_target = target; }

void layout::tip_minimal(int id) { slots_[id].tip_target = -1; }

representation layout::normalize() const {
  // Anchors at even x, tips at odd x, so a tip never lands on an anchor.
  std::vector<coord> x(slots_.size(), 0), y(slots_.size(), 0);
  coord rank = 0;
  for (int id : xs_)
    if (slots_[id].v >= 0) x[id] = 2 * ++rank;
  rank = 0;
  for (int id : ys_) y[id] = ++rank;

  representation rep;
  for (std::size_t id = 0; id < slots_.size(); ++id) {
    const slot& s = slots_[id];
    if (s.v < 0) continue;
    coord base = s.tip_target < 0 ? x[id] : x[s.tip_target];
    coord tip = s.o == orientation::l ? base + 1 : base - 1;
    rep.curves.push_back(make_curve(s.v, s.o, x[id], y[id], tip));
  }
  std::sort(rep.curves.begin(), rep.curves.end(),
            [](const grounded_curve& a, const grounded_curve& b) { return a.v < b.v; });
  return rep;
}

cycle_drawing draw_heavy_cycle(const graph& g, const heavy_cycle_plan& plan) {
  // s leftmost and shallowest; then the hub h = c_{n-1}, deepest; then
  // c_1 .. c_{n-2} by path order with increasing depth. Each c_i reaches just
  // past c_{i+1}; c_{n-2} is the only ⌐L and reaches back over h.
  const auto& c = plan.cycle;
  const int n = static_cast<int>(c.size());
  cycle_drawing d{layout(g.n()), std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  layout& lay = d.lay;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = lay.add_curve(c[i], i == n - 2 ? orientation::mirrored_l : orientation::l);
  for (int i = 0; i < n - 1; ++i) d.marker[i] = lay.add_marker();

  lay.x_back(id[0]);
  lay.x_back(id[n - 1]);
  lay.x_back(d.marker[0]);
  for (int i = 1; i <= n - 2; ++i) {
    lay.x_back(id[i]);
    lay.x_back(d.marker[i]);
  }
  for (int i = 0; i < n; ++i) lay.y_back(id[i]);

  for (int i = 0; i + 2 < n; ++i) lay.tip_past(id[i], id[i + 1]);
  lay.tip_past(id[n - 2], id[n - 1]);
  lay.tip_minimal(id[n - 1]);
  return d;
}

void insert_light_component(cycle_drawing& d, const heavy_cycle_plan& plan, const residual_component& r,
                            hub_depth reading) {
  layout& lay = d.lay;
  const light_shape& sh = r.shape;
  const int iu = plan.position[r.attach_u], iv = plan.position[r.attach_v];
  const int cu = lay.curve_of(r.attach_u), cv = lay.curve_of(r.attach_v);

  if (!r.at_hub) {
    if (sh.kind == shape_kind::path_len2) {
      int w = lay.add_curve(sh.hub, orientation::l);
      lay.x_after(d.marker[iu], {w});
      lay.y_before(cv, {w});
      lay.tip_past(w, cv);
    } else if (sh.kind == shape_kind::fan_at_t) {
      // Centre adjacent to v: a ⌐L just left of v's slot, leaves after u.
      int center = lay.add_curve(sh.hub, orientation::mirrored_l);
      std::vector<int> leaves;
      for (vertex l : sh.leaves) leaves.push_back(lay.add_curve(l, orientation::l));
      lay.x_before(d.marker[iv], {center});
      lay.x_after(d.marker[iu], leaves);
      std::vector<int> block{center};
      block.insert(block.end(), leaves.begin(), leaves.end());
      lay.y_before(cv, block);
      lay.tip_past(center, leaves.front());
      for (int l : leaves) lay.tip_minimal(l);
    } else {
      // Centre adjacent to u: an L right after u, leaves as ⌐Ls before v's slot.
      int center = lay.add_curve(sh.hub, orientation::l);
      std::vector<int> leaves;
      for (vertex l : sh.leaves) leaves.push_back(lay.add_curve(l, orientation::mirrored_l));
      lay.x_after(d.marker[iu], {center});
      lay.x_before(d.marker[iv], leaves);
      std::vector<int> block = leaves;
      block.push_back(center);
      lay.y_before(cv, block);
      for (int l : leaves) lay.tip_past(l, center);
      lay.tip_minimal(center);
    }
    return;
  }

  // Hub components: u is the hub h, v lies on p2 strictly between t and h.
  // Fan groups go just above succ(v), but above a bipolar curve already
  // sitting on succ(v); later groups at the same v enclose earlier ones and go
  // deeper.
  // Curves anchored left of s: deeper ones further left, so their horizontals
  // never pass over a deeper anchor. A group at v goes left of older groups at
  // v (it is deeper) and right of groups at later cycle vertices.
  auto place_front = [&](const std::vector<int>& items) {
    int ref = d.front_first[iv] >= 0 ? d.front_first[iv] : lay.curve_of(plan.s);
    lay.x_before(ref, items);
    d.front_first[iv] = items.front();
  };
  auto place_depth = [&](const std::vector<int>& block) {
    if (reading == hub_depth::successor) {
      int ref = d.hub_bipolar[iv + 1] >= 0 ? d.hub_bipolar[iv + 1] : lay.curve_of(plan.cycle[iv + 1]);
      lay.y_before(ref, block);
    } else {
      lay.y_before(cv, block);
    }
  };
  if (sh.kind == shape_kind::path_len2) {
    int w = lay.add_curve(sh.hub, orientation::mirrored_l);
    lay.x_before(d.marker[iv], {w});
    lay.y_before(cv, {w});
    lay.tip_past(w, cu);
    if (d.hub_bipolar[iv] < 0) d.hub_bipolar[iv] = w;
  } else if (sh.kind == shape_kind::fan_at_s) {
    // Centre adjacent to h, anchored left of s; leaves next to v.
    int center = lay.add_curve(sh.hub, orientation::l);
    std::vector<int> leaves;
    for (vertex l : sh.leaves) leaves.push_back(lay.add_curve(l, orientation::l));
    place_front({center});
    lay.x_before(d.marker[iv], leaves);
    std::vector<int> block{center};
    block.insert(block.end(), leaves.begin(), leaves.end());
    place_depth(block);
    lay.tip_past(center, leaves.back());
    for (int l : leaves) lay.tip_minimal(l);
  } else {
    // Centre adjacent to v; leaves anchored left of s.
    int center = lay.add_curve(sh.hub, orientation::l);
    std::vector<int> leaves;
    for (vertex l : sh.leaves) leaves.push_back(lay.add_curve(l, orientation::l));
    place_front(leaves);
    lay.x_before(d.marker[iv], {center});
    std::vector<int> block(leaves.rbegin(), leaves.rend());
    block.push_back(center);
    place_depth(block);
    for (int l : leaves) lay.tip_past(l, center);
    lay.tip_minimal(center);
  }
}

namespace {

representation triangle() {
  representation rep;
  rep.curves.push_back(make_curve(0, orientation::l, 2, 1, 7));
  rep.curves.push_back(make_curve(1, orientation::l, 4, 2, 7));
  rep.curves.push_back(make_curve(2, orientation::l, 6, 3, 7));
  return rep;
}

representation attempt(const graph& g, const heavy_cycle_plan& plan, const std::vector<residual_component>& rs,
                       const std::vector<std::size_t>& order, hub_depth reading) {
  cycle_drawing d = draw_heavy_cycle(g, plan);
  for (std::size_t i : order) insert_light_component(d, plan, rs[i], reading);
  return d.lay.normalize();
}

}  // namespace

representation construct_representation(const graph& g, const construct_options& options) {
  decision dec = decide(g);
  if (!dec.biconnected) throw error(error_kind::not_biconnected, "graph is not biconnected");
  if (!dec.series_parallel) throw error(error_kind::not_series_parallel, "graph is not series-parallel");
  const heaviness_report& report = *dec.report;
  if (!report.transitive.empty()) {
    const edge& e = report.transitive.front();
    throw error(error_kind::transitive_edges_present,
                "transitive edge (" + g.name(e.u) + "," + g.name(e.v) + ")");
  }
  if (!report.at_most_two_heavy) {
    const p_node_entry& w = report.p_nodes[*report.witness];
    throw error(error_kind::too_heavy, "pair (" + g.name(w.s) + "," + g.name(w.t) + ") has " +
                                           std::to_string(w.heavy_entries) + " heavy components");
  }
  if (g.n() == 3) return triangle();

  pair_choice choice = choose_pair(g, *dec.tree, *dec.lengths);
  heavy_cycle_plan plan = plan_heavy_cycle(g, choice);
  std::vector<residual_component> rs = find_residuals(g, plan);
  std::vector<std::size_t> order = order_residuals(plan, rs);

  representation rep = attempt(g, plan, rs, order, options.reading);
  if (!options.verify_result) return rep;
  verification_report vr = verify(g, rep);
  if (vr.ok()) return rep;
  hub_depth other = options.reading == hub_depth::successor ? hub_depth::attachment : hub_depth::successor;
  representation alt = attempt(g, plan, rs, order, other);
  if (verify(g, alt).ok()) return alt;
  throw error(error_kind::insertion_failure, "constructed drawing rejected by the verifier:\n" + describe(vr, g));
}

}  // namespace grounded
