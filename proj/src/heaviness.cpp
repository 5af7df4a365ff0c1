#include "grounded/heaviness.hpp"

#include <algorithm>

namespace grounded {

// Nodes are in preorder, so reverse index order is a valid bottom-up pass and
// index order a valid top-down pass.

std::vector<std::int64_t> bottom_up_lengths(const decomposition_tree& t) {
  std::vector<std::int64_t> ell(t.size(), 0);
  for (int i = t.size() - 1; i >= 0; --i) {
    const tree_node& x = t[i];
    if (x.label == node_label::q) {
      ell[i] = 1;
    } else if (x.label == node_label::s) {
      std::int64_t sum = 0;
      for (int c : x.children) sum += ell[c];
      ell[i] = sum;
    } else {
      std::int64_t best = 0;
      for (int c : x.children) best = std::max(best, ell[c]);
      ell[i] = best;
    }
  }
  return ell;
}

std::vector<std::int64_t> top_down_lengths(const decomposition_tree& t, const std::vector<std::int64_t>& ell) {
  std::vector<std::int64_t> lp(t.size(), 0);
  // The root's own parent component is empty; report the child's view.
  const tree_node& root = t[t.root];
  if (!root.children.empty()) lp[t.root] = ell[root.children[0]];
  for (int i = 0; i < t.size(); ++i) {
    const tree_node& x = t[i];
    if (i == t.root) {
      for (int c : x.children) lp[c] = 1;
      continue;
    }
    if (x.label == node_label::s) {
      for (int c : x.children) lp[c] = ell[i] + lp[i] - ell[c];
    } else if (x.label == node_label::p) {
      // First child attaining the maximum gets the runner-up among its siblings.
      int max_child = -1;
      for (int c : x.children)
        if (max_child < 0 || ell[c] > ell[max_child]) max_child = c;
      std::int64_t others = 0;
      for (int c : x.children)
        if (c != max_child) others = std::max(others, ell[c]);
      for (int c : x.children)
        lp[c] = c == max_child ? std::max(lp[i], others) : std::max(lp[i], ell[i]);
    }
  }
  return lp;
}

length_annotation annotate(const decomposition_tree& t) {
  length_annotation a;
  a.ell = bottom_up_lengths(t);
  a.ell_prime = top_down_lengths(t, a.ell);
  return a;
}

std::vector<edge> tree_transitive_edges(const decomposition_tree& t) {
  std::vector<edge> out;
  for (int i = 0; i < t.size(); ++i) {
    const tree_node& x = t[i];
    if (x.label != node_label::p) continue;
    if (x.parent == t.root) out.push_back(t[t.root].e);
    for (int c : x.children)
      if (t[c].label == node_label::q) out.push_back(t[c].e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

heaviness_report check_two_heavy(const decomposition_tree& t, const length_annotation& lengths) {
  heaviness_report rep;
  for (int i = 0; i < t.size(); ++i) {
    const tree_node& x = t[i];
    if (x.label != node_label::p) continue;
    p_node_entry entry;
    entry.node = i;
    entry.s = x.pole_s;
    entry.t = x.pole_t;
    for (int c : x.children) entry.lengths.push_back(lengths.ell[c]);
    entry.lengths.push_back(lengths.ell_prime[i]);
    for (std::int64_t len : entry.lengths)
      if (len > 3) ++entry.heavy_entries;
    if (entry.heavy_entries > 2 && rep.at_most_two_heavy) {
      rep.at_most_two_heavy = false;
      rep.witness = rep.p_nodes.size();
    }
    rep.p_nodes.push_back(std::move(entry));
  }
  rep.transitive = tree_transitive_edges(t);
  rep.advisory = !rep.transitive.empty();
  return rep;
}

decision decide(const graph& g) {
  decision d;
  d.biconnected = is_biconnected(g);
  if (!d.biconnected) return d;
  try {
    d.tree = detail::build_biconnected_tree(g, g.edges().front());
  } catch (const error& e) {
    if (e.kind() != error_kind::not_series_parallel) throw;
    return d;
  }
  d.series_parallel = true;
  d.lengths = annotate(*d.tree);
  d.report = check_two_heavy(*d.tree, *d.lengths);
  return d;
}

}  // namespace grounded
