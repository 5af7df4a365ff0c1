#include "grounded/geometry.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace grounded {

grounded_curve make_curve(vertex v, orientation o, coord anchor_x, coord depth_y, coord tip_x) {
  grounded_curve c;
  c.v = v;
  c.o = o;
  c.anchor_x = anchor_x;
  c.depth_y = depth_y;
  c.tip_x = tip_x;
  c.anchor_y = 0;
  c.tip_y = depth_y;
  return c;
}

namespace {

struct point {
  coord x, y;
};

int sign(__int128 v) { return (v > 0) - (v < 0); }

int orient(point a, point b, point c) {
  return sign(static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x));
}

bool on_segment(point p, point a, point b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// 1 for a proper crossing, 0 for disjoint; throws when the segments touch.
int segment_crossing(point p1, point p2, point q1, point q2) {
  int d1 = orient(q1, q2, p1), d2 = orient(q1, q2, p2);
  int d3 = orient(p1, p2, q1), d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return 1;
  bool touch = (d1 == 0 && on_segment(p1, q1, q2)) || (d2 == 0 && on_segment(p2, q1, q2)) ||
               (d3 == 0 && on_segment(q1, p1, p2)) || (d4 == 0 && on_segment(q2, p1, p2));
  if (touch) throw error(error_kind::degenerate_position, "segments touch without crossing");
  return 0;
}

struct pair_hit {
  vertex a, b;
  bool operator<(const pair_hit& o) const { return a != o.a ? a < o.a : b < o.b; }
};

void check_general_position(const representation& rep) {
  std::vector<coord> xs, ys;
  for (const grounded_curve& c : rep.curves) {
    xs.push_back(c.anchor_x);
    ys.push_back(c.depth_y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw error(error_kind::degenerate_position, "two curves share an anchor x");
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    throw error(error_kind::degenerate_position, "two curves share a bend depth");
}

// Horizontal tail of `a` against the vertical part of `b`, both with
// horizontal tails: 1 on a strict crossing, 0 otherwise, throws on touching.
int tail_hits_vertical(const grounded_curve& a, const grounded_curve& b) {
  coord lo = std::min(a.anchor_x, a.tip_x), hi = std::max(a.anchor_x, a.tip_x);
  if (b.anchor_x < lo || b.anchor_x > hi) return 0;
  coord top = std::min(b.anchor_y, b.depth_y), bottom = std::max(b.anchor_y, b.depth_y);
  if (a.depth_y < top || a.depth_y > bottom) return 0;
  if (b.anchor_x == lo || b.anchor_x == hi || a.depth_y == top || a.depth_y == bottom)
    throw error(error_kind::degenerate_position, "curves of " + std::to_string(a.v) + " and " +
                                                     std::to_string(b.v) + " touch without crossing");
  return 1;
}

template <bool Parallel>
std::vector<crossing> crossings_impl(const representation& rep) {
  check_general_position(rep);
  const auto& cs = rep.curves;
  const int n = static_cast<int>(cs.size());
  std::vector<int> by_x(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int i, int j) { return cs[i].anchor_x < cs[j].anchor_x; });
  std::vector<coord> xs(n);
  for (int k = 0; k < n; ++k) xs[k] = cs[by_x[k]].anchor_x;

  std::vector<int> irregular;
  for (int i = 0; i < n; ++i)
    if (!cs[i].horizontal_tail()) irregular.push_back(i);
  std::vector<char> is_irregular(n, 0);
  for (int i : irregular) is_irregular[i] = 1;

  int threads = Parallel ? omp_get_max_threads() : 1;
  std::vector<std::vector<pair_hit>> hits(threads);
  std::string failure;
  std::atomic<bool> failed = false;

#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
  for (int i = 0; i < n; ++i) {
    if (failed) continue;
    auto& out = hits[Parallel ? omp_get_thread_num() : 0];
    try {
      const grounded_curve& a = cs[i];
      if (is_irregular[i]) {
        for (int j = 0; j < n; ++j) {
          if (j == i || (is_irregular[j] && j < i)) continue;
          int c = curve_crossings(a, cs[j]);
          for (int k = 0; k < c; ++k) out.push_back({std::min(a.v, cs[j].v), std::max(a.v, cs[j].v)});
        }
        continue;
      }
      coord lo = std::min(a.anchor_x, a.tip_x), hi = std::max(a.anchor_x, a.tip_x);
      auto first = std::lower_bound(xs.begin(), xs.end(), lo) - xs.begin();
      auto last = std::upper_bound(xs.begin(), xs.end(), hi) - xs.begin();
      for (auto k = first; k < last; ++k) {
        int j = by_x[k];
        if (j == i || is_irregular[j]) continue;
        if (tail_hits_vertical(a, cs[j])) out.push_back({std::min(a.v, cs[j].v), std::max(a.v, cs[j].v)});
      }
    } catch (const error& e) {
#pragma omp critical
      {
        if (!failed.exchange(true)) failure = e.what();
      }
    }
  }
  if (failed) throw error(error_kind::degenerate_position, failure);

  std::vector<pair_hit> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());
  std::vector<crossing> result;
  for (const pair_hit& h : all) {
    if (!result.empty() && result.back().a == h.a && result.back().b == h.b)
      ++result.back().count;
    else
      result.push_back({h.a, h.b, 1});
  }
  return result;
}

}  // namespace

int curve_crossings(const grounded_curve& a, const grounded_curve& b) {
  point a0{a.anchor_x, a.anchor_y}, a1{a.anchor_x, a.depth_y}, a2{a.tip_x, a.tip_y};
  point b0{b.anchor_x, b.anchor_y}, b1{b.anchor_x, b.depth_y}, b2{b.tip_x, b.tip_y};
  return segment_crossing(a0, a1, b0, b1) + segment_crossing(a0, a1, b1, b2) + segment_crossing(a1, a2, b0, b1) +
         segment_crossing(a1, a2, b1, b2);
}

std::vector<crossing> crossings(const representation& rep) { return crossings_impl<true>(rep); }

std::vector<crossing> crossings_serial(const representation& rep) { return crossings_impl<false>(rep); }

verification_report verify(const graph& g, const representation& rep, verify_mode mode) {
  if (static_cast<int>(rep.curves.size()) != g.n())
    throw error(error_kind::vertex_mismatch, "representation has " + std::to_string(rep.curves.size()) +
                                                 " curves for " + std::to_string(g.n()) + " vertices");
  std::vector<int> seen(g.n(), 0);
  for (const grounded_curve& c : rep.curves) {
    if (c.v < 0 || c.v >= g.n() || seen[c.v]++)
      throw error(error_kind::vertex_mismatch, "curve for unknown or repeated vertex " + std::to_string(c.v));
  }

  verification_report r;
  for (const grounded_curve& c : rep.curves) {
    if (c.anchor_y != 0 || c.depth_y <= 0 || c.tip_y <= 0) r.off_ground.push_back(c.v);
    bool bottommost = c.depth_y >= c.anchor_y && c.depth_y >= c.tip_y;
    bool side = c.o == orientation::l ? c.tip_x > c.anchor_x : c.tip_x < c.anchor_x;
    bool mode_ok = mode == verify_mode::l_and_mirrored || c.o == orientation::l;
    if (!bottommost || !side || !mode_ok) r.bad_shape.push_back(c.v);
    if (!c.horizontal_tail()) r.not_axis_aligned.push_back(c.v);
  }
  std::sort(r.off_ground.begin(), r.off_ground.end());
  std::sort(r.bad_shape.begin(), r.bad_shape.end());
  std::sort(r.not_axis_aligned.begin(), r.not_axis_aligned.end());
  r.grounded = r.off_ground.empty();
  r.shape_ok = r.bad_shape.empty();
  r.axis_aligned = r.not_axis_aligned.empty();

  std::vector<crossing> xs;
  try {
    xs = crossings(rep);
  } catch (const error& e) {
    r.general_position_ok = false;
    r.adjacency_ok = false;
    r.one_string_ok = false;
    r.degeneracy = e.what();
    return r;
  }
  std::size_t k = 0;
  for (const crossing& x : xs) {
    edge e(x.a, x.b);
    if (!g.adjacent(x.a, x.b)) r.extra.push_back(e);
    if (x.count > 1) r.multiple.push_back(e);
  }
  for (const edge& e : g.edges()) {
    while (k < xs.size() && edge(xs[k].a, xs[k].b) < e) ++k;
    if (k == xs.size() || edge(xs[k].a, xs[k].b) != e) r.missing.push_back(e);
  }
  r.adjacency_ok = r.missing.empty() && r.extra.empty();
  r.one_string_ok = r.multiple.empty();
  return r;
}

std::string describe(const verification_report& r, const graph& g) {
  std::ostringstream os;
  auto flag = [&](const char* name, bool v) { os << name << ": " << (v ? "true" : "false") << '\n'; };
  auto list_vertices = [&](const char* what, const std::vector<vertex>& vs) {
    if (vs.empty()) return;
    os << "  " << what << ':';
    for (vertex v : vs) os << ' ' << g.name(v);
    os << '\n';
  };
  auto list_pairs = [&](const char* what, const std::vector<edge>& es) {
    if (es.empty()) return;
    os << "  " << what << ':';
    for (const edge& e : es) os << " (" << g.name(e.u) << ',' << g.name(e.v) << ')';
    os << '\n';
  };
  flag("grounded", r.grounded);
  list_vertices("off the ground line", r.off_ground);
  flag("shape_ok", r.shape_ok);
  list_vertices("bad shape", r.bad_shape);
  flag("axis_aligned", r.axis_aligned);
  list_vertices("slanted tail", r.not_axis_aligned);
  flag("adjacency_ok", r.adjacency_ok);
  list_pairs("missing crossing", r.missing);
  list_pairs("extra crossing", r.extra);
  flag("one_string_ok", r.one_string_ok);
  list_pairs("multiple crossings", r.multiple);
  flag("general_position_ok", r.general_position_ok);
  if (!r.degeneracy.empty()) os << "  " << r.degeneracy << '\n';
  return os.str();
}

}  // namespace grounded
