#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "grounded/construct.hpp"
#include "grounded/error.hpp"
#include "grounded/fixtures.hpp"
#include "grounded/geometry.hpp"

using namespace grounded;

namespace {

representation pair_rep(grounded_curve a, grounded_curve b) { return representation{{a, b}}; }

// Random curves in general position: anchors on even x, tips on odd x,
// distinct depths.
representation random_rep(int n, std::mt19937_64& rng) {
  std::vector<coord> xs(n), ys(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 1);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  std::uniform_int_distribution<int> reach(0, n);
  std::bernoulli_distribution flip(0.5);
  representation rep;
  for (int i = 0; i < n; ++i) {
    coord ax = 2 * xs[i];
    bool left = flip(rng);
    coord len = 2 * reach(rng) + 1;
    rep.curves.push_back(make_curve(i, left ? orientation::mirrored_l : orientation::l, ax, ys[i],
                                    left ? ax - len : ax + len));
  }
  return rep;
}

}  // namespace

TEST_CASE("crossing examples") {
  // Disjoint staircase.
  CHECK(curve_crossings(make_curve(0, orientation::l, 1, 5, 4), make_curve(1, orientation::l, 2, 3, 6)) == 0);
  // Shallow horizontal through a deeper vertical.
  CHECK(curve_crossings(make_curve(0, orientation::l, 1, 2, 4), make_curve(1, orientation::l, 3, 5, 6)) == 1);
  // L against a mirrored L.
  CHECK(curve_crossings(make_curve(0, orientation::l, 1, 2, 5), make_curve(1, orientation::mirrored_l, 4, 6, 0)) ==
        1);

  auto xs = crossings(pair_rep(make_curve(0, orientation::l, 1, 2, 4), make_curve(1, orientation::l, 3, 5, 6)));
  REQUIRE(xs.size() == 1);
  CHECK(xs[0] == crossing{0, 1, 1});
}

TEST_CASE("touching curves are degenerate") {
  // Tip ends exactly on the other vertical.
  representation rep = pair_rep(make_curve(0, orientation::l, 1, 2, 3), make_curve(1, orientation::l, 3, 5, 6));
  CHECK_THROWS_AS(crossings(rep), error);
  // Shared anchor.
  representation shared = pair_rep(make_curve(0, orientation::l, 1, 2, 4), make_curve(1, orientation::l, 1, 5, 6));
  CHECK_THROWS_AS(crossings(shared), error);
}

TEST_CASE("slanted tails can cross twice") {
  grounded_curve a = make_curve(0, orientation::l, 0, 10, 20);
  grounded_curve b = make_curve(1, orientation::mirrored_l, 10, 11, 3);
  b.tip_y = 5;  // rises back across a's horizontal
  CHECK(curve_crossings(a, b) == 2);
  CHECK(curve_crossings(b, a) == 2);
}

TEST_CASE("symmetry, translation and serial agreement") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    representation rep = random_rep(2 + round % 40, rng);
    auto par = crossings(rep);
    CHECK(par == crossings_serial(rep));
    representation moved = rep;
    for (grounded_curve& c : moved.curves) {
      c.anchor_x += 1000;
      c.tip_x += 1000;
    }
    CHECK(crossings(moved) == par);
    if (rep.curves.size() >= 2) {
      const grounded_curve& a = rep.curves[0];
      const grounded_curve& b = rep.curves[1];
      CHECK(curve_crossings(a, b) == curve_crossings(b, a));
    }
  }
}

TEST_CASE("verifier on a constructed representation") {
  graph g = fig5_fixture();
  representation rep = construct_representation(g);
  verification_report r = verify(g, rep);
  CHECK(r.ok());
  CHECK(r.grounded);
  CHECK(r.shape_ok);
  CHECK(r.axis_aligned);
  CHECK(r.adjacency_ok);
  CHECK(r.one_string_ok);
  CHECK(r.general_position_ok);

  SUBCASE("truncated tip") {
    // Pull one tip back to just past its own anchor: every crossing made by
    // its horizontal disappears.
    representation bad = rep;
    auto it = std::max_element(bad.curves.begin(), bad.curves.end(), [](const auto& a, const auto& b) {
      return std::llabs(a.tip_x - a.anchor_x) < std::llabs(b.tip_x - b.anchor_x);
    });
    it->tip_x = it->anchor_x + (it->o == orientation::l ? 1 : -1);
    verification_report br = verify(g, bad);
    CHECK_FALSE(br.adjacency_ok);
    REQUIRE_FALSE(br.missing.empty());
    for (const edge& e : br.missing) CHECK((e.u == it->v || e.v == it->v));
    CHECK(describe(br, g).find("missing crossing") != std::string::npos);
  }
  SUBCASE("L-only mode") {
    bool has_ml = std::any_of(rep.curves.begin(), rep.curves.end(),
                              [](const auto& c) { return c.o == orientation::mirrored_l; });
    REQUIRE(has_ml);
    verification_report lr = verify(g, rep, verify_mode::l_only);
    CHECK_FALSE(lr.shape_ok);
    CHECK_FALSE(lr.ok());
  }
}

TEST_CASE("verifier report fields") {
  graph g(2, {{0, 1}});
  representation good = pair_rep(make_curve(0, orientation::l, 1, 2, 4), make_curve(1, orientation::l, 3, 5, 6));
  CHECK(verify(g, good).ok());
  CHECK(verify(g, good, verify_mode::l_only).ok());

  representation lifted = good;
  lifted.curves[0].anchor_y = -1;
  CHECK_FALSE(verify(g, lifted).grounded);

  representation wrong_side = good;
  wrong_side.curves[1].o = orientation::mirrored_l;
  CHECK_FALSE(verify(g, wrong_side).shape_ok);

  graph empty(2, {});
  verification_report extra = verify(empty, good);
  CHECK(extra.extra == std::vector<edge>{{0, 1}});

  CHECK_THROWS_AS(verify(graph(3, {}), good), error);
}
