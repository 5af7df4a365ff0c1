#include <doctest.h>

#include <sstream>

#include "grounded/construct.hpp"
#include "grounded/corpus.hpp"
#include "grounded/error.hpp"
#include "grounded/fixtures.hpp"
#include "grounded/io.hpp"

using namespace grounded;

namespace {

std::string parse_message(std::string_view content) {
  try {
    parse_graph(content);
  } catch (const error& e) {
    CHECK(e.kind() == error_kind::parse);
    return e.what();
  }
  FAIL("input was accepted");
  return {};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("text graph format") {
  graph g = parse_graph("# a square\n4 4\n0 1\n1 2\n\n2 3  # last but one\n3 0\n");
  CHECK(g == make_cycle(4));

  std::ostringstream os;
  write_graph_text(os, g);
  CHECK(os.str() == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(parse_graph(os.str()) == g);
}

TEST_CASE("text parse errors name the line") {
  CHECK(contains(parse_message("3 2\n0 1\n1 x\n"), "line 3"));
  CHECK(contains(parse_message("3 2\n0 1\n1 5\n"), "line 3"));
  CHECK(contains(parse_message("3 2\n0 1\n2 2\n"), "line 3"));
  CHECK(contains(parse_message("3 2\n0 1\n"), "expected 2 edges"));
  CHECK(contains(parse_message("3 1\n0 1\n1 2\n"), "line 3"));
  CHECK(contains(parse_message("3 1\n0 1 2\n"), "line 2"));
  CHECK(contains(parse_message(""), "missing header"));
}

TEST_CASE("JSON graph format") {
  graph g = parse_graph(R"({"n": 3, "edges": [[0, 1], [1, 2], [2, 0]], "names": ["a", "b", "c"]})");
  CHECK(g == make_complete(3));
  CHECK(g.name(2) == "c");
  graph back = parse_graph(graph_to_json(g));
  CHECK(back == g);
  CHECK(back.names() == g.names());

  CHECK(contains(parse_message(R"({"n": 3, "edges": [[0, 1], [1]]})"), "/edges/1"));
  CHECK(contains(parse_message(R"({"n": 3, "edges": [[0, 7]]})"), "/edges/0"));
  CHECK(contains(parse_message(R"({"edges": []})"), "/n"));
  CHECK(contains(parse_message(R"({"n": 2, "edges": [], "names": ["a"]})"), "/names"));
  CHECK(contains(parse_message(R"({"n": 2, "edges": [)"), "invalid JSON"));
  // Unnamed graphs do not emit names.
  CHECK_FALSE(contains(graph_to_json(make_cycle(3)), "names"));
}

TEST_CASE("corpus graphs round-trip") {
  std::vector<corpus_entry> corpus = sp_all(8);
  for (const auto& e : theta_family(4, 12)) corpus.push_back(e);
  corpus.push_back({"fig5", fig5_fixture()});
  for (const corpus_entry& e : corpus) {
    std::ostringstream os;
    write_graph_text(os, e.g);
    CHECK(parse_graph(os.str()) == e.g);
    graph j = parse_graph(graph_to_json(e.g));
    CHECK(j == e.g);
    CHECK(j.names() == e.g.names());
  }
  std::ostringstream manifest;
  write_manifest(manifest, corpus);
  std::istringstream in(manifest.str());
  std::vector<corpus_entry> back = read_manifest(in);
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name == corpus[i].name);
    CHECK(back[i].g == corpus[i].g);
  }
}

TEST_CASE("representation round-trip") {
  for (const corpus_entry& e : sp_all(8)) {
    if (!decide(e.g).representable()) continue;
    representation rep = construct_representation(e.g);
    CHECK(parse_representation(representation_to_json(rep)) == rep);
  }
  representation odd;
  grounded_curve c = make_curve(4, orientation::mirrored_l, 10, 3, 2);
  c.anchor_y = -2;
  c.tip_y = 7;
  odd.curves.push_back(c);
  std::string text = representation_to_json(odd);
  CHECK(contains(text, "\"anchor_y\":-2"));
  CHECK(contains(text, "\"tip_y\":7"));
  CHECK(parse_representation(text) == odd);
  CHECK(parse_representation(R"({"curves": [{"vertex": 4, "orientation": "ML", "anchor_x": 10, "depth_y": 3,
      "tip_x": 2, "anchor_y": -2, "tip_y": 7}]})") == odd);
}

TEST_CASE("representation parse errors") {
  auto message = [](std::string_view content) -> std::string {
    try {
      parse_representation(content);
    } catch (const error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(contains(message(R"([{"vertex": 0, "orientation": "Z", "anchor_x": 0, "depth_y": 1, "tip_x": 1}])"),
                 "/0/orientation"));
  CHECK(contains(message(R"([{"vertex": 0, "orientation": "L", "depth_y": 1, "tip_x": 1}])"), "anchor_x"));
  CHECK(contains(message(R"({"curves": [1]})"), "/curves/0"));
  CHECK(contains(message("[1, 2"), "invalid JSON"));
}

TEST_CASE("SVG output") {
  representation two{{make_curve(0, orientation::l, 1, 2, 4), make_curve(1, orientation::l, 3, 5, 6)}};
  std::string svg = render_svg(two);
  CHECK(contains(svg, "<svg"));
  CHECK(contains(svg, "</svg>"));
  std::size_t lines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos; at = svg.find("<polyline", at + 1)) ++lines;
  CHECK(lines == 2);
  svg_options dotted;
  dotted.dotted_crossings = true;
  std::string with_dots = render_svg(two, dotted);
  std::size_t dots = 0;
  for (std::size_t at = with_dots.find("<circle"); at != std::string::npos; at = with_dots.find("<circle", at + 1))
    ++dots;
  CHECK(dots == 1);

  std::string empty = render_svg(representation{});
  CHECK(contains(empty, "<line"));
  CHECK_FALSE(contains(empty, "<polyline"));

  graph g = fig5_fixture();
  representation rep = construct_representation(g);
  svg_options labelled;
  labelled.labels = &g;
  std::string a = render_svg(rep, labelled), b = render_svg(rep, labelled);
  CHECK(a == b);
  CHECK(contains(a, ">w3</text>"));
}
