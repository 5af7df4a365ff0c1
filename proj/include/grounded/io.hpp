#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "grounded/geometry.hpp"
#include "grounded/graph.hpp"

namespace grounded {

// Graph files. Text form: first line `n m`, then m lines `u v` with 0-based
// ids; blank lines and `#` comments are ignored. JSON form:
// {"n": 4, "edges": [[0, 1], ...], "names": [...]} with names optional.
// Parse errors carry the line number (text) or the JSON path.
graph parse_graph(std::string_view content);
graph read_graph_file(const std::string& path);
void write_graph_text(std::ostream& os, const graph& g);
std::string graph_to_json(const graph& g);

// Representation files: a JSON array of
// {"vertex", "orientation": "L" | "ML", "anchor_x", "depth_y", "tip_x"},
// plus "anchor_y" / "tip_y" only when they differ from 0 / depth_y.
representation parse_representation(std::string_view content);
representation read_representation_file(const std::string& path);
std::string representation_to_json(const representation& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

struct svg_options {
  int scale = 12;                // pixels per grid unit
  const graph* labels = nullptr; // vertex names for anchor labels
  bool dotted_crossings = false;
};

// Deterministic SVG: ground line, one polyline per curve, anchor labels.
std::string render_svg(const representation& rep, const svg_options& options = {});

}  // namespace grounded
