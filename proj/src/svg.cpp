#include <algorithm>
#include <sstream>

#include "grounded/io.hpp"

namespace grounded {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const representation& rep, const svg_options& options) {
  const coord s = std::max(1, options.scale);
  coord min_x = 0, max_x = 1, max_y = 1;
  for (const grounded_curve& c : rep.curves) {
    min_x = std::min({min_x, c.anchor_x, c.tip_x});
    max_x = std::max({max_x, c.anchor_x, c.tip_x});
    max_y = std::max({max_y, c.depth_y, c.tip_y, c.anchor_y});
  }
  const coord margin = 2 * s;
  auto px = [&](coord x) { return margin + (x - min_x) * s; };
  auto py = [&](coord y) { return margin + y * s; };
  const coord width = px(max_x) + margin, height = py(max_y) + margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << width << "\" y2=\"" << py(0)
     << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const grounded_curve& c : rep.curves) {
    const char* color = c.o == orientation::l ? "#c0392b" : "#2e6bd1";
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << px(c.anchor_x)
       << ',' << py(c.anchor_y) << ' ' << px(c.anchor_x) << ',' << py(c.depth_y) << ' ' << px(c.tip_x) << ','
       << py(c.tip_y) << "\"/>\n";
    std::string label = options.labels ? options.labels->name(c.v) : std::to_string(c.v);
    os << "<text x=\"" << px(c.anchor_x) << "\" y=\"" << py(0) - s / 2
       << "\" font-family=\"sans-serif\" font-size=\"" << s << "\" text-anchor=\"middle\">" << escape(label)
       << "</text>\n";
  }
  if (options.dotted_crossings) {
    // Horizontal tail of a over the vertical part of b.
    for (const grounded_curve& a : rep.curves) {
      if (!a.horizontal_tail()) continue;
      coord lo = std::min(a.anchor_x, a.tip_x), hi = std::max(a.anchor_x, a.tip_x);
      for (const grounded_curve& b : rep.curves) {
        if (&a == &b || b.anchor_x <= lo || b.anchor_x >= hi) continue;
        coord top = std::min(b.anchor_y, b.depth_y), bottom = std::max(b.anchor_y, b.depth_y);
        if (a.depth_y <= top || a.depth_y >= bottom) continue;
        os << "<circle cx=\"" << px(b.anchor_x) << "\" cy=\"" << py(a.depth_y) << "\" r=\"" << std::max<coord>(2, s / 5)
           << "\" fill=\"black\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace grounded
