#include "grounded/fixtures.hpp"

#include <map>

namespace grounded {

graph fig5_fixture() {
  // Two long s-t paths through v3 and w3, a path s-u-t of length two, and four
  // detours of length three: s-y1-y2-v3, v3-y4-y5-t, s-x1-x2-w3, w3-x4-x5-t.
  // The vertex before w3 on the s side is x2, so X = {x1, x2, x4, x5}.
  const std::vector<std::string> names{"s",  "t",  "u",  "v1", "v2", "v3", "v4", "v5", "w1", "w2", "w3",
                                       "w4", "w5", "x1", "x2", "x4", "x5", "y1", "y2", "y4", "y5"};
  std::map<std::string, vertex> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = static_cast<vertex>(i);
  const std::vector<std::vector<std::string>> paths{
      {"s", "u", "t"},
      {"s", "v1", "v2", "v3", "v4", "v5", "t"},
      {"s", "w1", "w2", "w3", "w4", "w5", "t"},
      {"s", "y1", "y2", "v3"},
      {"v3", "y4", "y5", "t"},
      {"s", "x1", "x2", "w3"},
      {"w3", "x4", "x5", "t"},
  };
  std::vector<std::pair<vertex, vertex>> edges;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(id.at(p[i]), id.at(p[i + 1]));
  graph g(static_cast<int>(names.size()), edges);
  g.set_names(names);
  return g;
}

}  // namespace grounded
