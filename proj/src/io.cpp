#include "grounded/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace grounded {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) { throw error(error_kind::parse, what); }

graph parse_graph_json(std::string_view content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_error("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) parse_error("/n: expected an integer");
  if (!j.contains("edges") || !j["edges"].is_array()) parse_error("/edges: expected an array");
  long long n = j["n"].get<long long>();
  if (n < 0 || n > (1LL << 30)) parse_error("/n: out of range");
  std::vector<std::pair<vertex, vertex>> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      parse_error("/edges/" + std::to_string(i) + ": expected [u, v]");
    long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_error("/edges/" + std::to_string(i) + ": vertex id out of range");
    edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
  }
  graph g;
  try {
    g = graph(static_cast<int>(n), edges);
  } catch (const error& e) {
    parse_error(std::string("/edges: ") + e.what());
  }
  if (j.contains("names")) {
    const json& names = j["names"];
    if (!names.is_array() || static_cast<long long>(names.size()) != n)
      parse_error("/names: expected an array of n strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string()) parse_error("/names/" + std::to_string(i) + ": expected a string");
      out.push_back(names[i].get<std::string>());
    }
    g.set_names(std::move(out));
  }
  return g;
}

graph parse_graph_text(std::string_view content) {
  std::istringstream is{std::string(content)};
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<vertex, vertex>> edges;
  std::vector<int> edge_line;
  auto fail = [&](const std::string& what) { parse_error("line " + std::to_string(line_no) + ": " + what); };
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) {
      ls.clear();
      std::string rest;
      if (ls >> rest) fail("expected integers, found `" + rest + "`");
      continue;
    }
    if (!(ls >> b)) fail("expected two integers");
    std::string extra;
    if (ls >> extra) fail("unexpected trailing `" + extra + "`");
    if (n < 0) {
      if (a < 0 || b < 0 || a > (1LL << 30)) fail("invalid header");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) fail("more than " + std::to_string(m) + " edges");
    if (a < 0 || b < 0 || a >= n || b >= n) fail("vertex id out of range 0.." + std::to_string(n - 1));
    edges.emplace_back(static_cast<vertex>(a), static_cast<vertex>(b));
    edge_line.push_back(line_no);
  }
  if (n < 0) parse_error("line 1: missing header `n m`");
  if (static_cast<long long>(edges.size()) != m)
    parse_error("line " + std::to_string(line_no) + ": expected " + std::to_string(m) + " edges, found " +
                std::to_string(edges.size()));
  // Report loops at their line; duplicates are caught by the graph constructor.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) parse_error("line " + std::to_string(edge_line[i]) + ": self-loop at " + std::to_string(u));
  }
  try {
    return graph(static_cast<int>(n), edges);
  } catch (const error& e) {
    parse_error(e.what());
  }
}

}  // namespace

graph parse_graph(std::string_view content) {
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return parse_graph_json(content);
  return parse_graph_text(content);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(error_kind::parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(error_kind::invalid_argument, "cannot write " + path);
  out << content;
}

graph read_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

void write_graph_text(std::ostream& os, const graph& g) {
  os << g.n() << ' ' << g.m() << '\n';
  for (const edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

std::string graph_to_json(const graph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (const edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  bool named = false;
  for (vertex v = 0; v < g.n(); ++v) named |= g.name(v) != std::to_string(v);
  if (named) j["names"] = g.names();
  return j.dump(2) + "\n";
}

representation parse_representation(std::string_view content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  std::string prefix;
  if (j.is_object() && j.contains("curves")) {
    j = j["curves"];
    prefix = "/curves";
  }
  if (!j.is_array()) parse_error("representation must be an array of curves");
  representation rep;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    std::string at = prefix + "/" + std::to_string(i);
    if (!c.is_object()) parse_error(at + ": expected an object");
    auto integer = [&](const char* key, bool required, coord fallback) -> coord {
      if (!c.contains(key)) {
        if (required) parse_error(at + ": missing `" + key + "`");
        return fallback;
      }
      if (!c[key].is_number_integer()) parse_error(at + "/" + key + ": expected an integer");
      return c[key].get<coord>();
    };
    grounded_curve cur;
    cur.v = static_cast<vertex>(integer("vertex", true, 0));
    if (!c.contains("orientation") || !c["orientation"].is_string())
      parse_error(at + ": missing `orientation`");
    std::string o = c["orientation"].get<std::string>();
    if (o == "L")
      cur.o = orientation::l;
    else if (o == "ML")
      cur.o = orientation::mirrored_l;
    else
      parse_error(at + "/orientation: expected \"L\" or \"ML\", found \"" + o + "\"");
    cur.anchor_x = integer("anchor_x", true, 0);
    cur.depth_y = integer("depth_y", true, 0);
    cur.tip_x = integer("tip_x", true, 0);
    cur.anchor_y = integer("anchor_y", false, 0);
    cur.tip_y = integer("tip_y", false, cur.depth_y);
    rep.curves.push_back(cur);
  }
  return rep;
}

representation read_representation_file(const std::string& path) { return parse_representation(read_file(path)); }

std::string representation_to_json(const representation& rep) {
  json arr = json::array();
  for (const grounded_curve& c : rep.curves) {
    json r;
    r["vertex"] = c.v;
    r["orientation"] = c.o == orientation::l ? "L" : "ML";
    r["anchor_x"] = c.anchor_x;
    r["depth_y"] = c.depth_y;
    r["tip_x"] = c.tip_x;
    if (c.anchor_y != 0) r["anchor_y"] = c.anchor_y;
    if (c.tip_y != c.depth_y) r["tip_y"] = c.tip_y;
    arr.push_back(r);
  }
  // One record per line keeps the files diff-friendly.
  std::string out = "[\n";
  for (std::size_t i = 0; i < arr.size(); ++i) out += "  " + arr[i].dump() + (i + 1 < arr.size() ? ",\n" : "\n");
  out += "]\n";
  return out;
}

}  // namespace grounded
