// groundl: decide, build and verify grounded L / ⌐L representations of
// series-parallel graphs.
//
// Exit codes: 0 representable / verified, 1 not representable / rejected,
// 2 out of class or bad input.

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "grounded/components.hpp"
#include "grounded/construct.hpp"
#include "grounded/corpus.hpp"
#include "grounded/fixtures.hpp"
#include "grounded/heaviness.hpp"
#include "grounded/io.hpp"
#include "grounded/oracle.hpp"
#include "grounded/timing.hpp"

using namespace grounded;

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_out_of_class = 2;

std::string pair_name(const graph& g, vertex a, vertex b) { return "(" + g.name(a) + "," + g.name(b) + ")"; }

int cmd_check(const std::string& path) {
  graph g = read_graph_file(path);
  std::cout << "vertices: " << g.n() << "\nedges: " << g.m() << '\n';
  decision d = decide(g);
  std::cout << "biconnected: " << (d.biconnected ? "true" : "false") << '\n';
  if (!d.biconnected) {
    std::cout << "error: NotBiconnected\n";
    return exit_out_of_class;
  }
  std::cout << "series_parallel: " << (d.series_parallel ? "true" : "false") << '\n';
  if (!d.series_parallel) {
    std::cout << "error: NotSeriesParallel\n";
    return exit_out_of_class;
  }
  const heaviness_report& r = *d.report;
  std::cout << "transitive_edges:";
  if (r.transitive.empty()) std::cout << " none";
  for (const edge& e : r.transitive) std::cout << ' ' << pair_name(g, e.u, e.v);
  std::cout << '\n';
  int max_k = 0;
  for (const p_node_entry& p : r.p_nodes) max_k = std::max(max_k, p.heavy_entries);
  std::cout << "p_nodes: " << r.p_nodes.size() << "\nmax_heavy_at_p_node: " << max_k << '\n';
  std::string prefix = r.advisory ? "verdict (advisory, transitive edges present): " : "verdict: ";
  if (r.at_most_two_heavy) {
    std::cout << prefix << "at most 2-heavy\n";
  } else {
    const p_node_entry& w = r.p_nodes[*r.witness];
    std::cout << prefix << "not 2-heavy\nwitness: P-node " << w.node << " pair " << pair_name(g, w.s, w.t)
              << " lengths";
    for (auto len : w.lengths) std::cout << ' ' << len;
    std::cout << " (" << w.heavy_entries << " greater than 3)\n";
  }
  if (r.advisory) return exit_out_of_class;
  return r.at_most_two_heavy ? exit_yes : exit_no;
}

int cmd_build(const std::string& path, const std::string& out, const std::string& svg, int scale) {
  graph g = read_graph_file(path);
  representation rep;
  try {
    rep = construct_representation(g);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == error_kind::too_heavy ? exit_no : exit_out_of_class;
  }
  std::string text = representation_to_json(rep);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  if (!svg.empty()) {
    svg_options opt;
    opt.scale = scale;
    opt.labels = &g;
    write_file(svg, render_svg(rep, opt));
  }
  std::cerr << "curves: " << rep.curves.size() << ", crossings: " << crossings(rep).size() << '\n';
  return exit_yes;
}

int cmd_verify(const std::string& graph_path, const std::string& rep_path, const std::string& mode) {
  graph g = read_graph_file(graph_path);
  representation rep = read_representation_file(rep_path);
  verify_mode vm = mode == "Lonly" ? verify_mode::l_only : verify_mode::l_and_mirrored;
  verification_report r = verify(g, rep, vm);
  std::cout << "mode: " << mode << '\n' << describe(r, g);
  std::cout << "result: " << (r.ok() ? "accepted" : "rejected") << '\n';
  return r.ok() ? exit_yes : exit_no;
}

void emit_graph(const graph& g, const std::string& out, bool as_json) {
  std::string text;
  if (as_json) {
    text = graph_to_json(g);
  } else {
    std::ostringstream os;
    write_graph_text(os, g);
    text = os.str();
  }
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

int cmd_gen(const std::string& family, const std::vector<int>& params, std::uint64_t seed, int max_n,
            const std::string& out, bool as_json) {
  auto need = [&](std::size_t k) {
    if (params.size() < k) throw error(error_kind::invalid_argument, family + " needs " + std::to_string(k) + " parameter(s)");
  };
  if (family == "cycle") {
    need(1);
    if (params[0] < 3) throw error(error_kind::invalid_argument, "cycle needs n >= 3");
    emit_graph(make_cycle(params[0]), out, as_json);
  } else if (family == "theta") {
    need(2);
    for (int len : params)
      if (len < 1) throw error(error_kind::invalid_argument, "theta branch lengths must be positive");
    emit_graph(make_theta(params), out, as_json);
  } else if (family == "sp-random") {
    need(1);
    emit_graph(sp_random(params[0], seed), out, as_json);
  } else if (family == "fig5") {
    emit_graph(fig5_fixture(), out, as_json);
  } else if (family == "sp-all") {
    std::ostringstream os;
    write_manifest(os, sp_all(max_n));
    if (out.empty())
      std::cout << os.str();
    else
      write_file(out, os.str());
  } else {
    throw error(error_kind::invalid_argument, "unknown family `" + family + "`");
  }
  return exit_yes;
}

int cmd_bench(const std::string& family, std::vector<int> sizes, std::uint64_t seed, int repeats) {
  if (sizes.empty()) sizes = {10, 10000, 20000, 40000, 80000, 160000};
  omp_set_num_threads(1);
  keep_freed_memory();
  std::cout << std::setw(10) << "n" << std::setw(10) << "m" << std::setw(14) << "seconds" << std::setw(8)
            << "ratio" << '\n';
  double prev = 0;
  int prev_n = 0;
  for (int n : sizes) {
    graph g;
    if (family == "cycle")
      g = make_cycle(n);
    else if (family == "sp-random")
      g = sp_random(n, seed);
    else
      throw error(error_kind::invalid_argument, "bench supports cycle and sp-random");
    double best = 1e100;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      auto t0 = std::chrono::steady_clock::now();
      decision d = decide(g);
      auto t1 = std::chrono::steady_clock::now();
      if (!d.series_parallel) throw error(error_kind::not_series_parallel, "bench graph rejected");
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    std::cout << std::setw(10) << n << std::setw(10) << g.m() << std::setw(14) << std::fixed
              << std::setprecision(6) << best;
    if (prev_n > 0 && n == 2 * prev_n)
      std::cout << std::setw(8) << std::setprecision(2) << best / prev;
    else
      std::cout << std::setw(8) << "-";
    std::cout << '\n';
    prev = best;
    prev_n = n;
  }
  return exit_yes;
}

int cmd_oracle(const std::string& path, int bound) {
  graph g = read_graph_file(path);
  heaviness_witness h = oracle_heaviness(g, bound);
  std::cout << "oracle_heaviness: " << h.k;
  if (h.witness) std::cout << " at " << pair_name(g, h.witness->s, h.witness->t);
  std::cout << '\n';
  for (const separation_pair& p : separation_pairs(g)) {
    auto comps = components_of_pair(g, p.s, p.t);
    int heavy = 0;
    for (const component_info& c : comps) heavy += c.heavy;
    std::cout << "pair " << pair_name(g, p.s, p.t) << ": components " << comps.size() << ", heavy " << heavy
              << ", critical " << oracle_critical_count(g, p.s, p.t) << ", longest paths";
    for (const component_info& c : comps) {
      std::vector<vertex> keep{c.s, c.t};
      keep.insert(keep.end(), c.internal.begin(), c.internal.end());
      std::cout << ' ' << oracle_longest_path(g.induced(keep), 0, 1, bound);
    }
    std::cout << '\n';
  }
  return h.k <= 2 ? exit_yes : exit_no;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grounded L / mirrored-L representations of series-parallel graphs"};
  app.require_subcommand(1);

  std::string graph_path, rep_path, out, svg, mode = "LL", family;
  int scale = 12, max_n = 8, repeats = 3, bound = 16;
  std::uint64_t seed = 1;
  bool as_json = false;
  std::vector<int> params;

  auto* check = app.add_subcommand("check", "Decide whether the graph is at most 2-heavy");
  check->add_option("graph", graph_path, "Graph file")->required();

  auto* build = app.add_subcommand("build", "Construct and verify a representation");
  build->add_option("graph", graph_path, "Graph file")->required();
  build->add_option("--out", out, "Representation file (stdout when omitted)");
  build->add_option("--svg", svg, "Also write an SVG drawing");
  build->add_option("--scale", scale, "SVG pixels per grid unit")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Check a representation against a graph");
  ver->add_option("graph", graph_path, "Graph file")->required();
  ver->add_option("rep", rep_path, "Representation file")->required();
  ver->add_option("--mode", mode, "LL (L and mirrored L) or Lonly")->check(CLI::IsMember({"LL", "Lonly"}));

  auto* gen = app.add_subcommand("gen", "Generate a graph: cycle N | theta A B .. | sp-random N | sp-all | fig5");
  gen->add_option("family", family, "Family")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--seed", seed, "Seed for sp-random");
  gen->add_option("--max-n", max_n, "Vertex bound for sp-all");
  gen->add_option("--out", out, "Output file (stdout when omitted)");
  gen->add_flag("--json", as_json, "Write the JSON graph form");

  auto* bench = app.add_subcommand("bench", "Time the decision pipeline: cycle | sp-random");
  bench->add_option("family", family, "Family")->required();
  bench->add_option("sizes", params, "Vertex counts");
  bench->add_option("--seed", seed, "Seed for sp-random");
  bench->add_option("--repeats", repeats, "Runs per size (minimum is reported)");

  auto* orc = app.add_subcommand("oracle", "Brute-force heaviness, critical counts and longest paths");
  orc->add_option("graph", graph_path, "Graph file")->required();
  orc->add_option("--max-n", bound, "Refuse graphs with more vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_out_of_class;
  }

  try {
    if (check->parsed()) return cmd_check(graph_path);
    if (build->parsed()) return cmd_build(graph_path, out, svg, scale);
    if (ver->parsed()) return cmd_verify(graph_path, rep_path, mode);
    if (gen->parsed()) return cmd_gen(family, params, seed, max_n, out, as_json);
    if (bench->parsed()) return cmd_bench(family, params, seed, repeats);
    if (orc->parsed()) return cmd_oracle(graph_path, bound);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_out_of_class;
  }
  return exit_out_of_class;
}
