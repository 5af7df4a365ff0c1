// End-to-end checks of the groundl binary: exit codes, files and messages.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "grounded/geometry.hpp"
#include "grounded/graph.hpp"
#include "grounded/io.hpp"

using namespace grounded;
namespace fs = std::filesystem;

namespace {

int failures = 0;
fs::path dir;

struct run_result {
  int code = -1;
  std::string out;
};

run_result run(const std::string& args) {
  fs::path out_file = dir / "stdout.txt";
  std::string cmd = std::string(GROUNDL_BIN) + " " + args + " > " + out_file.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  run_result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_file.string());
  return r;
}

void expect(bool ok, const std::string& what, const run_result& r = {}) {
  if (ok) return;
  ++failures;
  std::cerr << "FAILED: " << what << " (exit " << r.code << ")\n" << r.out << '\n';
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string path(const std::string& name) { return (dir / name).string(); }

}  // namespace

int main() {
  dir = fs::temp_directory_path() / ("groundl_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  // gen
  run_result r = run("gen cycle 8 --out " + path("c8.txt"));
  expect(r.code == 0, "gen cycle 8", r);
  expect(read_graph_file(path("c8.txt")) == make_cycle(8), "gen cycle 8 content");
  r = run("gen theta 4 4 4 --out " + path("t444.txt"));
  expect(r.code == 0 && read_graph_file(path("t444.txt")) == make_theta({4, 4, 4}), "gen theta 4 4 4", r);
  run("gen theta 4 4 2 --out " + path("t442.txt"));
  r = run("gen fig5 --json --out " + path("fig5.json"));
  expect(r.code == 0, "gen fig5", r);
  graph fig5 = read_graph_file(path("fig5.json"));
  expect(fig5.n() == 21 && fig5.m() == 26 && fig5.name(0) == "s", "fig5 content");
  r = run("gen cycle 2");
  expect(r.code == 2 && has(r.out, "error:"), "gen cycle 2 rejected", r);
  r = run("gen sp-all --max-n 6");
  expect(r.code == 0 && has(r.out, "sp6_"), "gen sp-all", r);

  // check
  r = run("check " + path("t442.txt"));
  expect(r.code == 0 && has(r.out, "verdict: at most 2-heavy"), "check theta 4 4 2", r);
  r = run("check " + path("t444.txt"));
  expect(r.code == 1 && has(r.out, "not 2-heavy") && has(r.out, "pair (0,1)"), "check theta 4 4 4", r);
  write_file(path("k4.txt"), "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  r = run("check " + path("k4.txt"));
  expect(r.code == 2 && has(r.out, "NotSeriesParallel"), "check K4", r);
  write_file(path("path.txt"), "3 2\n0 1\n1 2\n");
  r = run("check " + path("path.txt"));
  expect(r.code == 2 && has(r.out, "NotBiconnected"), "check path", r);
  write_file(path("diamond.txt"), "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
  r = run("check " + path("diamond.txt"));
  expect(r.code == 2 && has(r.out, "advisory"), "check diamond", r);
  write_file(path("bad.txt"), "3 2\n0 1\n1 q\n");
  r = run("check " + path("bad.txt"));
  expect(r.code == 2 && has(r.out, "line 3"), "parse error line", r);
  r = run("check " + path("missing.txt"));
  expect(r.code == 2, "missing file", r);

  // build and verify
  r = run("build " + path("fig5.json") + " --out " + path("fig5.rep.json") + " --svg " + path("fig5.svg"));
  expect(r.code == 0, "build fig5", r);
  expect(fs::exists(path("fig5.svg")), "fig5 svg written");
  r = run("verify " + path("fig5.json") + " " + path("fig5.rep.json"));
  expect(r.code == 0 && has(r.out, "result: accepted"), "verify fig5", r);
  r = run("verify " + path("fig5.json") + " " + path("fig5.rep.json") + " --mode Lonly");
  expect(r.code == 1 && has(r.out, "shape_ok: false"), "verify fig5 Lonly", r);

  run("gen cycle 12 --out " + path("c12.txt"));
  r = run("build " + path("c12.txt") + " --out " + path("c12.rep.json"));
  expect(r.code == 0 && has(r.out, "curves: 12, crossings: 12"), "build C12", r);
  representation c12 = read_representation_file(path("c12.rep.json"));
  expect(c12.curves.size() == 12 && crossings(c12).size() == 12, "C12 representation");

  r = run("build " + path("t444.txt") + " --out " + path("t444.rep.json"));
  expect(r.code == 1 && has(r.out, "TooHeavy") && !fs::exists(path("t444.rep.json")), "build theta 4 4 4", r);
  r = run("build " + path("k4.txt"));
  expect(r.code == 2, "build K4", r);

  // Shorten the tip of vertex 0 in C12 back to its own anchor.
  for (grounded_curve& c : c12.curves)
    if (c.v == 0) c.tip_x = c.anchor_x + (c.o == orientation::l ? 1 : -1);
  write_file(path("c12.bad.json"), representation_to_json(c12));
  r = run("verify " + path("c12.txt") + " " + path("c12.bad.json"));
  expect(r.code == 1 && has(r.out, "adjacency_ok: false") && has(r.out, "missing crossing: (0,"),
         "verify shortened tip", r);

  // oracle
  r = run("oracle " + path("t444.txt"));
  expect(r.code == 1 && has(r.out, "oracle_heaviness: 3"), "oracle theta 4 4 4", r);
  r = run("oracle " + path("fig5.json") + " --max-n 21");
  expect(r.code == 0 && has(r.out, "oracle_heaviness: 2"), "oracle fig5", r);

  // bench sanity row and usage errors
  r = run("bench cycle 10 --repeats 1");
  expect(r.code == 0 && has(r.out, "ratio"), "bench", r);
  r = run("frobnicate");
  expect(r.code == 2, "unknown subcommand", r);
  r = run("verify " + path("c12.txt") + " " + path("c12.rep.json") + " --mode XY");
  expect(r.code == 2, "bad mode", r);

  fs::remove_all(dir);
  std::cout << (failures == 0 ? "all CLI checks passed" : std::to_string(failures) + " CLI checks failed") << '\n';
  return failures == 0 ? 0 : 1;
}
