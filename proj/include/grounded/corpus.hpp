#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grounded/graph.hpp"

namespace grounded {

struct corpus_entry {
  std::string name;
  graph g;
};

std::vector<corpus_entry> cycle_family(int min_n = 3, int max_n = 20);

// Theta graphs with 2..4 branches of length 1..max_len (at most one branch of
// length 1) and at most max_n vertices.
std::vector<corpus_entry> theta_family(int max_len = 6, int max_n = 16);

// Every biconnected series-parallel graph without transitive edges on 4..max_n
// vertices, as parallel compositions of series chains between two poles.
// Isomorphic copies arising from different pole pairs are kept.
std::vector<corpus_entry> sp_all(int max_n);

// Random series-parallel graph on exactly n >= 4 vertices. With
// transitive_free = false, parallel compositions may receive a single edge.
graph sp_random(int n, std::uint64_t seed, bool transitive_free = true);

// One graph per line: `name n m u v u v ...`.
void write_manifest(std::ostream& os, const std::vector<corpus_entry>& entries);
std::vector<corpus_entry> read_manifest(std::istream& is);

}  // namespace grounded
