#include "grounded/corpus.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace grounded {

std::vector<corpus_entry> cycle_family(int min_n, int max_n) {
  std::vector<corpus_entry> out;
  for (int n = min_n; n <= max_n; ++n) out.push_back({"C" + std::to_string(n), make_cycle(n)});
  return out;
}

std::vector<corpus_entry> theta_family(int max_len, int max_n) {
  std::vector<corpus_entry> out;
  std::vector<int> lengths;
  auto emit = [&] {
    int n = 2, ones = 0;
    for (int len : lengths) {
      n += len - 1;
      ones += len == 1;
    }
    if (lengths.size() < 2 || ones > 1 || n > max_n) return;
    std::string name = "theta(";
    for (std::size_t i = lengths.size(); i-- > 0;) name += std::to_string(lengths[i]) + (i ? "," : ")");
    out.push_back({name, make_theta(lengths)});
  };
  // Non-decreasing length tuples with 2..4 branches.
  auto rec = [&](auto& self, int from) -> void {
    emit();
    if (lengths.size() == 4) return;
    for (int len = from; len <= max_len; ++len) {
      lengths.push_back(len);
      self(self, len);
      lengths.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

// Structure of a two-terminal piece: an edge, a series chain of at least two
// elements, or a parallel bundle of at least two series chains.
struct shape {
  char kind = 'e';
  int weight = 0;  // internal vertices
  std::string code;
  std::vector<const shape*> kids;
};

class shape_enumerator {
 public:
  const std::vector<const shape*>& series(int k) {
    grow(k);
    return s_[k];
  }
  const std::vector<const shape*>& parallel(int k) {
    grow(k);
    return p_[k];
  }

 private:
  std::deque<shape> pool_;
  std::vector<std::vector<const shape*>> s_, p_;
  shape edge_{'e', 0, "e", {}};

  const shape* make(char kind, std::vector<const shape*> kids) {
    shape x;
    x.kind = kind;
    x.code = std::string(1, kind) + "(";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      x.weight += kids[i]->weight;
      x.code += (i ? "," : "") + kids[i]->code;
    }
    x.code += ")";
    if (kind == 'S') x.weight += static_cast<int>(kids.size()) - 1;
    x.kids = std::move(kids);
    pool_.push_back(std::move(x));
    return &pool_.back();
  }

  void grow(int k) {
    while (static_cast<int>(s_.size()) <= k) {
      int w = static_cast<int>(s_.size());
      s_.emplace_back();
      p_.emplace_back();
      build_parallel(w);
      build_series(w);
    }
  }

  void build_series(int k) {
    if (k < 1) return;
    // Elements: edges and parallel bundles of weight 2..k-1.
    std::vector<const shape*> elems{&edge_};
    for (int j = 2; j < k; ++j)
      for (const shape* x : p_[j]) elems.push_back(x);
    std::vector<const shape*> seq;
    auto rec = [&](auto& self, int used) -> void {
      if (used == k && seq.size() >= 2) {
        std::vector<std::string> fwd, bwd;
        for (const shape* x : seq) fwd.push_back(x->code);
        bwd.assign(fwd.rbegin(), fwd.rend());
        if (fwd <= bwd) s_[k].push_back(make('S', seq));
        return;
      }
      for (const shape* x : elems) {
        int next = used + x->weight + (seq.empty() ? 0 : 1);
        if (next > k) continue;
        seq.push_back(x);
        self(self, next);
        seq.pop_back();
      }
    };
    rec(rec, 0);
  }

  void build_parallel(int k) {
    if (k < 2) return;
    std::vector<const shape*> kids;  // series chains of weight 1..k-1
    for (int j = 1; j < k; ++j)
      for (const shape* x : s_[j]) kids.push_back(x);
    std::vector<const shape*> pick;
    auto rec = [&](auto& self, std::size_t from, int used) -> void {
      if (used == k) {
        if (pick.size() >= 2) p_[k].push_back(make('P', pick));
        return;
      }
      for (std::size_t i = from; i < kids.size(); ++i) {
        if (used + kids[i]->weight > k) continue;
        pick.push_back(kids[i]);
        self(self, i, used + kids[i]->weight);
        pick.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
};

void realize(const shape* x, vertex a, vertex b, int& next, std::vector<std::pair<vertex, vertex>>& edges) {
  if (x->kind == 'e') {
    edges.emplace_back(a, b);
  } else if (x->kind == 'P') {
    for (const shape* k : x->kids) realize(k, a, b, next, edges);
  } else {
    vertex from = a;
    for (std::size_t i = 0; i < x->kids.size(); ++i) {
      vertex to = i + 1 == x->kids.size() ? b : next++;
      realize(x->kids[i], from, to, next, edges);
      from = to;
    }
  }
}

}  // namespace

std::vector<corpus_entry> sp_all(int max_n) {
  std::vector<corpus_entry> out;
  shape_enumerator en;
  for (int n = 4; n <= max_n; ++n) {
    int idx = 0;
    for (const shape* top : en.parallel(n - 2)) {
      int next = 2;
      std::vector<std::pair<vertex, vertex>> edges;
      realize(top, 0, 1, next, edges);
      out.push_back({"sp" + std::to_string(n) + "_" + std::to_string(idx++), graph(n, edges)});
    }
  }
  return out;
}

graph sp_random(int n, std::uint64_t seed, bool transitive_free) {
  if (n < 4) throw error(error_kind::invalid_argument, "sp_random needs at least 4 vertices");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  struct task {
    char kind;
    vertex a, b;
    int budget;  // internal vertices to place
  };
  std::vector<task> stack{{'P', 0, 1, n - 2}};
  std::vector<std::pair<vertex, vertex>> edges;
  edges.reserve(static_cast<std::size_t>(n) * 3 / 2);
  vertex next = 2;

  while (!stack.empty()) {
    task tk = stack.back();
    stack.pop_back();
    if (tk.kind == 'P') {
      // Split the budget into 2..4 positive parts, one series chain each.
      int r = uniform(2, std::min(tk.budget, 4));
      std::set<int> cuts;
      while (static_cast<int>(cuts.size()) < r - 1) cuts.insert(uniform(1, tk.budget - 1));
      int prev = 0;
      cuts.insert(tk.budget);
      for (int c : cuts) {
        stack.push_back({'S', tk.a, tk.b, c - prev});
        prev = c;
      }
      if (!transitive_free && uniform(0, 3) == 0) edges.emplace_back(tk.a, tk.b);
    } else {
      // 1..6 cut vertices, the rest spread over the segments between them.
      int c = uniform(1, std::min(tk.budget, 6));
      int rest = tk.budget - c;
      std::vector<int> cuts;
      for (int i = 0; i < c; ++i) cuts.push_back(uniform(0, rest));
      cuts.push_back(rest);
      std::sort(cuts.begin(), cuts.end());
      vertex from = tk.a;
      int prev = 0;
      for (int i = 0; i <= c; ++i) {
        vertex to = i == c ? tk.b : next++;
        int part = cuts[i] - prev;
        prev = cuts[i];
        if (part == 0)
          edges.emplace_back(from, to);
        else
          stack.push_back({part == 1 ? 'S' : 'P', from, to, part});
        from = to;
      }
    }
  }
  return graph(n, edges);
}

void write_manifest(std::ostream& os, const std::vector<corpus_entry>& entries) {
  for (const corpus_entry& e : entries) {
    os << e.name << ' ' << e.g.n() << ' ' << e.g.m();
    for (const edge& x : e.g.edges()) os << ' ' << x.u << ' ' << x.v;
    os << '\n';
  }
}

std::vector<corpus_entry> read_manifest(std::istream& is) {
  std::vector<corpus_entry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    int n = 0, m = 0;
    if (!(ls >> name >> n >> m) || n < 0 || m < 0)
      throw error(error_kind::parse, "manifest line " + std::to_string(line_no) + ": expected `name n m`");
    std::vector<std::pair<vertex, vertex>> edges(m);
    for (auto& [u, v] : edges)
      if (!(ls >> u >> v))
        throw error(error_kind::parse, "manifest line " + std::to_string(line_no) + ": too few edge endpoints");
    out.push_back({name, graph(n, edges)});
  }
  return out;
}

}  // namespace grounded
