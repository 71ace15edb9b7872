#include "gndb/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "gndb/graph6.hpp"

namespace gndb {

namespace {

// Iterated equitable refinement. Returns a color per vertex; color ids are
// ordered by the (label-independent) signature sort, so isomorphic graphs get
// identical class structures in identical order.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = g.degree(v);
  {
    std::vector<int> uniq(color);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), color[static_cast<size_t>(v)]) - uniq.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.push_back(color[static_cast<size_t>(v)]);
      std::vector<int> around;
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        around.push_back(color[static_cast<size_t>(u)]);
      }
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> uniq(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) - uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  // min-rooted, so find() returns the smallest member of the set
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
  }
};

// DFS over class-respecting labelings. Position p contributes the adjacency
// column against positions 0..p-1 as a p-bit value (earlier position = higher
// bit); the concatenated columns are exactly the graph6 bit order, so the
// minimum over the search equals the minimum graph6 string. Branches whose
// column exceeds the best prefix are cut; ties are always explored, and every
// labeling that ties the final minimum contributes an automorphism.
class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g)
      : g_(g),
        n_(g.order()),
        class_of_pos_(static_cast<size_t>(n_)),
        pos_vertex_(static_cast<size_t>(n_), -1),
        best_cols_(static_cast<size_t>(n_), 0),
        best_pos_vertex_(static_cast<size_t>(n_), -1),
        orbits_(n_) {
    color_ = refine_colors(g);
    int p = 0;
    int classes = *std::max_element(color_.begin(), color_.end()) + 1;
    for (int c = 0; c < classes; ++c)
      for (int v = 0; v < n_; ++v)
        if (color_[static_cast<size_t>(v)] == c) class_of_pos_[static_cast<size_t>(p++)] = c;
  }

  CanonicalResult run() {
    dfs(0, 0);
    CanonicalResult result{Graph(n_), std::vector<int>(static_cast<size_t>(n_)),
                           std::vector<int>(static_cast<size_t>(n_))};
    for (int p = 0; p < n_; ++p)
      result.labeling[static_cast<size_t>(best_pos_vertex_[static_cast<size_t>(p)])] = p;
    for (auto [u, v] : g_.edges())
      result.graph.add_edge(result.labeling[static_cast<size_t>(u)],
                            result.labeling[static_cast<size_t>(v)]);
    for (int v = 0; v < n_; ++v) result.orbit[static_cast<size_t>(v)] = orbits_.find(v);
    return result;
  }

 private:
  void dfs(int p, std::uint64_t assigned) {
    if (p == n_) {
      if (have_best_) {
        // second labeling achieving the best string: an automorphism
        for (int q = 0; q < n_; ++q)
          orbits_.unite(pos_vertex_[static_cast<size_t>(q)],
                        best_pos_vertex_[static_cast<size_t>(q)]);
      } else {
        best_pos_vertex_ = pos_vertex_;
        have_best_ = true;
      }
      return;
    }
    const int cls = class_of_pos_[static_cast<size_t>(p)];
    struct Cand {
      std::uint64_t col;
      int v;
    };
    Cand cands[kMaxVertices];
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[static_cast<size_t>(v)] != cls || ((assigned >> v) & 1u)) continue;
      std::uint64_t col = 0;
      std::uint64_t nb = g_.neighbor_mask(v);
      for (int q = 0; q < p; ++q)
        col = (col << 1) | ((nb >> pos_vertex_[static_cast<size_t>(q)]) & 1u);
      cands[count++] = {col, v};
    }
    std::sort(cands, cands + count, [](const Cand& a, const Cand& b) {
      return a.col != b.col ? a.col < b.col : a.v < b.v;
    });
    for (int i = 0; i < count; ++i) {
      if (p < best_len_) {
        if (cands[i].col > best_cols_[static_cast<size_t>(p)]) break;  // sorted: rest worse too
        if (cands[i].col < best_cols_[static_cast<size_t>(p)]) {
          // strictly better prefix: truncate the old best, extend from here
          best_cols_[static_cast<size_t>(p)] = cands[i].col;
          best_len_ = p + 1;
          have_best_ = false;
        }
      } else {
        best_cols_[static_cast<size_t>(p)] = cands[i].col;
        best_len_ = p + 1;
        have_best_ = false;
      }
      pos_vertex_[static_cast<size_t>(p)] = cands[i].v;
      dfs(p + 1, assigned | (std::uint64_t{1} << cands[i].v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> class_of_pos_;
  std::vector<int> pos_vertex_;
  std::vector<std::uint64_t> best_cols_;  // valid through best_len_ positions
  std::vector<int> best_pos_vertex_;
  int best_len_ = 0;
  bool have_best_ = false;
  UnionFind orbits_;
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
  if (g.order() == 1) return {Graph(1), {0}, {0}};
  return CanonSearch(g).run();
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonicalize(g).graph); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gndb
