#pragma once

#include <optional>
#include <vector>

#include "gndb/graph.hpp"

namespace gndb {

// Sentinel for "no path". Kept negative so accidental arithmetic on it is
// loudly wrong rather than silently large.
inline constexpr int kUnreachable = -1;

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<size_t>(n) * static_cast<size_t>(n), kUnreachable) {}

  int order() const noexcept { return n_; }

  int operator()(int u, int v) const {
    return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
  }
  int& operator()(int u, int v) {
    return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
  }

 private:
  int n_;
  std::vector<int> d_;
};

// Hop distances from src to every vertex; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, int src);

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Connectivity of g with one vertex deleted (used by the enumerator's
// canonical-parent test). For order-1 inputs the empty graph counts as
// connected.
bool connected_without(const Graph& g, int removed);

// Max pairwise distance. Throws on disconnected input.
int diameter(const Graph& g);

// 0/1 color per vertex when a proper 2-coloring exists, nullopt otherwise.
// Components are colored independently.
std::optional<std::vector<int>> bipartite_coloring(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartite_coloring(g).has_value(); }

}  // namespace gndb
