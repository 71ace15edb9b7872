#include "gndb/distance.hpp"

#include <bit>
#include <stdexcept>

namespace gndb {

namespace {

// BFS over the induced subgraph on `allowed`, returning the visited mask.
std::uint64_t bfs_reach(const Graph& g, int src, std::uint64_t allowed) {
  std::uint64_t visited = std::uint64_t{1} << src;
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbor_mask(v);
    }
    frontier = next & allowed & ~visited;
    visited |= frontier;
  }
  return visited;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.order())
    throw std::out_of_range("bfs source " + std::to_string(src) + " out of range");
  std::vector<int> dist(static_cast<size_t>(g.order()), kUnreachable);
  std::uint64_t visited = std::uint64_t{1} << src;
  std::uint64_t frontier = visited;
  int d = 0;
  while (frontier) {
    std::uint64_t f = frontier;
    std::uint64_t next = 0;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      dist[static_cast<size_t>(v)] = d;
      next |= g.neighbor_mask(v);
    }
    frontier = next & ~visited;
    visited |= frontier;
    ++d;
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  for (int src = 0; src < n; ++src) {
    std::vector<int> row = bfs_distances(g, src);
    for (int v = 0; v < n; ++v) dm(src, v) = row[static_cast<size_t>(v)];
  }
  return dm;
}

bool is_connected(const Graph& g) {
  return bfs_reach(g, 0, full_mask(g.order())) == full_mask(g.order());
}

bool connected_without(const Graph& g, int removed) {
  const int n = g.order();
  if (removed < 0 || removed >= n)
    throw std::out_of_range("removed vertex out of range");
  if (n == 1) return true;
  int src = removed == 0 ? 1 : 0;
  std::uint64_t allowed = full_mask(n) & ~(std::uint64_t{1} << removed);
  return bfs_reach(g, src, allowed) == allowed;
}

int diameter(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (int src = 0; src < n; ++src) {
    std::vector<int> row = bfs_distances(g, src);
    for (int v = 0; v < n; ++v) {
      if (row[static_cast<size_t>(v)] == kUnreachable)
        throw std::invalid_argument("diameter undefined: graph is disconnected");
      if (row[static_cast<size_t>(v)] > best) best = row[static_cast<size_t>(v)];
    }
  }
  return best;
}

std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(u)] == -1) {
          color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
          stack.push_back(u);
        } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace gndb
