#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gndb {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 vertices. Each neighbor set is one
// machine word, so set operations (BFS frontiers, subset tests) are single
// bitwise instructions. No self-loops; adjacency is kept symmetric.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(check_order(n)), 0) {}

  int order() const noexcept { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }

  std::uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<size_t>(v)]);
  }

  int edge_count() const noexcept {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
  }

  // Edge list with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t rest = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
      while (rest) {
        int v = std::countr_zero(rest);
        out.emplace_back(u, v);
        rest &= rest - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxVertices)
      throw std::out_of_range("vertex count must be in [1, 64], got " + std::to_string(n));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n_) + ")");
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace gndb
