#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gndb/distance.hpp"
#include "gndb/graph.hpp"

namespace gndb {

// Distance partition of one edge ab: W_ab = vertices strictly closer to a
// (a itself included), W_ba likewise, eq_count the equidistant rest, and the
// counts |D^i_j| of vertices at distance i from a and j from b. Only pairs
// with |i-j| <= 1 occur for adjacent endpoints.
struct EdgeBalance {
  int a = -1, b = -1;
  int w_ab = 0, w_ba = 0, eq_count = 0;
  std::map<std::pair<int, int>, int> d_table;
};

// Whole-graph verdict. kgdb/kgndb hold the per-k results for exactly the
// requested k values; the k=1 case is always computed and mirrored into
// is_db / ndb_gamma.
struct BalanceClass {
  int n = 0;
  bool is_db = false;
  std::optional<int> ndb_gamma;
  std::map<int, bool> kgdb;
  std::map<int, std::optional<int>> kgndb;
  std::vector<EdgeBalance> per_edge;
};

// Exact W/D partition of edge ab. dm must be all_pairs_distances(g).
// Throws if ab is not an edge or g is disconnected.
EdgeBalance edge_partition(const Graph& g, const DistanceMatrix& dm, int a, int b);

// The level-sum identity: with the larger side in the role of W_ab,
// sum_{i>=1} |D^i_{i+1}| = k * sum_{i>=1} |D^{i+1}_i| + (k-1). Computed from
// the D table, independently of the stored W sizes; for k=3 this is the
// paper's displayed identity per edge.
bool check_sum_identity(const EdgeBalance& eb, int k);

// max(|W_ab|, |W_ba|) = k * min(|W_ab|, |W_ba|); orientation-free.
bool is_consistent_edge(const EdgeBalance& eb, int k);

// Classify g for every k in ks: k-GDB iff every edge is consistent, k-GNDB
// with gamma iff additionally min(w_ab, w_ba) is one constant across edges.
// A single-vertex graph has no edges and classifies as none-of-the-above.
// Throws on disconnected input.
BalanceClass classify(const Graph& g, const std::set<int>& ks);

// For a connected diameter-2 k-GNDB graph: every edge has its degrees in an
// exact k ratio, larger-degree endpoint on the larger-W side. Throws
// "predicate inapplicable" if the preconditions fail.
bool degree_ratio_holds(const Graph& g, int k);

constexpr bool diameter_bound_holds(int d, int k, int gamma) noexcept {
  return d <= k * gamma;
}

// For a bipartite k-GNDB graph with the given gamma: order must be (k+1)*gamma.
// Throws if g is not bipartite k-GNDB with that gamma.
bool order_equals_expected(const Graph& g, int k, int gamma);

}  // namespace gndb
