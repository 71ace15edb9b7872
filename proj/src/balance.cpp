#include "gndb/balance.hpp"

#include <stdexcept>
#include <string>

namespace gndb {

EdgeBalance edge_partition(const Graph& g, const DistanceMatrix& dm, int a, int b) {
  if (!g.has_edge(a, b))
    throw std::invalid_argument("edge_partition: (" + std::to_string(a) + "," +
                                std::to_string(b) + ") is not an edge");
  EdgeBalance eb;
  eb.a = a;
  eb.b = b;
  for (int x = 0; x < g.order(); ++x) {
    int i = dm(x, a), j = dm(x, b);
    if (i == kUnreachable || j == kUnreachable)
      throw std::invalid_argument("edge_partition: graph is disconnected");
    if (i < j)
      ++eb.w_ab;
    else if (j < i)
      ++eb.w_ba;
    else
      ++eb.eq_count;
    ++eb.d_table[{i, j}];
  }
  return eb;
}

bool check_sum_identity(const EdgeBalance& eb, int k) {
  long long toward_a = 0, toward_b = 0;  // sums over i >= 1 only
  for (const auto& [ij, count] : eb.d_table) {
    auto [i, j] = ij;
    if (i >= 1 && j == i + 1) toward_a += count;
    if (j >= 1 && i == j + 1) toward_b += count;
  }
  long long big = std::max(toward_a, toward_b);
  long long small = std::min(toward_a, toward_b);
  return big == static_cast<long long>(k) * small + (k - 1);
}

bool is_consistent_edge(const EdgeBalance& eb, int k) {
  int big = std::max(eb.w_ab, eb.w_ba);
  int small = std::min(eb.w_ab, eb.w_ba);
  return big == k * small;
}

BalanceClass classify(const Graph& g, const std::set<int>& ks) {
  BalanceClass out;
  out.n = g.order();
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("classify: k must be positive");
    out.kgdb[k] = false;
    out.kgndb[k] = std::nullopt;
  }
  if (g.order() == 1) return out;  // no edges: none-of-the-above by decree
  if (!is_connected(g)) throw std::invalid_argument("classify: graph is disconnected");

  DistanceMatrix dm = all_pairs_distances(g);
  for (auto [a, b] : g.edges()) out.per_edge.push_back(edge_partition(g, dm, a, b));

  auto verdict_for = [&](int k) -> std::pair<bool, std::optional<int>> {
    bool gdb = true;
    std::optional<int> gamma;
    bool same_gamma = true;
    for (const EdgeBalance& eb : out.per_edge) {
      if (!is_consistent_edge(eb, k)) {
        gdb = false;
        break;
      }
      int small = std::min(eb.w_ab, eb.w_ba);
      if (!gamma)
        gamma = small;
      else if (*gamma != small)
        same_gamma = false;
    }
    if (!gdb) return {false, std::nullopt};
    return {true, same_gamma ? gamma : std::nullopt};
  };

  auto [db, ndb] = verdict_for(1);
  out.is_db = db;
  out.ndb_gamma = ndb;
  for (int k : ks) {
    if (k == 1) {
      out.kgdb[1] = db;
      out.kgndb[1] = ndb;
    } else {
      auto [gdb, gamma] = verdict_for(k);
      out.kgdb[k] = gdb;
      out.kgndb[k] = gamma;
    }
  }
  return out;
}

bool degree_ratio_holds(const Graph& g, int k) {
  if (!is_connected(g))
    throw std::invalid_argument("predicate inapplicable: graph is disconnected");
  if (diameter(g) != 2) throw std::invalid_argument("predicate inapplicable: diameter is not 2");
  BalanceClass cls = classify(g, {k});
  if (!cls.kgndb.at(k))
    throw std::invalid_argument("predicate inapplicable: graph is not " + std::to_string(k) +
                                "-GNDB");
  for (const EdgeBalance& eb : cls.per_edge) {
    int da = g.degree(eb.a), db = g.degree(eb.b);
    if (std::max(da, db) != k * std::min(da, db)) return false;
    // larger degree must sit on the larger-W side
    if ((da > db && eb.w_ab < eb.w_ba) || (db > da && eb.w_ba < eb.w_ab)) return false;
  }
  return true;
}

bool order_equals_expected(const Graph& g, int k, int gamma) {
  if (!is_bipartite(g))
    throw std::invalid_argument("predicate inapplicable: graph is not bipartite");
  BalanceClass cls = classify(g, {k});
  if (!cls.kgndb.at(k) || *cls.kgndb.at(k) != gamma)
    throw std::invalid_argument("predicate inapplicable: graph is not " + std::to_string(k) +
                                "-GNDB with gamma " + std::to_string(gamma));
  return g.order() == (k + 1) * gamma;
}

}  // namespace gndb
