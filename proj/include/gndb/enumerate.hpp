#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gndb/balance.hpp"
#include "gndb/graph.hpp"

namespace gndb {

// One k-GNDB hit found by a scan, keyed by canonical graph6.
struct MatchEntry {
  std::string graph6;
  int n = 0;
  int k = 0;
  int gamma = 0;
  int diameter = 0;
  bool bipartite = false;
  bool db = false;
  std::optional<int> ndb_gamma;
};

// Counterexample certificate. `predicate` names a registered check and `k`
// its parameter, so the certificate can be replayed from the graph6 string
// alone. Edge-level predicates carry the offending edge; -1/-1 otherwise.
struct Violation {
  std::string graph6;
  std::string predicate;
  int k = 0;
  int edge_a = -1, edge_b = -1;
  std::string detail;
};

struct ScanReport {
  int n_min = 1;
  int n_max = 0;
  std::vector<int> ks;
  std::optional<int> gamma_filter;
  bool paranoid = false;
  std::string source = "generated";
  std::vector<long long> corpus_size;            // index n-1, per order
  std::vector<MatchEntry> matches;               // sorted by (n, graph6, k)
  std::vector<Violation> violations;             // sorted by (graph6, predicate, k)
  std::vector<std::string> k1_ndb_nonbipartite;  // NDB graphs need not be bipartite
  std::vector<double> elapsed_seconds;           // per order; human output only
};

// --- enumeration ---------------------------------------------------------

// All isomorphism classes of connected simple graphs on n vertices, one
// canonically labeled representative each, deterministic order. 1 <= n <= 9.
std::vector<Graph> connected_graphs(int n);

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& sink);

// One augmentation level: children on (k+1) vertices produced from the given
// shard of parents on k vertices. Different shards of the same parent list
// produce disjoint child classes (canonical-parent construction), so merging
// is concatenation. Exposed for the sharding tests.
std::vector<Graph> augment_shard(const std::vector<Graph>& parents, int shard, int shard_count);

// --- scanning ------------------------------------------------------------

struct ScanOptions {
  int n_max = 8;
  std::set<int> ks = {1, 2, 3};
  std::optional<int> gamma_filter;
  bool paranoid = false;  // disable necessary-condition prefilters
  int jobs = 1;
  // newline-separated graph6 corpus text; bypasses generation when set
  std::optional<std::string> corpus_text;
};

// Classify every corpus graph for each requested k; collect k-GNDB matches
// (restricted by gamma_filter if set) and all theorem-predicate violations.
ScanReport scan(const ScanOptions& opts);

// Full predicate suite over the generated corpus: bipartiteness, order,
// diameter bound, degree ratio and complete-bipartite shape for every k-GNDB
// hit, k in {1,2,3}, with the k=1 bipartiteness carve-out recorded separately.
// Always paranoid. inject_fault wires in a deliberately inverted predicate so
// CI can confirm the harness actually fails on violations.
ScanReport verify_theorems(int n_max, int jobs = 1, bool inject_fault = false);

// Re-run a certificate's named predicate on its decoded graph6 string.
// True iff the violation reproduces.
bool replay_violation(const Violation& v);

}  // namespace gndb
