#pragma once

#include <string>
#include <vector>

#include "gndb/graph.hpp"

namespace gndb {

// Output of the canonical-labeling search. `labeling` maps input vertex ids
// to canonical positions; `orbit` assigns each vertex the smallest member of
// its automorphism orbit (two vertices are similar iff their orbit ids match).
struct CanonicalResult {
  Graph graph;
  std::vector<int> labeling;
  std::vector<int> orbit;
};

// Exact canonical form for small graphs: refine vertices into classes by
// iterated neighbor-color signatures, then search all class-respecting
// labelings for the lexicographically smallest upper-triangle bit string
// (the same bit order graph6 uses, so the canonical graph6 string is the
// minimum over all relabelings). The search visits every labeling that ties
// the minimum, which yields the full automorphism orbit partition as a side
// effect. Intended for n <= 10 or so; cost grows with the symmetry of the
// input, not just its size.
CanonicalResult canonicalize(const Graph& g);

// graph6 encoding of the canonically relabeled graph. Equal strings iff
// isomorphic inputs.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gndb
