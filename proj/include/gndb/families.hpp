#pragma once

#include <string_view>

#include "gndb/graph.hpp"

namespace gndb {

// Named graph constructors with fixed vertex numbering, so golden graph6
// fixtures stay stable across releases.

// K_n on vertices 0..n-1.
Graph complete(int n);

// K_{m,n}: part {0..m-1}, part {m..m+n-1}, all cross edges.
Graph complete_bipartite(int m, int n);

// C_n on 0..n-1 in cyclic order, n >= 3.
Graph cycle(int n);

// P_n: 0-1-...-(n-1).
Graph path(int n);

// Star with `leaves` leaves = complete_bipartite(1, leaves); center is 0.
Graph star(int leaves);

// CLI family syntax: complete:N, bipartite:M,N, cycle:N, path:N, star:N.
Graph make_family(std::string_view spec);

}  // namespace gndb
