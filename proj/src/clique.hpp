#pragma once

#include "hypergraph.hpp"

namespace laglab {

// Exact clique number of a 2-graph by branch and bound with a greedy
// coloring bound. Throws for r != 2 or n > cap (cap <= 64, bitset-bound).
int clique_number(const Hypergraph& g, int cap = 64);

}  // namespace laglab
