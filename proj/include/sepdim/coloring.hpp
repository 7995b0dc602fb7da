#pragma once

#include "sepdim/graph.hpp"

namespace sepdim {

// Proper edge coloring with at most max_degree + 1 colors (Misra-Gries
// constructive form of Vizing's theorem). Deterministic.
EdgeColoring edge_coloring(const Graph& g);

// True iff no two edges sharing a vertex have equal colors and all colors
// are in range.
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);

// Greedy coloring in vertex-id order such that vertices within graph
// distance 2 land in different parts; uses at most max_degree^2 + 1 parts.
Partition distance_two_coloring(const Graph& g);

// True iff every two vertices in a common part are at distance >= 3.
bool is_distance_two_proper(const Graph& g, const Partition& p);

}  // namespace sepdim
