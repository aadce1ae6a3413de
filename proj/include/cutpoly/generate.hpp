#pragma once

#include <string>
#include <vector>

#include "cutpoly/graph.hpp"

namespace cutpoly {

/// Canonical form of a simple graph: the lexicographically smallest
/// upper-triangular adjacency bit string over all vertex permutations.
/// Brute force; intended for desk-scale isomorphism filtering.
std::string canonical_form(const Multigraph& g);

/// Simple graph from an upper-triangular adjacency bit string with edges
/// in pair order (0,1),(0,2),...,(1,2),...
Multigraph graph_from_bits(int n, const std::string& bits);

/// One representative per isomorphism class of simple graphs on exactly n
/// vertices, built from canonical forms, sorted by canonical string.
/// Bounded to small n.
std::vector<Multigraph> graph_classes(int n, bool connected_only);

std::vector<Multigraph> connected_graph_classes(int n);

} // namespace cutpoly
