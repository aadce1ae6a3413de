#pragma once

#include <vector>

#include "cutpoly/edgevector.hpp"
#include "cutpoly/graph.hpp"

namespace cutpoly {

struct DecomposeOptions {
    Limits limits;
    /// Cross-check in the value-{1,2} case that the 1-valued edge set maps
    /// to an even subgraph of the dual. Needs a planar connected component;
    /// the direct 2-coloring recovery stays authoritative either way.
    bool check_dual_parity = false;
};

/// Three cuts whose vectors sum to p, for p a lattice point of the third
/// dilation of the cut polytope of a planar loopless multigraph. Recursion:
/// contract 0-valued edges, switch 3-valued edges away, and resolve the
/// all-{1,2} residue through a cut recovery plus a 4-coloring. Membership
/// is verified before decomposition.
std::vector<Cut> decompose3_planar(const Multigraph& g, const EdgeVector& p,
                                   const DecomposeOptions& opts = {});

/// Two cuts summing to p for p in the second dilation: same reduction,
/// then the all-ones residue must be the crossing set of a bipartition,
/// paired with the empty cut.
std::vector<Cut> decompose2_planar(const Multigraph& g, const EdgeVector& p,
                                   const DecomposeOptions& opts = {});

/// The unique cut whose vector is p, for p in the polytope itself.
Cut decompose1(const Multigraph& g, const EdgeVector& p,
               const DecomposeOptions& opts = {});

/// The three cuts splitting the four color classes into pairs; their
/// vectors sum to the all-2 vector on a loopless graph.
std::vector<Cut> balanced_three_cuts(const Multigraph& g, const Coloring4& coloring);

/// Recover a proper 4-coloring from any three cuts whose vectors sum to
/// the all-2 vector: the color of v is the pair of sides it takes in the
/// first two cuts.
Coloring4 four_coloring_from_decomposition(const Multigraph& g,
                                           const std::vector<Cut>& cuts);

} // namespace cutpoly
