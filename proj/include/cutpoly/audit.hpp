#pragma once

#include <optional>
#include <vector>

#include "cutpoly/edgevector.hpp"
#include "cutpoly/graph.hpp"
#include "cutpoly/lattice.hpp"

namespace cutpoly {

/// Gaps found in dilations up to k_max, with per-level lattice point
/// totals. Every listed gap lies in its dilation and is not a sum of
/// level-many cut vectors; output is deterministic (level, then lex).
struct GapReport {
    int k_max = 0;
    std::vector<DilatedPoint> gaps;
    std::vector<long long> lattice_point_counts; // index k-1 holds the count for kP
};

/// Bounded normality verdict: enumeration can refute normality outright
/// but only certify it up to k_max.
struct NormalityVerdict {
    int k_max = 0;
    std::optional<DilatedPoint> gap;
    bool normal_up_to_bound() const { return !gap.has_value(); }
};

/// A violation witness is a gap x such that neither 2x nor 3x is a gap;
/// its existence certifies that the polytope is not seminormal.
struct SeminormalityVerdict {
    int k_max = 0;
    std::optional<DilatedPoint> violation;
    bool consistent_up_to_bound() const { return !violation.has_value(); }
};

/// Minimal generating set of the monoid cone(generators) ∩ L.
struct HilbertBasisReport {
    std::vector<EdgeVector> basis;     // lex sorted
    bool is_subset_of_cuts = true;     // basis contained in the generator set
    std::vector<EdgeVector> offending; // basis elements outside the generators
};

struct VeryAmpleVerdict {
    bool very_ample = false;
    HilbertBasisReport report;
};

/// All x in [0,k]^m with even sum on every cycle and x/k in the cut
/// polytope. DFS over coordinates with incremental parity pruning;
/// lexicographically sorted, deterministic for any worker count.
std::vector<EdgeVector> enumerate_lattice_points(const Multigraph& g,
                                                 const LatticeDescription& ld, int k,
                                                 const Limits& limits = {});

/// k cuts (repetition and the empty cut allowed) whose vectors sum to x,
/// or nullopt. Exhaustive DFS over canonically ordered cut sequences with
/// box and parity pruning on the residual.
std::optional<std::vector<Cut>> is_sum_of_k_cuts(const Multigraph& g,
                                                 const EdgeVector& x, int k,
                                                 const Limits& limits = {});

GapReport find_gaps(const Multigraph& g, int k_max, const Limits& limits = {});

NormalityVerdict check_normal(const Multigraph& g, int k_max, const Limits& limits = {});

/// Scans gaps x at levels k with 3k <= k_max; 2x and 3x are tested for
/// gapness pointwise (their dilations need no full enumeration).
SeminormalityVerdict check_seminormal(const Multigraph& g, int k_max,
                                      const Limits& limits = {});

/// Hilbert basis of cone(generators) relative to the lattice described by
/// ld, via a lexicographic placing triangulation and parallelepiped point
/// enumeration per simplicial cone. Generators must be lattice members
/// spanning the lattice; the cone must be pointed.
HilbertBasisReport hilbert_basis(const std::vector<EdgeVector>& generators,
                                 const LatticeDescription& ld,
                                 const Limits& limits = {});

/// Very ampleness via the single-vertex reduction: transitivity first
/// (failure is an internal error), then the Hilbert basis of the cone over
/// the cut vectors at the all-zero vertex.
VeryAmpleVerdict check_very_ample(const Multigraph& g, const Limits& limits = {});

} // namespace cutpoly
