#pragma once

#include <optional>
#include <vector>

#include "cutpoly/edgevector.hpp"
#include "cutpoly/graph.hpp"

namespace cutpoly {

using Matrix = std::vector<std::vector<Int>>;

/// Canonical row-style Hermite normal form: echelon rows, positive pivots,
/// entries above each pivot reduced into [0, pivot). Zero rows are dropped,
/// so the result is a basis of the row lattice.
Matrix hnf(Matrix rows);

/// Integer coordinates of x in an HNF basis, or nullopt if x is outside
/// the row lattice.
std::optional<std::vector<Int>> hnf_solve(const Matrix& basis, const std::vector<Int>& x);

/// The lattice spanned by the cut vectors, in two interchangeable forms:
/// constraints and an HNF basis. The constraint form is one parity
/// condition per fundamental cycle (sum over the cycle is even) plus one
/// equality per parallel edge (cut vectors cannot tell parallel edges
/// apart, and even sums on their 2-cycles are weaker than equality).
struct LatticeDescription {
    int edge_count = 0;
    std::vector<std::vector<int>> parity_constraints;
    std::vector<std::pair<int, int>> parallel_pairs; // (edge, class representative)
    Matrix hnf_basis;
};

LatticeDescription lattice_description(const Multigraph& g, const Limits& limits = {});

/// Parity-rule membership; linear time per query.
bool in_cut_lattice(const LatticeDescription& ld, const EdgeVector& x);

/// HNF-solvability membership. Test-time oracle for in_cut_lattice.
bool in_cut_lattice_hnf(const LatticeDescription& ld, const EdgeVector& x);

/// Membership of p.vector in the dilation (p.level)*Cut(g): lattice parity
/// plus exact convex membership of p.vector / p.level in the cut polytope.
bool in_dilation(const Multigraph& g, const LatticeDescription& ld,
                 const DilatedPoint& p, const Limits& limits = {});

} // namespace cutpoly
