#pragma once

#include <vector>

#include "cutpoly/edgevector.hpp"

namespace cutpoly {

/// Exact feasibility of: lambda >= 0, sum lambda = 1, sum lambda_i gen_i =
/// target. Phase-I simplex over rationals with Bland's least-index rule;
/// no floating point anywhere.
bool lp_member_convex(const std::vector<EdgeVector>& generators,
                      const std::vector<Rat>& target);

/// Exact feasibility of: lambda >= 0, sum lambda_i gen_i = target
/// (conic membership, no convexity row).
bool lp_member_cone(const std::vector<EdgeVector>& generators,
                    const std::vector<Rat>& target);

/// x / denom as a rational vector.
std::vector<Rat> scaled(const EdgeVector& x, const Int& denom);

} // namespace cutpoly
