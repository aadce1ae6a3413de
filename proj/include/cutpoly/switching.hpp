#pragma once

#include <vector>

#include "cutpoly/edgevector.hpp"
#include "cutpoly/graph.hpp"

namespace cutpoly {

/// The switching isomorphism attached to a base cut A|B: it fixes
/// coordinates on edges within A or B and maps x_e to k - x_e on edges
/// separated by A|B. It maps the cut polytope onto itself and sends the
/// all-zero vertex to the base cut's vertex.
struct SwitchMap {
    Cut base_cut;
    std::vector<int> crossing_set; // support of cut_vector(base_cut), ascending
};

SwitchMap make_switch(const Multigraph& g, const Cut& base);

/// Image of a cut: the symmetric difference of side sets, canonicalized.
Cut switch_cut(const SwitchMap& s, const Cut& c);

/// The same image computed by the four-intersection set formula
/// (A∩D)∪(B∩C) against (A∩C)∪(B∩D).
/// Kept as an independent route; divergence from switch_cut flags bugs.
Cut switch_cut_by_formula(const SwitchMap& s, const Cut& c);

/// Image of a dilated point: entries on the crossing set become
/// level - entry, others are unchanged; the level is preserved.
DilatedPoint switch_point(const SwitchMap& s, const DilatedPoint& p);

/// True iff for every cut A|B the induced map permutes the full cut set
/// and sends the empty cut to A|B. Exhaustive over all cut pairs.
bool verify_transitivity(const Multigraph& g, const Limits& limits = {});

} // namespace cutpoly
