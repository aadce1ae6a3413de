#include "cutpoly/switching.hpp"

#include <algorithm>
#include <set>

namespace cutpoly {

SwitchMap make_switch(const Multigraph& g, const Cut& base) {
    if (base.n() != g.vertex_count())
        throw InvalidInputError("switch base cut does not match graph");
    return SwitchMap{base, crossing_edges(g, base)};
}

Cut switch_cut(const SwitchMap& s, const Cut& c) {
    if (c.n() != s.base_cut.n())
        throw InvalidInputError("switch_cut: vertex count mismatch");
    std::vector<bool> in_a(static_cast<std::size_t>(c.n()));
    for (int v = 0; v < c.n(); ++v)
        in_a[static_cast<std::size_t>(v)] = s.base_cut.in_side_a(v) != c.in_side_a(v);
    return Cut::from_membership(std::move(in_a));
}

Cut switch_cut_by_formula(const SwitchMap& s, const Cut& c) {
    if (c.n() != s.base_cut.n())
        throw InvalidInputError("switch_cut_by_formula: vertex count mismatch");
    // side A of the base is A, side of vertex 0 is B; likewise C|D.
    std::vector<int> side;
    for (int v = 0; v < c.n(); ++v) {
        bool in_A = s.base_cut.in_side_a(v);
        bool in_C = c.in_side_a(v);
        bool in_D = !in_C;
        if ((in_A && in_D) || (!in_A && in_C)) side.push_back(v);
    }
    return Cut::from_side(c.n(), side);
}

DilatedPoint switch_point(const SwitchMap& s, const DilatedPoint& p) {
    DilatedPoint q = p;
    for (int e : s.crossing_set) {
        if (static_cast<std::size_t>(e) >= q.vector.size())
            throw InvalidInputError("switch_point: vector shorter than crossing set");
        q.vector[static_cast<std::size_t>(e)] = Int(p.level) - q.vector[static_cast<std::size_t>(e)];
    }
    return q;
}

bool verify_transitivity(const Multigraph& g, const Limits& limits) {
    const auto cuts = enumerate_cuts(g, limits);
    for (const Cut& base : cuts) {
        SwitchMap s = make_switch(g, base);
        if (!(switch_cut(s, Cut::empty(g.vertex_count())) == base)) return false;
        std::set<Cut> images;
        for (const Cut& c : cuts) images.insert(switch_cut(s, c));
        if (images.size() != cuts.size()) return false;
    }
    return true;
}

} // namespace cutpoly
