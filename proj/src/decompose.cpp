#include "cutpoly/decompose.hpp"

#include <algorithm>

#include "cutpoly/lattice.hpp"
#include "cutpoly/planar.hpp"
#include "cutpoly/switching.hpp"

namespace cutpoly {

namespace {

std::vector<int> edges_with_value(const EdgeVector& p, int value) {
    std::vector<int> ids;
    for (std::size_t e = 0; e < p.size(); ++e)
        if (p[e] == value) ids.push_back(static_cast<int>(e));
    return ids;
}

void assert_sums_to(const Multigraph& g, const std::vector<Cut>& cuts,
                    const EdgeVector& p) {
    EdgeVector sum(static_cast<std::size_t>(g.edge_count()));
    for (const Cut& c : cuts) sum += cut_vector(g, c);
    if (!(sum == p))
        throw InternalError("decomposition does not sum to the input point");
}

// Recursion of the constructive proof, for k = 2 or 3. The measure
// (edge count, number of k-valued entries) strictly decreases: contraction
// removes edges, and a switch zeroes the chosen k-valued edge without
// creating new ones (no entry is 0 when the switch step runs).
std::vector<Cut> decompose_rec(const Multigraph& g, const EdgeVector& p, int k,
                               const DecomposeOptions& opts,
                               std::pair<long long, long long> measure) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    {
        long long threes = static_cast<long long>(edges_with_value(p, k).size());
        std::pair<long long, long long> now{m, threes};
        if (!(now < measure))
            throw InternalError("decomposition recursion measure failed to decrease");
        measure = now;
    }

    std::vector<int> zero_edges = edges_with_value(p, 0);
    if (!zero_edges.empty()) {
        ContractionResult cr = contract_edges(g, zero_edges);
        if (!cr.loops_created.empty())
            throw InternalError(
                "contraction of 0-valued edges produced a loop; the point is "
                "outside the dilated polytope");
        EdgeVector restricted(static_cast<std::size_t>(cr.contracted.edge_count()));
        for (int e = 0; e < m; ++e)
            if (cr.edge_map[static_cast<std::size_t>(e)] >= 0)
                restricted[static_cast<std::size_t>(cr.edge_map[static_cast<std::size_t>(e)])] =
                    p[static_cast<std::size_t>(e)];
        auto cuts = decompose_rec(cr.contracted, restricted, k, opts, measure);
        for (Cut& c : cuts) c = lift_cut(c, cr.vertex_map);
        return cuts;
    }

    std::vector<int> full_edges = edges_with_value(p, k);
    if (!full_edges.empty()) {
        const Edge& e = g.edge(full_edges.front());
        int pivot = std::min(e.u, e.v);
        SwitchMap s = make_switch(g, Cut::from_side(n, {pivot}));
        DilatedPoint switched = switch_point(s, DilatedPoint{p, k});
        auto cuts = decompose_rec(g, switched.vector, k, opts, measure);
        for (Cut& c : cuts) c = switch_cut(s, c);
        return cuts;
    }

    // all entries in {1, .., k-1}
    std::vector<int> ones = edges_with_value(p, 1);

    if (opts.check_dual_parity && m > 0 && component_count(g) == 1) {
        if (auto emb = is_planar(g)) {
            DualMap dm = dual_graph(g, *emb);
            std::vector<int> dual_ones;
            for (int e2 : ones) dual_ones.push_back(dm.edge_bijection[static_cast<std::size_t>(e2)]);
            if (!is_even_subgraph(dm.dual, dual_ones))
                throw InternalError("1-valued edges are not an even subgraph of the dual");
        }
    }

    if (k == 2) {
        // the residue is all-ones: its crossing set is every edge, so the
        // graph is bipartite and the empty cut completes the pair
        auto bip = is_bipartite(g);
        if (!bip)
            throw InternalError(
                "all-ones residue on a non-bipartite graph; the point is outside "
                "the dilated polytope");
        return {*bip, Cut::empty(n)};
    }

    auto base = recover_cut_from_edgeset(g, ones);
    if (!base)
        throw InternalError(
            "1-valued edges do not form a cut; the point is outside the lattice");
    SwitchMap s = make_switch(g, *base);
    std::vector<Cut> cuts = balanced_three_cuts(g, four_color(g));
    for (Cut& c : cuts) c = switch_cut(s, c);
    return cuts;
}

std::vector<Cut> decompose_checked(const Multigraph& g, const EdgeVector& p, int k,
                                   const DecomposeOptions& opts) {
    if (g.has_loops()) throw InvalidInputError("decomposition requires a loopless graph");
    if (p.size() != static_cast<std::size_t>(g.edge_count()))
        throw InvalidInputError("point length does not match edge count");
    if (k >= 2 && !is_planar(g))
        throw InvalidInputError("decomposition requires a planar graph");

    LatticeDescription ld = lattice_description(g, opts.limits);
    if (!in_cut_lattice(ld, p))
        throw InvalidInputError("point is not in the cut lattice");
    if (!in_dilation(g, ld, DilatedPoint{p, k}, opts.limits))
        throw InvalidInputError("point is not in the dilated cut polytope");

    // Decompose per connected component and recombine index-wise; cuts of a
    // disconnected graph restrict independently to components.
    auto comps = connected_components(g);
    std::vector<std::vector<bool>> sides(static_cast<std::size_t>(k),
                                         std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false));
    for (const auto& comp : comps) {
        std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t i = 0; i < comp.size(); ++i) local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> sub_edges;
        std::vector<int> sub_edge_ids;
        for (const Edge& e : g.edges())
            if (local[static_cast<std::size_t>(e.u)] >= 0 && local[static_cast<std::size_t>(e.v)] >= 0) {
                sub_edges.emplace_back(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
                sub_edge_ids.push_back(e.id);
            }
        Multigraph sub(static_cast<int>(comp.size()), sub_edges);
        EdgeVector sub_p(sub_edges.size());
        for (std::size_t e = 0; e < sub_edge_ids.size(); ++e)
            sub_p[e] = p[static_cast<std::size_t>(sub_edge_ids[e])];

        auto sub_cuts = decompose_rec(sub, sub_p, k, opts,
                                      {static_cast<long long>(sub.edge_count()) + 1, 0});
        for (int i = 0; i < k; ++i)
            for (std::size_t v = 0; v < comp.size(); ++v)
                if (sub_cuts[static_cast<std::size_t>(i)].in_side_a(static_cast<int>(v)))
                    sides[static_cast<std::size_t>(i)][static_cast<std::size_t>(comp[v])] = true;
    }

    std::vector<Cut> cuts;
    for (int i = 0; i < k; ++i) cuts.push_back(Cut::from_membership(sides[static_cast<std::size_t>(i)]));
    assert_sums_to(g, cuts, p);
    return cuts;
}

} // namespace

std::vector<Cut> decompose3_planar(const Multigraph& g, const EdgeVector& p,
                                   const DecomposeOptions& opts) {
    return decompose_checked(g, p, 3, opts);
}

std::vector<Cut> decompose2_planar(const Multigraph& g, const EdgeVector& p,
                                   const DecomposeOptions& opts) {
    return decompose_checked(g, p, 2, opts);
}

Cut decompose1(const Multigraph& g, const EdgeVector& p, const DecomposeOptions& opts) {
    if (g.has_loops()) throw InvalidInputError("decomposition requires a loopless graph");
    if (p.size() != static_cast<std::size_t>(g.edge_count()))
        throw InvalidInputError("point length does not match edge count");
    LatticeDescription ld = lattice_description(g, opts.limits);
    if (!in_cut_lattice(ld, p) || !in_dilation(g, ld, DilatedPoint{p, 1}, opts.limits))
        throw InvalidInputError("point is not in the cut polytope");
    auto c = recover_cut_from_edgeset(g, p.support());
    if (!c || !(cut_vector(g, *c) == p))
        throw InternalError("polytope member at level 1 is not a cut vector");
    return *c;
}

std::vector<Cut> balanced_three_cuts(const Multigraph& g, const Coloring4& coloring) {
    if (g.has_loops()) throw InvalidInputError("balanced_three_cuts: loopless graph required");
    if (!is_proper_coloring(g, coloring))
        throw InvalidInputError("balanced_three_cuts: improper coloring");

    const int n = g.vertex_count();
    // classes {1,c} vs the rest, for c = 2,3,4
    std::vector<Cut> cuts;
    for (int c = 2; c <= 4; ++c) {
        std::vector<bool> in_a(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            in_a[static_cast<std::size_t>(v)] =
                coloring.color[static_cast<std::size_t>(v)] == 1 || coloring.color[static_cast<std::size_t>(v)] == c;
        cuts.push_back(Cut::from_membership(std::move(in_a)));
    }

    EdgeVector sum(static_cast<std::size_t>(g.edge_count()));
    for (const Cut& c : cuts) sum += cut_vector(g, c);
    for (const Int& v : sum.entries)
        if (v != 2) throw InternalError("balanced cuts do not cover every edge twice");
    return cuts;
}

Coloring4 four_coloring_from_decomposition(const Multigraph& g,
                                           const std::vector<Cut>& cuts) {
    if (cuts.size() != 3)
        throw InvalidInputError("four_coloring_from_decomposition expects three cuts");
    EdgeVector sum(static_cast<std::size_t>(g.edge_count()));
    for (const Cut& c : cuts) {
        if (c.n() != g.vertex_count())
            throw InvalidInputError("cut does not match graph vertex count");
        sum += cut_vector(g, c);
    }
    for (const Int& v : sum.entries)
        if (v != 2)
            throw InvalidInputError("cuts do not sum to the all-2 vector");

    // every edge is separated by at least one of the first two cuts, so the
    // side pair is a proper coloring
    Coloring4 col;
    col.color.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        col.color[static_cast<std::size_t>(v)] =
            1 + (cuts[0].in_side_a(v) ? 2 : 0) + (cuts[1].in_side_a(v) ? 1 : 0);
    if (!is_proper_coloring(g, col))
        throw InternalError("decomposition of the all-2 vector yielded an improper coloring");
    return col;
}

} // namespace cutpoly
