#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cutpoly/common.hpp"
#include "cutpoly/edgevector.hpp"

namespace cutpoly {

struct Edge {
    int id;
    int u;
    int v;
};

/// Loopless multigraph with stable edge identities. Edge ids are dense
/// 0..m-1 in construction order; parallel edges are permitted. Loops are
/// rejected unless allow_loops is set (dual graphs contain a loop for
/// every bridge of the primal).
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int n, const std::vector<std::pair<int, int>>& edges,
               bool allow_loops = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    /// Incident edge ids per vertex, ascending; a loop appears once.
    const std::vector<std::vector<int>>& incidence() const { return inc_; }
    bool has_loops() const { return has_loops_; }

    /// Endpoint of e other than v (for a loop, v itself).
    int other(int edge_id, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    bool has_loops_ = false;
};

/// Unordered vertex bipartition A|B in canonical form: side A is the side
/// not containing vertex 0. The empty side A encodes the all-zero cut.
class Cut {
public:
    Cut() = default;
    static Cut empty(int n);
    /// Canonicalizes: flips if the given side contains vertex 0.
    static Cut from_side(int n, const std::vector<int>& side);
    static Cut from_membership(std::vector<bool> in_a);
    /// Inverse of index(): bit i of mask <=> vertex i+1 in side A.
    static Cut from_index(int n, std::uint64_t mask);

    int n() const { return static_cast<int>(in_a_.size()); }
    bool in_side_a(int v) const { return in_a_[static_cast<std::size_t>(v)]; }
    bool is_empty() const;
    std::vector<int> side_a() const;
    std::vector<int> side_b() const;
    /// Position in the binary-counting enumeration order. Requires n <= 64.
    std::uint64_t index() const;
    /// True iff edge (u,v) has exactly one endpoint in side A.
    bool separates(int u, int v) const { return in_a_[static_cast<std::size_t>(u)] != in_a_[static_cast<std::size_t>(v)]; }

    bool operator==(const Cut& o) const { return in_a_ == o.in_a_; }
    /// Binary-counting order (vertex 1 is the least significant bit).
    bool operator<(const Cut& o) const;

private:
    std::vector<bool> in_a_;
};

/// Proper vertex coloring with colors in {1,2,3,4}; classes may be empty.
struct Coloring4 {
    std::vector<int> color;
};

struct ContractionResult {
    Multigraph contracted;
    std::vector<int> vertex_map;   // V(G) -> V(G')
    std::vector<int> edge_map;     // edge id of G -> edge id of G', -1 if gone
    std::vector<int> loops_created; // original ids of surviving edges that became loops
};

/// Witness for a K5 minor: five disjoint connected branch sets, pairwise
/// joined by an edge.
using K5Witness = std::array<std::vector<int>, 5>;

/// All 2^(n-1) cuts in binary-counting order; first element is the empty cut.
std::vector<Cut> enumerate_cuts(const Multigraph& g, const Limits& limits = {});

/// 0/1 vector with 1 exactly on the edges separated by the cut.
EdgeVector cut_vector(const Multigraph& g, const Cut& c);

/// Edge ids separated by the cut, ascending.
std::vector<int> crossing_edges(const Multigraph& g, const Cut& c);

/// Contract the edge set e0. Surviving edges whose endpoints merged are
/// reported in loops_created and excluded from the contracted graph;
/// loop creation is data, not failure, at this layer.
ContractionResult contract_edges(const Multigraph& g, const std::vector<int>& e0);

/// Preimage of a cut of the contracted graph under vertex_map.
Cut lift_cut(const Cut& c, const std::vector<int>& vertex_map);

/// Cut whose crossing edge set is exactly e1, or nullopt if some cycle
/// meets e1 an odd number of times. Per component the side of the lowest
/// vertex is fixed, then the whole assignment is canonicalized.
std::optional<Cut> recover_cut_from_edgeset(const Multigraph& g,
                                            const std::vector<int>& e1);

/// True iff every vertex has even degree within f.
bool is_even_subgraph(const Multigraph& g, const std::vector<int>& f);

/// Edge-disjoint circuits whose union is f. Requires is_even_subgraph(g,f).
/// Deterministic under the fixed edge ordering. Circuits are returned as
/// edge id sequences tracing each closed walk.
std::vector<std::vector<int>> euler_cycle_decomposition(const Multigraph& g,
                                                        const std::vector<int>& f);

/// Fundamental cycles of a spanning forest, one per non-tree edge, each as
/// an ascending edge id set.
std::vector<std::vector<int>> cycle_basis(const Multigraph& g);

/// The bipartition as a cut whose crossing set is all edges, or nullopt.
/// Edgeless graphs yield the empty cut (vacuously valid).
std::optional<Cut> is_bipartite(const Multigraph& g);

/// Exact backtracking 4-coloring: saturation-degree order, lowest color
/// first, lowest index tie-break. Rejects nonplanar input.
Coloring4 four_color(const Multigraph& g);

bool is_proper_coloring(const Multigraph& g, const Coloring4& c);

/// Exhaustive branch-set search for a K5 minor. Correct for all inputs
/// within the vertex bound.
std::optional<K5Witness> has_K5_minor(const Multigraph& g, const Limits& limits = {});

/// Vertex sets of connected components, each ascending, ordered by lowest
/// vertex.
std::vector<std::vector<int>> connected_components(const Multigraph& g);

} // namespace cutpoly
