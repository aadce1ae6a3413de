#pragma once

#include <optional>
#include <vector>

#include "cutpoly/graph.hpp"

namespace cutpoly {

/// One traversal direction of an edge: end 0 runs u->v, end 1 runs v->u.
/// The tail of (e,0) is u, the tail of (e,1) is v.
struct Dart {
    int edge;
    int end;

    int tail(const Multigraph& g) const { return end == 0 ? g.edge(edge).u : g.edge(edge).v; }
    int head(const Multigraph& g) const { return end == 0 ? g.edge(edge).v : g.edge(edge).u; }
    Dart twin() const { return Dart{edge, 1 - end}; }

    bool operator==(const Dart& o) const { return edge == o.edge && end == o.end; }
};

/// Rotation system plus its face walks. rotation[v] lists the darts with
/// tail v in cyclic order; faces are the orbits of the face-tracing
/// permutation. A connected component without edges contributes one empty
/// face walk, so |V| - |E| + |F| = 2 holds per component.
struct PlanarEmbedding {
    std::vector<std::vector<Dart>> rotation;
    std::vector<std::vector<Dart>> faces;
};

/// Dual multigraph: one vertex per face, one edge per primal edge joining
/// its two incident faces. A bridge yields a loop in the dual.
struct DualMap {
    Multigraph dual;
    std::vector<int> edge_bijection; // edge id of G -> edge id of G*
};

/// Planarity test with embedding, or nullopt if nonplanar. The returned
/// embedding is validated against Euler's formula per component.
std::optional<PlanarEmbedding> is_planar(const Multigraph& g);

/// Dual of a connected embedded graph. Disconnected input is rejected.
DualMap dual_graph(const Multigraph& g, const PlanarEmbedding& emb);

/// Number of connected components (isolated vertices count).
int component_count(const Multigraph& g);

} // namespace cutpoly
