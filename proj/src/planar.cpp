#include "cutpoly/planar.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cutpoly {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

Dart dart_at(const Multigraph& g, int edge_id, int tail) {
    return g.edge(edge_id).u == tail ? Dart{edge_id, 0} : Dart{edge_id, 1};
}

/// Trace the orbits of d -> rotation successor of twin(d) at head(d).
std::vector<std::vector<Dart>> trace_faces(const Multigraph& g,
                                           const std::vector<std::vector<Dart>>& rotation) {
    const int m = g.edge_count();
    // position of each dart within the rotation at its tail
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(2 * m), {-1, -1});
    for (int v = 0; v < g.vertex_count(); ++v)
        for (std::size_t i = 0; i < rotation[static_cast<std::size_t>(v)].size(); ++i) {
            const Dart& d = rotation[static_cast<std::size_t>(v)][i];
            pos[static_cast<std::size_t>(2 * d.edge + d.end)] = {v, static_cast<int>(i)};
        }

    std::vector<char> used(static_cast<std::size_t>(2 * m), 0);
    std::vector<std::vector<Dart>> faces;
    for (int code = 0; code < 2 * m; ++code) {
        if (used[static_cast<std::size_t>(code)]) continue;
        std::vector<Dart> walk;
        Dart d{code / 2, code % 2};
        while (!used[static_cast<std::size_t>(2 * d.edge + d.end)]) {
            used[static_cast<std::size_t>(2 * d.edge + d.end)] = 1;
            walk.push_back(d);
            Dart t = d.twin();
            auto [v, i] = pos[static_cast<std::size_t>(2 * t.edge + t.end)];
            if (v < 0) throw InternalError("dart missing from rotation system");
            const auto& rot = rotation[static_cast<std::size_t>(v)];
            d = rot[(static_cast<std::size_t>(i) + 1) % rot.size()];
        }
        faces.push_back(std::move(walk));
    }
    return faces;
}

void check_euler(const Multigraph& g, const PlanarEmbedding& emb) {
    auto comps = connected_components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<long long> vcnt(comps.size(), 0), ecnt(comps.size(), 0), fcnt(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c) vcnt[c] = static_cast<long long>(comps[c].size());
    for (const Edge& e : g.edges()) ecnt[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(e.u)])]++;
    std::size_t empty_faces = 0;
    for (const auto& f : emb.faces) {
        if (f.empty()) { ++empty_faces; continue; }
        fcnt[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(f.front().tail(g))])]++;
    }
    std::size_t edgeless = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (ecnt[c] == 0) { ++edgeless; continue; }
        if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
            throw InternalError("embedding violates Euler's formula");
    }
    if (empty_faces != edgeless)
        throw InternalError("embedding face bookkeeping out of sync");
}

} // namespace

std::optional<PlanarEmbedding> is_planar(const Multigraph& g) {
    const int n = g.vertex_count();

    // Bundle parallel edges; a planarity test only needs the simple graph.
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    std::vector<int> loops;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) { loops.push_back(e.id); continue; }
        bundles[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
    }

    BoostGraph bg(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> simple_ends;
    for (const auto& [ends, ids] : bundles) {
        boost::add_edge(static_cast<std::size_t>(ends.first), static_cast<std::size_t>(ends.second),
                        static_cast<int>(simple_ends.size()), bg);
        simple_ends.push_back(ends);
        (void)ids;
    }

    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> boost_emb(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = boost::make_iterator_property_map(
            boost_emb.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    PlanarEmbedding emb;
    emb.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& rot = emb.rotation[static_cast<std::size_t>(v)];
        for (const EdgeDesc& ed : boost_emb[static_cast<std::size_t>(v)]) {
            int sid = boost::get(boost::edge_index, bg, ed);
            const auto& key = simple_ends[static_cast<std::size_t>(sid)];
            const auto& bundle = bundles[key];
            // Nest parallel copies: id order at the low endpoint, reversed
            // at the high endpoint, so consecutive copies bound bigons.
            if (v == key.first)
                for (int id : bundle) rot.push_back(dart_at(g, id, v));
            else
                for (auto it = bundle.rbegin(); it != bundle.rend(); ++it)
                    rot.push_back(dart_at(g, *it, v));
        }
    }
    for (int id : loops) {
        auto& rot = emb.rotation[static_cast<std::size_t>(g.edge(id).u)];
        rot.push_back(Dart{id, 0});
        rot.push_back(Dart{id, 1});
    }

    emb.faces = trace_faces(g, emb.rotation);
    for (const auto& comp : connected_components(g)) {
        bool edgeless = true;
        for (int v : comp)
            if (!g.incidence()[static_cast<std::size_t>(v)].empty()) { edgeless = false; break; }
        if (edgeless) emb.faces.emplace_back();
    }
    check_euler(g, emb);
    return emb;
}

DualMap dual_graph(const Multigraph& g, const PlanarEmbedding& emb) {
    if (g.vertex_count() == 0) throw InvalidInputError("dual of the empty graph");
    if (connected_components(g).size() != 1)
        throw InvalidInputError("dual_graph requires a connected graph");

    const int m = g.edge_count();
    std::vector<int> face_of(static_cast<std::size_t>(2 * m), -1);
    for (std::size_t f = 0; f < emb.faces.size(); ++f)
        for (const Dart& d : emb.faces[f])
            face_of[static_cast<std::size_t>(2 * d.edge + d.end)] = static_cast<int>(f);

    std::vector<std::pair<int, int>> dual_edges;
    for (int e = 0; e < m; ++e) {
        int fa = face_of[static_cast<std::size_t>(2 * e)];
        int fb = face_of[static_cast<std::size_t>(2 * e + 1)];
        if (fa < 0 || fb < 0) throw InvalidInputError("embedding does not cover the graph");
        dual_edges.emplace_back(fa, fb);
    }

    DualMap dm{Multigraph(static_cast<int>(emb.faces.size()), dual_edges, /*allow_loops=*/true), {}};
    dm.edge_bijection.resize(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) dm.edge_bijection[static_cast<std::size_t>(e)] = e;
    return dm;
}

int component_count(const Multigraph& g) {
    return static_cast<int>(connected_components(g).size());
}

} // namespace cutpoly
