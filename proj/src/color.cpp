#include <algorithm>

#include "cutpoly/graph.hpp"
#include "cutpoly/planar.hpp"

namespace cutpoly {

namespace {

struct ColorSearch {
    int n;
    std::vector<std::vector<char>> adj; // simple adjacency
    std::vector<int> color;             // 0 = uncolored

    explicit ColorSearch(const Multigraph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)),
          color(static_cast<std::size_t>(n), 0) {
        for (const Edge& e : g.edges())
            if (e.u != e.v) {
                adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
                adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
            }
    }

    // saturation = number of distinct colors among colored neighbors
    int saturation(int v) const {
        bool seen[5] = {};
        int s = 0;
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && color[static_cast<std::size_t>(w)] &&
                !seen[color[static_cast<std::size_t>(w)]]) {
                seen[color[static_cast<std::size_t>(w)]] = true;
                ++s;
            }
        return s;
    }

    bool solve(int remaining) {
        if (remaining == 0) return true;
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)]) continue;
            int s = saturation(v);
            if (s > best_sat) { best_sat = s; best = v; }
        }
        bool forbidden[5] = {};
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(best)][static_cast<std::size_t>(w)])
                forbidden[color[static_cast<std::size_t>(w)]] = true;
        for (int c = 1; c <= 4; ++c) {
            if (forbidden[c]) continue;
            color[static_cast<std::size_t>(best)] = c;
            if (solve(remaining - 1)) return true;
            color[static_cast<std::size_t>(best)] = 0;
        }
        return false;
    }
};

} // namespace

Coloring4 four_color(const Multigraph& g) {
    if (g.has_loops()) throw InvalidInputError("four_color requires a loopless graph");
    if (!is_planar(g)) throw InvalidInputError("four_color requires a planar graph");

    ColorSearch search(g);
    if (!search.solve(g.vertex_count()))
        throw InternalError("no 4-coloring found for a planar graph");
    Coloring4 result{std::move(search.color)};
    if (!is_proper_coloring(g, result))
        throw InternalError("four_color produced an improper coloring");
    return result;
}

} // namespace cutpoly
