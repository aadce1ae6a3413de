#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cutpoly/graph.hpp"

namespace testutil {

using cutpoly::Multigraph;

inline Multigraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

inline Multigraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph(n, edges);
}

inline Multigraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(n, edges);
}

inline Multigraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Multigraph(a + b, edges);
}

inline Multigraph grid(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Multigraph(rows * cols, edges);
}

/// Outer 5-cycle, spokes, inner pentagram.
inline Multigraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    return Multigraph(10, edges);
}

/// Two triangles sharing vertex 0.
inline Multigraph bowtie() {
    return Multigraph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

/// Random connected multigraph: a random spanning tree plus extra pairs;
/// duplicate pairs give parallel edges when allowed.
inline Multigraph random_connected(std::mt19937_64& rng, int n, int extra,
                                   bool allow_parallel) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        edges.emplace_back(u, v);
    }
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    int tries = 0;
    while (extra > 0 && tries < 50 * (extra + 1)) {
        ++tries;
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!allow_parallel && present.count({key.first, key.second})) continue;
        present.insert({key.first, key.second});
        edges.emplace_back(key.first, key.second);
        --extra;
    }
    return Multigraph(n, edges);
}

/// Random planar connected graph: grow a triangulation by placing each new
/// vertex inside a random triangle, then thin edges while preserving
/// connectivity.
inline Multigraph random_planar(std::mt19937_64& rng, int n, int percent_keep) {
    if (n < 3) return path(n);
    std::vector<std::array<int, 3>> tris{{0, 1, 2}};
    std::set<std::pair<int, int>> edge_set{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t t = static_cast<std::size_t>(rng() % tris.size());
        auto [a, b, c] = tris[t];
        edge_set.insert(std::minmax(a, v));
        edge_set.insert(std::minmax(b, v));
        edge_set.insert(std::minmax(c, v));
        tris[t] = {a, b, v};
        tris.push_back({a, c, v});
        tris.push_back({b, c, v});
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    std::shuffle(edges.begin(), edges.end(), rng);

    // tentative deletions, reverted when connectivity breaks
    std::vector<std::pair<int, int>> kept = edges;
    for (const auto& e : edges) {
        if (static_cast<int>(rng() % 100) < percent_keep) continue;
        std::vector<std::pair<int, int>> trial;
        for (const auto& f : kept)
            if (f != e) trial.push_back(f);
        Multigraph g(n, trial);
        if (cutpoly::connected_components(g).size() == 1) kept = std::move(trial);
    }
    std::sort(kept.begin(), kept.end());
    return Multigraph(n, kept);
}

} // namespace testutil
