#include <algorithm>
#include <functional>

#include "cutpoly/graph.hpp"

namespace cutpoly {

namespace {

// Branch-set backtracking. Seeds are the minima of the five sets, in
// increasing order; sets only grow with vertices above their own seed,
// which kills the 5! labeling symmetry without losing any model.
struct MinorSearch {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<int> assign; // -1 unassigned, otherwise set index
    std::array<int, 5> seed{};
    std::array<std::vector<int>, 5> sets;
    bool pair_adj[5][5] = {};

    explicit MinorSearch(const Multigraph& g)
        : n(g.vertex_count()),
          adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)),
          assign(static_cast<std::size_t>(n), -1) {
        for (const Edge& e : g.edges())
            if (e.u != e.v) {
                adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
                adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
            }
    }

    bool adjacent_to_set(int v, int i) const {
        for (int w : sets[static_cast<std::size_t>(i)])
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) return true;
        return false;
    }

    void place(int v, int i, std::array<bool, 5>& changed) {
        assign[static_cast<std::size_t>(v)] = i;
        sets[static_cast<std::size_t>(i)].push_back(v);
        for (int j = 0; j < 5; ++j) {
            changed[static_cast<std::size_t>(j)] = false;
            if (j == i || pair_adj[i][j]) continue;
            if (adjacent_to_set(v, j)) {
                pair_adj[i][j] = pair_adj[j][i] = true;
                changed[static_cast<std::size_t>(j)] = true;
            }
        }
    }

    void unplace(int v, int i, const std::array<bool, 5>& changed) {
        assign[static_cast<std::size_t>(v)] = -1;
        sets[static_cast<std::size_t>(i)].pop_back();
        for (int j = 0; j < 5; ++j)
            if (changed[static_cast<std::size_t>(j)]) pair_adj[i][j] = pair_adj[j][i] = false;
    }

    // Vertices reachable from set i through unassigned vertices above its
    // seed. Used as a relaxed feasibility bound for unrealized pairs.
    std::vector<char> reach(int i) const {
        std::vector<char> r(static_cast<std::size_t>(n), 0);
        std::vector<int> stack = sets[static_cast<std::size_t>(i)];
        for (int v : stack) r[static_cast<std::size_t>(v)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && !r[static_cast<std::size_t>(w)] &&
                    assign[static_cast<std::size_t>(w)] == -1 && w > seed[static_cast<std::size_t>(i)]) {
                    r[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        return r;
    }

    static bool touches(const std::vector<std::vector<char>>& adj,
                        const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (!a[v]) continue;
            for (std::size_t w = 0; w < b.size(); ++w)
                if (b[w] && adj[v][w]) return true;
        }
        return false;
    }

    bool search() {
        int fi = -1, fj = -1;
        for (int i = 0; i < 5 && fi < 0; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (!pair_adj[i][j]) { fi = i; fj = j; break; }
        if (fi < 0) return true;

        for (int i = 0; i < 5; ++i) {
            std::vector<char> ri;
            bool have_ri = false;
            for (int j = i + 1; j < 5; ++j) {
                if (pair_adj[i][j]) continue;
                if (!have_ri) { ri = reach(i); have_ri = true; }
                if (!touches(adj, ri, reach(j))) return false;
            }
        }

        for (int side = 0; side < 2; ++side) {
            int i = side == 0 ? fi : fj;
            for (int v = seed[static_cast<std::size_t>(i)] + 1; v < n; ++v) {
                if (assign[static_cast<std::size_t>(v)] != -1 || !adjacent_to_set(v, i)) continue;
                std::array<bool, 5> changed{};
                place(v, i, changed);
                if (search()) return true;
                unplace(v, i, changed);
            }
        }
        return false;
    }
};

} // namespace

std::optional<K5Witness> has_K5_minor(const Multigraph& g, const Limits& limits) {
    const int n = g.vertex_count();
    if (n > limits.max_minor_vertices)
        throw ResourceLimitError("K5 minor search limited to " +
                                 std::to_string(limits.max_minor_vertices) + " vertices");
    if (n < 5) return std::nullopt;

    MinorSearch ms(g);
    long long simple_edges = 0;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) simple_edges += ms.adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    if (simple_edges < 10) return std::nullopt; // a model needs 10 cross edges

    std::array<int, 5> pick{};
    std::function<bool(int, int)> choose = [&](int from, int depth) -> bool {
        if (depth == 5) {
            for (int i = 0; i < 5; ++i) {
                ms.seed[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i)];
                ms.sets[static_cast<std::size_t>(i)] = {pick[static_cast<std::size_t>(i)]};
                ms.assign[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = i;
            }
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    ms.pair_adj[i][j] = ms.pair_adj[j][i] =
                        ms.adj[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])][static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])];
            bool found = ms.search();
            if (!found) {
                for (int i = 0; i < 5; ++i) ms.assign[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = -1;
                for (int i = 0; i < 5; ++i) ms.sets[static_cast<std::size_t>(i)].clear();
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) ms.pair_adj[i][j] = false;
            }
            return found;
        }
        for (int v = from; v < n; ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            if (choose(v + 1, depth + 1)) return true;
        }
        return false;
    };

    if (!choose(0, 0)) return std::nullopt;

    K5Witness witness;
    for (int i = 0; i < 5; ++i) {
        witness[static_cast<std::size_t>(i)] = ms.sets[static_cast<std::size_t>(i)];
        std::sort(witness[static_cast<std::size_t>(i)].begin(), witness[static_cast<std::size_t>(i)].end());
    }
    return witness;
}

} // namespace cutpoly
