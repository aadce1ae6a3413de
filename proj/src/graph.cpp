#include "cutpoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace cutpoly {

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges,
                       bool allow_loops)
    : n_(n) {
    if (n < 0) throw InvalidInputError("vertex count must be nonnegative");
    inc_.resize(static_cast<std::size_t>(n));
    edges_.reserve(edges.size());
    int id = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInputError("edge endpoint out of range");
        if (u == v) {
            if (!allow_loops) throw InvalidInputError("loop edges are not allowed");
            has_loops_ = true;
        }
        edges_.push_back(Edge{id, u, v});
        inc_[static_cast<std::size_t>(u)].push_back(id);
        if (u != v) inc_[static_cast<std::size_t>(v)].push_back(id);
        ++id;
    }
}

int Multigraph::other(int edge_id, int v) const {
    const Edge& e = edge(edge_id);
    return e.u == v ? e.v : e.u;
}

Cut Cut::empty(int n) {
    Cut c;
    c.in_a_.assign(static_cast<std::size_t>(n), false);
    return c;
}

Cut Cut::from_membership(std::vector<bool> in_a) {
    Cut c;
    if (!in_a.empty() && in_a[0])
        for (std::size_t i = 0; i < in_a.size(); ++i) in_a[i] = !in_a[i];
    c.in_a_ = std::move(in_a);
    return c;
}

Cut Cut::from_side(int n, const std::vector<int>& side) {
    std::vector<bool> in_a(static_cast<std::size_t>(n), false);
    for (int v : side) {
        if (v < 0 || v >= n) throw InvalidInputError("cut vertex out of range");
        in_a[static_cast<std::size_t>(v)] = true;
    }
    return from_membership(std::move(in_a));
}

Cut Cut::from_index(int n, std::uint64_t mask) {
    std::vector<bool> in_a(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n && v <= 64; ++v)
        if (mask >> (v - 1) & 1) in_a[static_cast<std::size_t>(v)] = true;
    return from_membership(std::move(in_a));
}

bool Cut::is_empty() const {
    return std::none_of(in_a_.begin(), in_a_.end(), [](bool b) { return b; });
}

std::vector<int> Cut::side_a() const {
    std::vector<int> s;
    for (int v = 0; v < n(); ++v)
        if (in_a_[static_cast<std::size_t>(v)]) s.push_back(v);
    return s;
}

std::vector<int> Cut::side_b() const {
    std::vector<int> s;
    for (int v = 0; v < n(); ++v)
        if (!in_a_[static_cast<std::size_t>(v)]) s.push_back(v);
    return s;
}

std::uint64_t Cut::index() const {
    if (n() > 64) throw InternalError("cut index requires at most 64 vertices");
    std::uint64_t mask = 0;
    for (int v = 1; v < n(); ++v)
        if (in_a_[static_cast<std::size_t>(v)]) mask |= std::uint64_t{1} << (v - 1);
    return mask;
}

bool Cut::operator<(const Cut& o) const {
    if (in_a_.size() != o.in_a_.size()) return in_a_.size() < o.in_a_.size();
    for (std::size_t i = in_a_.size(); i-- > 0;)
        if (in_a_[i] != o.in_a_[i]) return o.in_a_[i];
    return false;
}

std::vector<Cut> enumerate_cuts(const Multigraph& g, const Limits& limits) {
    const int n = g.vertex_count();
    if (n < 1) throw InvalidInputError("cut enumeration needs at least one vertex");
    if (n > limits.max_cut_vertices)
        throw ResourceLimitError("cut enumeration limited to " +
                                 std::to_string(limits.max_cut_vertices) + " vertices");
    std::vector<Cut> cuts;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    cuts.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        cuts.push_back(Cut::from_index(n, mask));
    return cuts;
}

EdgeVector cut_vector(const Multigraph& g, const Cut& c) {
    if (c.n() != g.vertex_count())
        throw InvalidInputError("cut does not match graph vertex count");
    EdgeVector x(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        if (c.separates(e.u, e.v)) x[static_cast<std::size_t>(e.id)] = 1;
    return x;
}

std::vector<int> crossing_edges(const Multigraph& g, const Cut& c) {
    std::vector<int> ids;
    for (const Edge& e : g.edges())
        if (c.separates(e.u, e.v)) ids.push_back(e.id);
    return ids;
}

namespace {

std::vector<char> edge_mask(const Multigraph& g, const std::vector<int>& ids,
                            const char* what) {
    std::vector<char> mask(static_cast<std::size_t>(g.edge_count()), 0);
    for (int id : ids) {
        if (id < 0 || id >= g.edge_count())
            throw InvalidInputError(std::string(what) + ": edge id out of range");
        mask[static_cast<std::size_t>(id)] = 1;
    }
    return mask;
}

} // namespace

ContractionResult contract_edges(const Multigraph& g, const std::vector<int>& e0) {
    const auto in_e0 = edge_mask(g, e0, "contract_edges");
    const int n = g.vertex_count();

    std::vector<int> rep(static_cast<std::size_t>(n));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (rep[static_cast<std::size_t>(v)] != v) {
            rep[static_cast<std::size_t>(v)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
            v = rep[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Edge& e : g.edges())
        if (in_e0[static_cast<std::size_t>(e.id)]) {
            int a = find(e.u), b = find(e.v);
            if (a != b) rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }

    // New vertex ids in ascending order of class representative.
    std::vector<int> vertex_map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) vertex_map[static_cast<std::size_t>(v)] = next++;
    for (int v = 0; v < n; ++v)
        vertex_map[static_cast<std::size_t>(v)] = vertex_map[static_cast<std::size_t>(find(v))];

    ContractionResult res;
    res.vertex_map = vertex_map;
    res.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
    std::vector<std::pair<int, int>> kept;
    for (const Edge& e : g.edges()) {
        if (in_e0[static_cast<std::size_t>(e.id)]) continue;
        int u = vertex_map[static_cast<std::size_t>(e.u)];
        int v = vertex_map[static_cast<std::size_t>(e.v)];
        if (u == v) {
            res.loops_created.push_back(e.id);
            continue;
        }
        res.edge_map[static_cast<std::size_t>(e.id)] = static_cast<int>(kept.size());
        kept.emplace_back(u, v);
    }
    res.contracted = Multigraph(next, kept);
    return res;
}

Cut lift_cut(const Cut& c, const std::vector<int>& vertex_map) {
    std::vector<bool> in_a(vertex_map.size(), false);
    for (std::size_t v = 0; v < vertex_map.size(); ++v) {
        int w = vertex_map[v];
        if (w < 0 || w >= c.n()) throw InvalidInputError("vertex map out of range");
        in_a[v] = c.in_side_a(w);
    }
    return Cut::from_membership(std::move(in_a));
}

std::optional<Cut> recover_cut_from_edgeset(const Multigraph& g,
                                            const std::vector<int>& e1) {
    const auto in_e1 = edge_mask(g, e1, "recover_cut_from_edgeset");
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incidence()[static_cast<std::size_t>(v)]) {
                int w = g.other(id, v);
                int want = side[static_cast<std::size_t>(v)] ^ (in_e1[static_cast<std::size_t>(id)] ? 1 : 0);
                if (w == v) { // loop: must not be asked to cross
                    if (in_e1[static_cast<std::size_t>(id)]) return std::nullopt;
                    continue;
                }
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = want;
                    q.push(w);
                } else if (side[static_cast<std::size_t>(w)] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<bool> in_a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) in_a[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] == 1;
    return Cut::from_membership(std::move(in_a));
}

bool is_even_subgraph(const Multigraph& g, const std::vector<int>& f) {
    const auto in_f = edge_mask(g, f, "is_even_subgraph");
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges())
        if (in_f[static_cast<std::size_t>(e.id)]) {
            deg[static_cast<std::size_t>(e.u)] += 1;
            deg[static_cast<std::size_t>(e.v)] += 1; // a loop contributes 2
        }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

std::vector<std::vector<int>> euler_cycle_decomposition(const Multigraph& g,
                                                        const std::vector<int>& f) {
    if (!is_even_subgraph(g, f))
        throw InvalidInputError("euler_cycle_decomposition: edge set is not even");
    auto unused = edge_mask(g, f, "euler_cycle_decomposition");
    std::vector<std::vector<int>> circuits;

    // Walk from the lowest unused edge, always taking the lowest unused
    // incident edge; peel a circuit whenever the walk revisits a vertex.
    for (int start = 0; start < g.edge_count(); ++start) {
        while (unused[static_cast<std::size_t>(start)]) {
            std::vector<int> walk_edges;
            std::vector<int> walk_verts;
            int v0 = std::min(g.edge(start).u, g.edge(start).v);
            walk_verts.push_back(v0);
            int v = v0;
            std::vector<int> at(static_cast<std::size_t>(g.vertex_count()), -1);
            at[static_cast<std::size_t>(v0)] = 0;
            while (true) {
                int chosen = -1;
                for (int id : g.incidence()[static_cast<std::size_t>(v)])
                    if (unused[static_cast<std::size_t>(id)]) { chosen = id; break; }
                if (chosen == -1)
                    throw InternalError("even subgraph walk got stuck");
                unused[static_cast<std::size_t>(chosen)] = 0;
                walk_edges.push_back(chosen);
                v = g.other(chosen, v);
                int seen = at[static_cast<std::size_t>(v)];
                if (seen != -1) {
                    // vertices walk_verts[seen..] close a circuit
                    circuits.emplace_back(walk_edges.begin() + seen, walk_edges.end());
                    for (std::size_t i = static_cast<std::size_t>(seen) + 1; i < walk_verts.size(); ++i)
                        at[static_cast<std::size_t>(walk_verts[i])] = -1;
                    walk_edges.resize(static_cast<std::size_t>(seen));
                    walk_verts.resize(static_cast<std::size_t>(seen) + 1);
                    if (seen == 0) break;
                    v = walk_verts.back();
                } else {
                    at[static_cast<std::size_t>(v)] = static_cast<int>(walk_verts.size());
                    walk_verts.push_back(v);
                }
            }
        }
    }
    return circuits;
}

std::vector<std::vector<int>> cycle_basis(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<char> tree(static_cast<std::size_t>(g.edge_count()), 0);

    for (int root = 0; root < n; ++root) {
        if (depth[static_cast<std::size_t>(root)] != -1) continue;
        depth[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incidence()[static_cast<std::size_t>(v)]) {
                int w = g.other(id, v);
                if (w == v || depth[static_cast<std::size_t>(w)] != -1) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                parent[static_cast<std::size_t>(w)] = v;
                parent_edge[static_cast<std::size_t>(w)] = id;
                tree[static_cast<std::size_t>(id)] = 1;
                q.push(w);
            }
        }
    }

    std::vector<std::vector<int>> basis;
    for (const Edge& e : g.edges()) {
        if (tree[static_cast<std::size_t>(e.id)]) continue;
        std::vector<int> cyc{e.id};
        if (e.u != e.v) {
            int a = e.u, b = e.v;
            while (a != b) {
                if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
                cyc.push_back(parent_edge[static_cast<std::size_t>(a)]);
                a = parent[static_cast<std::size_t>(a)];
            }
        }
        std::sort(cyc.begin(), cyc.end());
        basis.push_back(std::move(cyc));
    }
    return basis;
}

std::optional<Cut> is_bipartite(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incidence()[static_cast<std::size_t>(v)]) {
                int w = g.other(id, v);
                if (w == v) return std::nullopt; // loop can never cross
                int want = side[static_cast<std::size_t>(v)] ^ 1;
                if (side[static_cast<std::size_t>(w)] == -1) {
                    side[static_cast<std::size_t>(w)] = want;
                    q.push(w);
                } else if (side[static_cast<std::size_t>(w)] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<bool> in_a(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) in_a[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] == 1;
    return Cut::from_membership(std::move(in_a));
}

bool is_proper_coloring(const Multigraph& g, const Coloring4& c) {
    if (c.color.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[static_cast<std::size_t>(v)] < 1 || c.color[static_cast<std::size_t>(v)] > 4) return false;
    for (const Edge& e : g.edges())
        if (e.u != e.v && c.color[static_cast<std::size_t>(e.u)] == c.color[static_cast<std::size_t>(e.v)])
            return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> comps;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        comp[static_cast<std::size_t>(root)] = c;
        std::queue<int> q;
        q.push(root);
        comps[static_cast<std::size_t>(c)].push_back(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incidence()[static_cast<std::size_t>(v)]) {
                int w = g.other(id, v);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = c;
                    comps[static_cast<std::size_t>(c)].push_back(w);
                    q.push(w);
                }
            }
        }
    }
    return comps;
}

} // namespace cutpoly
