#include "cutpoly/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cutpoly {

namespace {

std::vector<std::vector<char>> adjacency(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges())
        if (e.u != e.v) {
            adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
        }
    return adj;
}

} // namespace

std::string canonical_form(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw ResourceLimitError("canonical_form is brute force; limited to 8 vertices");
    auto adj = adjacency(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits.push_back(adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                                  [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]
                                   ? '1'
                                   : '0');
        if (best.empty() || bits < best) best = std::move(bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Multigraph graph_from_bits(int n, const std::string& bits) {
    std::vector<std::pair<int, int>> edges;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            if (idx < bits.size() && bits[idx] == '1') edges.emplace_back(i, j);
    return Multigraph(n, edges);
}

std::vector<Multigraph> graph_classes(int n, bool connected_only) {
    if (n < 1) throw InvalidInputError("graph_classes needs n >= 1");
    if (n > 6)
        throw ResourceLimitError("isomorph-reduced enumeration limited to 6 vertices");

    const int pairs = n * (n - 1) / 2;
    std::map<std::string, char> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::string bits(static_cast<std::size_t>(pairs), '0');
        for (int b = 0; b < pairs; ++b)
            if (mask >> b & 1) bits[static_cast<std::size_t>(b)] = '1';
        Multigraph g = graph_from_bits(n, bits);
        if (connected_only && connected_components(g).size() != 1) continue;
        seen.emplace(canonical_form(g), 0);
    }
    std::vector<Multigraph> out;
    out.reserve(seen.size());
    for (const auto& [bits, unused] : seen) {
        (void)unused;
        out.push_back(graph_from_bits(n, bits));
    }
    return out;
}

std::vector<Multigraph> connected_graph_classes(int n) { return graph_classes(n, true); }

} // namespace cutpoly
