#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cutpoly/graph.hpp"
#include "util.hpp"

using namespace cutpoly;
using testutil::bowtie;
using testutil::complete;
using testutil::cycle;
using testutil::path;

TEST_CASE("multigraph construction") {
    Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge(1).u == 0);
    CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Multigraph(2, {{0, 5}}), InvalidInputError);
}

TEST_CASE("cut canonical form excludes vertex 0") {
    Cut c = Cut::from_side(4, {0, 2});
    CHECK(!c.in_side_a(0));
    CHECK(c.side_a() == std::vector<int>{1, 3});
    CHECK(Cut::from_side(4, {1, 3}) == c);
    CHECK(Cut::empty(4).is_empty());
    CHECK(Cut::from_side(4, {0, 1, 2, 3}).is_empty());
}

TEST_CASE("enumerate_cuts is binary counting over V minus vertex 0") {
    Multigraph k3 = complete(3);
    auto cuts = enumerate_cuts(k3);
    REQUIRE(cuts.size() == 4);
    CHECK(cuts[0].is_empty());
    CHECK(cuts[1].side_a() == std::vector<int>{1});
    CHECK(cuts[2].side_a() == std::vector<int>{2});
    CHECK(cuts[3].side_a() == std::vector<int>{1, 2});
    for (std::size_t i = 0; i < cuts.size(); ++i) CHECK(cuts[i].index() == i);

    CHECK(enumerate_cuts(Multigraph(1, {})).size() == 1);
    CHECK(enumerate_cuts(complete(4)).size() == 8);

    Limits tight;
    tight.max_cut_vertices = 4;
    CHECK_THROWS_AS(enumerate_cuts(complete(5), tight), ResourceLimitError);
}

TEST_CASE("cut_vector reads off separation") {
    Multigraph k3 = complete(3); // edges 01,02,12
    CHECK(cut_vector(k3, Cut::from_side(3, {1})) == EdgeVector::from_ints({1, 0, 1}));
    CHECK(cut_vector(k3, Cut::empty(3)).is_zero());
    Multigraph k4 = complete(4); // edges 01,02,03,12,13,23
    CHECK(cut_vector(k4, Cut::from_side(4, {1, 2})) ==
          EdgeVector::from_ints({1, 1, 0, 0, 1, 1}));
}

TEST_CASE("contract_edges merges and reports loops") {
    Multigraph k3 = complete(3);
    SUBCASE("single edge") {
        auto cr = contract_edges(k3, {0}); // contract 01
        CHECK(cr.contracted.vertex_count() == 2);
        CHECK(cr.contracted.edge_count() == 2); // parallel pair
        CHECK(cr.loops_created.empty());
        CHECK(cr.vertex_map == std::vector<int>{0, 0, 1});
        CHECK(cr.contracted.edge(0).u == cr.contracted.edge(1).u);
    }
    SUBCASE("collapse to a point") {
        auto cr = contract_edges(k3, {0, 1});
        CHECK(cr.contracted.vertex_count() == 1);
        CHECK(cr.contracted.edge_count() == 0);
        CHECK(cr.loops_created == std::vector<int>{2});
    }
    SUBCASE("path") {
        auto cr = contract_edges(path(3), {0});
        CHECK(cr.contracted.vertex_count() == 2);
        CHECK(cr.contracted.edge_count() == 1);
        CHECK(cr.loops_created.empty());
    }
}

TEST_CASE("lift_cut is the preimage partition") {
    Multigraph k3 = complete(3);
    auto cr = contract_edges(k3, {0});
    Cut merged = Cut::from_side(2, {0}); // side of merged(0,1)
    Cut lifted = lift_cut(merged, cr.vertex_map);
    CHECK(lifted == Cut::from_side(3, {0, 1}));
    CHECK(lift_cut(Cut::empty(2), cr.vertex_map).is_empty());

    Multigraph c4 = cycle(4);
    auto cr4 = contract_edges(c4, {0});
    Cut l = lift_cut(Cut::from_side(3, {0}), cr4.vertex_map);
    CHECK(l == Cut::from_side(4, {0, 1}));
}

TEST_CASE("lift_cut preserves crossing status of surviving edges") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 40; ++iter) {
        Multigraph g = testutil::random_connected(rng, 5 + static_cast<int>(rng() % 3), 4, true);
        std::vector<int> e0;
        for (const Edge& e : g.edges())
            if (rng() % 3 == 0) e0.push_back(e.id);
        auto cr = contract_edges(g, e0);
        for (const Cut& c : enumerate_cuts(cr.contracted)) {
            Cut lifted = lift_cut(c, cr.vertex_map);
            for (const Edge& e : g.edges()) {
                int mapped = cr.edge_map[static_cast<std::size_t>(e.id)];
                if (mapped < 0) continue;
                const Edge& f = cr.contracted.edge(mapped);
                CHECK(lifted.separates(e.u, e.v) == c.separates(f.u, f.v));
            }
        }
    }
}

TEST_CASE("recover_cut_from_edgeset") {
    Multigraph k4 = complete(4);
    auto star = recover_cut_from_edgeset(k4, {0, 1, 2}); // edges at vertex 0
    REQUIRE(star.has_value());
    CHECK(star->side_a() == std::vector<int>{1, 2, 3});

    Multigraph k3 = complete(3);
    CHECK(!recover_cut_from_edgeset(k3, {0}).has_value()); // triangle crossed once
    auto empty = recover_cut_from_edgeset(k3, {});
    REQUIRE(empty.has_value());
    CHECK(empty->is_empty());
}

TEST_CASE("cut / recover round trip") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        Multigraph g = testutil::random_connected(rng, 6, 5, true);
        for (const Cut& c : enumerate_cuts(g)) {
            EdgeVector v = cut_vector(g, c);
            auto back = recover_cut_from_edgeset(g, v.support());
            REQUIRE(back.has_value());
            CHECK(cut_vector(g, *back) == v);
        }
    }
}

TEST_CASE("is_even_subgraph") {
    Multigraph k3 = complete(3);
    CHECK(is_even_subgraph(k3, {0, 1, 2}));
    CHECK(!is_even_subgraph(k3, {0}));
    CHECK(is_even_subgraph(k3, {}));
}

TEST_CASE("euler_cycle_decomposition peels circuits") {
    Multigraph k3 = complete(3);
    auto circuits = euler_cycle_decomposition(k3, {0, 1, 2});
    REQUIRE(circuits.size() == 1);
    CHECK(circuits[0].size() == 3);

    Multigraph bt = bowtie();
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto two = euler_cycle_decomposition(bt, all);
    REQUIRE(two.size() == 2);
    std::vector<int> merged;
    for (const auto& c : two) {
        CHECK(c.size() == 3);
        merged.insert(merged.end(), c.begin(), c.end());
    }
    std::sort(merged.begin(), merged.end());
    CHECK(merged == all); // edge-disjoint union is the input

    CHECK(euler_cycle_decomposition(k3, {}).empty());
    CHECK_THROWS_AS(euler_cycle_decomposition(k3, {0}), InvalidInputError);
}

TEST_CASE("euler decomposition properties on random even subgraphs") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 40; ++iter) {
        Multigraph g = testutil::random_connected(rng, 7, 6, true);
        // random element of the cycle space: xor of a random subset of basis cycles
        std::vector<char> in_f(static_cast<std::size_t>(g.edge_count()), 0);
        for (const auto& cyc : cycle_basis(g))
            if (rng() % 2)
                for (int e : cyc) in_f[static_cast<std::size_t>(e)] ^= 1;
        std::vector<int> f;
        for (int e = 0; e < g.edge_count(); ++e)
            if (in_f[static_cast<std::size_t>(e)]) f.push_back(e);
        REQUIRE(is_even_subgraph(g, f));
        auto circuits = euler_cycle_decomposition(g, f);
        std::vector<int> merged;
        for (const auto& c : circuits) {
            CHECK(is_even_subgraph(g, c));
            merged.insert(merged.end(), c.begin(), c.end());
        }
        std::sort(merged.begin(), merged.end());
        CHECK(merged == f);
    }
}

TEST_CASE("cycle_basis size m - n + c") {
    CHECK(cycle_basis(complete(3)).size() == 1);
    CHECK(cycle_basis(complete(3))[0] == std::vector<int>{0, 1, 2});
    CHECK(cycle_basis(path(4)).empty());
    CHECK(cycle_basis(complete(4)).size() == 3);
    Multigraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(cycle_basis(two_triangles).size() == 2);
}

TEST_CASE("is_bipartite") {
    auto c4 = is_bipartite(cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->side_a() == std::vector<int>{1, 3});
    CHECK(crossing_edges(cycle(4), *c4).size() == 4);

    CHECK(!is_bipartite(complete(3)).has_value());

    auto edgeless = is_bipartite(Multigraph(4, {}));
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->is_empty());

    // disconnected: crossing set must still be every edge
    Multigraph disc(5, {{0, 1}, {2, 3}, {3, 4}});
    auto cut = is_bipartite(disc);
    REQUIRE(cut.has_value());
    CHECK(crossing_edges(disc, *cut).size() == 3);
}

TEST_CASE("connected_components") {
    Multigraph g(5, {{0, 1}, {3, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4});
}

TEST_CASE("four_color examples") {
    Coloring4 k4 = four_color(complete(4));
    std::set<int> used(k4.color.begin(), k4.color.end());
    CHECK(used.size() == 4);

    Coloring4 c5 = four_color(cycle(5));
    CHECK(is_proper_coloring(cycle(5), c5));
    CHECK(*std::max_element(c5.color.begin(), c5.color.end()) <= 3);

    Multigraph g66 = testutil::grid(6, 6);
    Coloring4 grid_col = four_color(g66);
    CHECK(is_proper_coloring(g66, grid_col));
    CHECK(*std::max_element(grid_col.color.begin(), grid_col.color.end()) <= 2);

    CHECK_THROWS_AS(four_color(complete(5)), InvalidInputError);
}

TEST_CASE("four_color is deterministic") {
    std::mt19937_64 rng(5150);
    Multigraph g = testutil::random_planar(rng, 12, 70);
    Coloring4 a = four_color(g);
    Coloring4 b = four_color(g);
    CHECK(a.color == b.color);
}
