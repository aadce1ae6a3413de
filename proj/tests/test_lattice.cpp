#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "cutpoly/generate.hpp"
#include "cutpoly/lattice.hpp"
#include "cutpoly/simplex.hpp"
#include "util.hpp"

using namespace cutpoly;
using testutil::complete;
using testutil::cycle;
using testutil::path;

namespace {

Matrix int_matrix(const std::vector<std::vector<long long>>& rows) {
    Matrix m;
    for (const auto& r : rows) {
        std::vector<Int> row(r.begin(), r.end());
        m.push_back(std::move(row));
    }
    return m;
}

/// Independent convex membership: by Caratheodory, target lies in the hull
/// iff some affinely independent subset of at most dim+1 generators carries
/// it with nonnegative coefficients. Exact Gaussian elimination per subset.
bool conv_member_caratheodory(const std::vector<EdgeVector>& gens,
                              const std::vector<Rat>& target) {
    const std::size_t d = target.size();
    const std::size_t max_size = d + 1;
    std::vector<std::size_t> subset;

    std::function<bool()> solve_subset = [&]() {
        const std::size_t s = subset.size();
        // rows: d coordinate equations plus the affine one
        std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(s + 1, Rat(0)));
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t i = 0; i < d; ++i) a[i][j] = Rat(gens[subset[j]][i]);
            a[d][j] = 1;
        }
        for (std::size_t i = 0; i < d; ++i) a[i][s] = target[i];
        a[d][s] = 1;

        std::vector<std::size_t> pivot_of_col(s, d + 1);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < s && rank < d + 1; ++col) {
            std::size_t piv = d + 1;
            for (std::size_t i = rank; i < d + 1; ++i)
                if (a[i][col] != 0) { piv = i; break; }
            if (piv == d + 1) return false; // dependent subset: skip
            std::swap(a[piv], a[rank]);
            Rat p = a[rank][col];
            for (auto& v : a[rank]) v /= p;
            for (std::size_t i = 0; i < d + 1; ++i) {
                if (i == rank || a[i][col] == 0) continue;
                Rat f = a[i][col];
                for (std::size_t j = 0; j <= s; ++j) a[i][j] -= f * a[rank][j];
            }
            pivot_of_col[col] = rank;
            ++rank;
        }
        for (std::size_t i = rank; i < d + 1; ++i)
            if (a[i][s] != 0) return false; // inconsistent
        for (std::size_t col = 0; col < s; ++col)
            if (a[pivot_of_col[col]][s] < 0) return false;
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (!subset.empty() && solve_subset()) return true;
        if (subset.size() == max_size) return false;
        for (std::size_t i = from; i < gens.size(); ++i) {
            subset.push_back(i);
            if (rec(i + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

TEST_CASE("hnf examples") {
    Matrix id = int_matrix({{1, 0}, {0, 1}});
    CHECK(hnf(id) == id);

    Matrix cuts = int_matrix({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    Matrix h = hnf(cuts);
    CHECK(h == int_matrix({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}));

    // the spec's sample basis spans the same lattice
    Matrix alt = int_matrix({{1, 1, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(hnf(alt) == h);

    CHECK(hnf(int_matrix({{0, 0}, {0, 0}})).empty());
}

TEST_CASE("hnf_solve recognizes lattice membership") {
    Matrix basis = hnf(int_matrix({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(hnf_solve(basis, {Int(1), Int(1), Int(0)}).has_value());
    CHECK(hnf_solve(basis, {Int(2), Int(2), Int(2)}).has_value());
    CHECK(!hnf_solve(basis, {Int(1), Int(1), Int(1)}).has_value());
    CHECK(!hnf_solve(basis, {Int(0), Int(0), Int(1)}).has_value());

    auto coeffs = hnf_solve(basis, {Int(3), Int(1), Int(2)});
    REQUIRE(coeffs.has_value());
    // reconstruct
    std::vector<Int> back(3, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) back[j] += (*coeffs)[i] * basis[i][j];
    CHECK(back == std::vector<Int>{Int(3), Int(1), Int(2)});
}

TEST_CASE("lattice_description of small graphs") {
    SUBCASE("triangle: one parity constraint, index 2") {
        LatticeDescription ld = lattice_description(complete(3));
        REQUIRE(ld.parity_constraints.size() == 1);
        CHECK(ld.parity_constraints[0] == std::vector<int>{0, 1, 2});
        REQUIRE(ld.hnf_basis.size() == 3);
        Int index = 1;
        for (std::size_t i = 0; i < 3; ++i) index *= ld.hnf_basis[i][i];
        CHECK(index == 2);
    }
    SUBCASE("tree: no constraints, full integer lattice") {
        LatticeDescription ld = lattice_description(path(3));
        CHECK(ld.parity_constraints.empty());
        CHECK(ld.hnf_basis == int_matrix({{1, 0}, {0, 1}}));
    }
    SUBCASE("C4: one constraint, index 2") {
        LatticeDescription ld = lattice_description(cycle(4));
        REQUIRE(ld.parity_constraints.size() == 1);
        CHECK(ld.parity_constraints[0].size() == 4);
        REQUIRE(ld.hnf_basis.size() == 4);
        Int index = 1;
        for (std::size_t i = 0; i < 4; ++i) index *= ld.hnf_basis[i][i];
        CHECK(index == 2);
    }
}

TEST_CASE("parallel edges force equality, not just even sums") {
    // dipole: cuts are (0,0) and (1,1), so the lattice is the diagonal
    Multigraph dipole(2, {{0, 1}, {0, 1}});
    LatticeDescription ld = lattice_description(dipole);
    CHECK(in_cut_lattice(ld, EdgeVector::from_ints({1, 1})));
    CHECK(in_cut_lattice(ld, EdgeVector::from_ints({3, 3})));
    CHECK(!in_cut_lattice(ld, EdgeVector::from_ints({2, 0})));
    CHECK(!in_cut_lattice_hnf(ld, EdgeVector::from_ints({2, 0})));
    CHECK(!in_cut_lattice(ld, EdgeVector::from_ints({1, 0})));
}

TEST_CASE("in_cut_lattice triangle examples") {
    LatticeDescription ld = lattice_description(complete(3));
    CHECK(!in_cut_lattice(ld, EdgeVector::from_ints({1, 1, 1})));
    CHECK(in_cut_lattice(ld, EdgeVector::from_ints({1, 0, 1})));
    CHECK(in_cut_lattice(ld, EdgeVector::from_ints({2, 2, 2})));
    CHECK(in_cut_lattice_hnf(ld, EdgeVector::from_ints({1, 0, 1})));
    CHECK(!in_cut_lattice_hnf(ld, EdgeVector::from_ints({1, 1, 1})));
}

TEST_CASE("parity rule agrees with HNF solvability exhaustively") {
    for (int n = 2; n <= 5; ++n) {
        for (const Multigraph& g : connected_graph_classes(n)) {
            if (g.edge_count() > 8) continue;
            LatticeDescription ld = lattice_description(g);
            const int m = g.edge_count();
            std::vector<long long> v(static_cast<std::size_t>(m), 0);
            while (true) {
                EdgeVector x = EdgeVector::from_ints(v);
                CHECK(in_cut_lattice(ld, x) == in_cut_lattice_hnf(ld, x));
                int d = 0;
                while (d < m && ++v[static_cast<std::size_t>(d)] == 4) v[static_cast<std::size_t>(d++)] = 0;
                if (d == m) break;
                if (m == 0) break;
            }
            if (m == 0) break;
        }
    }
}

TEST_CASE("parity rule agrees with HNF on random multigraphs") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 4 + static_cast<int>(rng() % 4);
        Multigraph g = testutil::random_connected(rng, n, 1 + static_cast<int>(rng() % 8), true);
        if (g.edge_count() > 15) continue;
        LatticeDescription ld = lattice_description(g);
        for (int s = 0; s < 400; ++s) {
            std::vector<long long> v(static_cast<std::size_t>(g.edge_count()));
            for (auto& e : v) e = static_cast<long long>(rng() % 4);
            EdgeVector x = EdgeVector::from_ints(v);
            CHECK(in_cut_lattice(ld, x) == in_cut_lattice_hnf(ld, x));
        }
    }
}

TEST_CASE("lp_member_convex triangle examples") {
    Multigraph k3 = complete(3);
    std::vector<EdgeVector> gens;
    for (const Cut& c : enumerate_cuts(k3)) gens.push_back(cut_vector(k3, c));

    std::vector<Rat> third{Rat(2, 3), Rat(2, 3), Rat(2, 3)};
    CHECK(lp_member_convex(gens, third));
    std::vector<Rat> ones{Rat(1), Rat(1), Rat(1)};
    CHECK(!lp_member_convex(gens, ones));
    CHECK(lp_member_convex(gens, scaled(gens[3], 1)));
}

TEST_CASE("lp_member_convex agrees with the Caratheodory oracle") {
    std::mt19937_64 rng(5577);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t dim = 2 + rng() % 3;      // <= 4
        const std::size_t count = 2 + rng() % 7;    // <= 8
        std::vector<EdgeVector> gens;
        for (std::size_t i = 0; i < count; ++i) {
            EdgeVector g(dim);
            for (std::size_t j = 0; j < dim; ++j) g[j] = static_cast<long long>(rng() % 5) - 1;
            gens.push_back(std::move(g));
        }
        for (int t = 0; t < 6; ++t) {
            std::vector<Rat> target(dim);
            for (std::size_t j = 0; j < dim; ++j)
                target[j] = Rat(static_cast<long long>(rng() % 9) - 2,
                                1 + static_cast<long long>(rng() % 3));
            CHECK(lp_member_convex(gens, target) == conv_member_caratheodory(gens, target));
        }
    }
}

TEST_CASE("lp_member_cone basics") {
    std::vector<EdgeVector> gens{EdgeVector::from_ints({1, 0}), EdgeVector::from_ints({1, 1})};
    CHECK(lp_member_cone(gens, {Rat(3), Rat(1)}));
    CHECK(lp_member_cone(gens, {Rat(0), Rat(0)}));
    CHECK(!lp_member_cone(gens, {Rat(0), Rat(1)}));
    CHECK(!lp_member_cone(gens, {Rat(-1), Rat(0)}));
}

TEST_CASE("in_dilation triangle examples") {
    Multigraph k3 = complete(3);
    LatticeDescription ld = lattice_description(k3);
    CHECK(in_dilation(k3, ld, {EdgeVector::from_ints({2, 2, 2}), 3}));
    CHECK(!in_dilation(k3, ld, {EdgeVector::from_ints({2, 2, 2}), 2}));
    CHECK(in_dilation(k3, ld, {EdgeVector::from_ints({3, 3, 0}), 3}));
}

TEST_CASE("membership scales with the dilation") {
    for (const Multigraph& g : {complete(3), cycle(4), path(4)}) {
        LatticeDescription ld = lattice_description(g);
        const int m = g.edge_count();
        std::vector<long long> v(static_cast<std::size_t>(m), 0);
        while (true) {
            EdgeVector x = EdgeVector::from_ints(v);
            for (int k = 1; k <= 2; ++k) {
                if (in_dilation(g, ld, {x, k})) {
                    CHECK(in_dilation(g, ld, {Int(2) * x, 2 * k}));
                    CHECK(in_dilation(g, ld, {Int(3) * x, 3 * k}));
                }
            }
            int d = 0;
            while (d < m && ++v[static_cast<std::size_t>(d)] == 3) v[static_cast<std::size_t>(d++)] = 0;
            if (d == m) break;
        }
    }
}
