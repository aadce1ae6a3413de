#include "cutpoly/simplex.hpp"

#include <cassert>
#include <cstddef>

namespace cutpoly {

namespace {

/// Phase-I feasibility of A x = b, x >= 0, decided exactly. Artificial
/// variables start in the basis; Bland's least-index rule guarantees
/// termination.
bool phase1_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t n = rows == 0 ? 0 : a[0].size();
    if (rows == 0) return true;

    for (std::size_t i = 0; i < rows; ++i)
        if (b[i] < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }

    const std::size_t total = n + rows; // original + artificial
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    // reduced costs for min(sum of artificials); artificial columns start at 0
    std::vector<Rat> red(total, Rat(0));
    Rat objective(0);
    for (std::size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        red[j] = -s;
    }
    for (std::size_t i = 0; i < rows; ++i) objective += b[i];

#ifndef NDEBUG
    // number of bases bounds the pivot count under Bland's rule
    Int bound = 1;
    for (std::size_t i = 0; i < rows; ++i) bound *= Int(total - i);
    long long pivots = 0;
#endif

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (red[j] < 0) { enter = j; break; }
        if (enter == total) break;

        std::size_t leave = rows;
        Rat best_ratio(0);
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = b[i] / t[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows)
            return false; // unbounded phase-I cannot happen; defensive exit

        Rat piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        b[leave] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
            b[i] -= f * b[leave];
        }
        Rat f = red[enter];
        if (f != 0) {
            for (std::size_t j = 0; j < total; ++j) red[j] -= f * t[leave][j];
            objective += f * b[leave];
        }
        basis[leave] = enter;

#ifndef NDEBUG
        ++pivots;
        assert(Int(pivots) <= bound && "simplex exceeded its proven pivot bound");
#endif
    }
    return objective == 0;
}

std::vector<std::vector<Rat>> generator_rows(const std::vector<EdgeVector>& gens,
                                             std::size_t dim, bool convexity_row) {
    std::vector<std::vector<Rat>> a(dim + (convexity_row ? 1 : 0),
                                    std::vector<Rat>(gens.size(), Rat(0)));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].size() != dim)
            throw InvalidInputError("generator dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = Rat(gens[j][i]);
        if (convexity_row) a[dim][j] = 1;
    }
    return a;
}

} // namespace

bool lp_member_convex(const std::vector<EdgeVector>& generators,
                      const std::vector<Rat>& target) {
    if (generators.empty()) throw InvalidInputError("lp_member_convex: no generators");
    const std::size_t dim = target.size();
    auto a = generator_rows(generators, dim, /*convexity_row=*/true);
    std::vector<Rat> b = target;
    b.push_back(Rat(1));
    return phase1_feasible(std::move(a), std::move(b));
}

bool lp_member_cone(const std::vector<EdgeVector>& generators,
                    const std::vector<Rat>& target) {
    if (generators.empty()) throw InvalidInputError("lp_member_cone: no generators");
    const std::size_t dim = target.size();
    auto a = generator_rows(generators, dim, /*convexity_row=*/false);
    return phase1_feasible(std::move(a), target);
}

std::vector<Rat> scaled(const EdgeVector& x, const Int& denom) {
    if (denom == 0) throw InvalidInputError("scaled: zero denominator");
    std::vector<Rat> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = Rat(x[i], denom);
    return r;
}

} // namespace cutpoly
