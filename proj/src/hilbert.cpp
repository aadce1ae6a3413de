#include <algorithm>
#include <map>
#include <set>

#include "cutpoly/audit.hpp"
#include "cutpoly/simplex.hpp"

namespace cutpoly {

namespace {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

Int rat_floor(const Rat& q) {
    Int num = numerator(q), den = denominator(q); // den > 0 for cpp_rational
    Int f = num / den;
    if (num % den != 0 && num < 0) --f;
    return f;
}

/// Inverse of a square rational matrix, plus its determinant.
/// Throws InternalError on singular input.
std::pair<RatMat, Rat> invert(RatMat a) {
    const std::size_t r = a.size();
    RatMat inv(r, RatVec(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) inv[i][i] = 1;
    Rat det(1);
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = r;
        for (std::size_t i = col; i < r; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv == r) throw InternalError("singular matrix in cone arithmetic");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        Rat p = a[col][col];
        det *= p;
        for (std::size_t j = 0; j < r; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < r; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return {inv, det};
}

RatVec mat_vec(const RatMat& a, const IntVec& v) {
    RatVec out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) out[i] += a[i][j] * Rat(v[j]);
    return out;
}

/// Kernel direction of an (r-1) x r system: the facet normal, scaled to a
/// primitive integer vector.
IntVec facet_normal(const std::vector<const IntVec*>& span, std::size_t r) {
    RatMat a;
    for (const IntVec* row : span) {
        RatVec rr(r);
        for (std::size_t j = 0; j < r; ++j) rr[j] = Rat((*row)[j]);
        a.push_back(std::move(rr));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t lead = 0;
    for (std::size_t row = 0; row < a.size() && lead < r; ++lead) {
        std::size_t piv = a.size();
        for (std::size_t i = row; i < a.size(); ++i)
            if (a[i][lead] != 0) { piv = i; break; }
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rat p = a[row][lead];
        for (std::size_t j = 0; j < r; ++j) a[row][j] /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][lead] == 0) continue;
            Rat f = a[i][lead];
            for (std::size_t j = 0; j < r; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(lead);
        ++row;
    }
    if (pivot_col.size() != r - 1)
        throw InternalError("facet span is rank deficient");

    std::vector<char> is_pivot(r, 0);
    for (std::size_t c : pivot_col) is_pivot[c] = 1;
    std::size_t free_col = r;
    for (std::size_t j = 0; j < r; ++j)
        if (!is_pivot[j]) { free_col = j; break; }

    RatVec n(r, Rat(0));
    n[free_col] = 1;
    for (std::size_t row = 0; row < pivot_col.size(); ++row)
        n[pivot_col[row]] = -a[row][free_col];

    Int lcm_den = 1;
    for (const Rat& q : n) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
    IntVec out(r);
    for (std::size_t j = 0; j < r; ++j)
        out[j] = numerator(n[j]) * (lcm_den / denominator(n[j]));
    Int g = 0;
    for (const Int& v : out) g = boost::multiprecision::gcd(g, v);
    if (g > 1)
        for (Int& v : out) v /= g;
    return out;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// A simplicial cone of the triangulation: generator indices plus the
/// cached inverse of the generator column matrix.
struct SimplicialCone {
    std::vector<int> gens; // ascending generator indices
    RatMat inverse;        // of the r x r column matrix
    Int det_abs;
};

struct Triangulation {
    std::size_t r = 0;
    const std::vector<IntVec>* coords = nullptr;
    std::vector<SimplicialCone> cones;

    RatMat columns(const std::vector<int>& idx) const {
        RatMat w(r, RatVec(idx.size(), Rat(0)));
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < r; ++i)
                w[i][j] = Rat((*coords)[static_cast<std::size_t>(idx[j])][i]);
        return w;
    }

    void add_cone(std::vector<int> idx) {
        auto [inv, det] = invert(columns(idx));
        Int d = numerator(det) < 0 ? -numerator(det) : numerator(det);
        if (denominator(det) != 1) throw InternalError("integer matrix with fractional determinant");
        cones.push_back(SimplicialCone{std::move(idx), std::move(inv), std::move(d)});
    }

    bool contains(const IntVec& v) const {
        for (const auto& cone : cones) {
            RatVec lambda = mat_vec(cone.inverse, v);
            bool inside = true;
            for (const Rat& l : lambda)
                if (l < 0) { inside = false; break; }
            if (inside) return true;
        }
        return false;
    }

    // Place one generator: cone over every boundary facet visible from it.
    void place(int vi) {
        const IntVec& v = (*coords)[static_cast<std::size_t>(vi)];
        if (contains(v)) return;

        std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> facets;
        for (std::size_t ci = 0; ci < cones.size(); ++ci)
            for (std::size_t drop = 0; drop < cones[ci].gens.size(); ++drop) {
                std::vector<int> key = cones[ci].gens;
                int missing = key[drop];
                key.erase(key.begin() + static_cast<std::ptrdiff_t>(drop));
                facets[key].emplace_back(ci, missing);
            }

        std::vector<std::vector<int>> fresh;
        for (const auto& [key, owners] : facets) {
            if (owners.size() != 1) continue; // interior facet
            std::vector<const IntVec*> span;
            for (int gi : key) span.push_back(&(*coords)[static_cast<std::size_t>(gi)]);
            IntVec normal = facet_normal(span, r);
            Int side = dot(normal, (*coords)[static_cast<std::size_t>(owners[0].second)]);
            if (side == 0) throw InternalError("degenerate simplicial cone facet");
            if (side > 0)
                for (Int& x : normal) x = -x; // orient outward
            if (dot(normal, v) > 0) {
                std::vector<int> idx = key;
                idx.insert(std::lower_bound(idx.begin(), idx.end(), vi), vi);
                fresh.push_back(std::move(idx));
            }
        }
        if (fresh.empty())
            throw InternalError("generator outside the cone sees no boundary facet");
        for (auto& idx : fresh) add_cone(std::move(idx));
    }
};

/// Diagonalize W over the integers, W = U * S * V with U, V unimodular,
/// returning the diagonal of S (positive) and U.
std::pair<IntVec, std::vector<IntVec>> diagonalize_with_left(std::vector<IntVec> s) {
    const std::size_t r = s.size();
    std::vector<IntVec> u(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i) u[i][i] = 1;

    auto row_sub = [&](std::size_t i, const Int& q, std::size_t d) {
        for (std::size_t j = 0; j < r; ++j) s[i][j] -= q * s[d][j];
        for (std::size_t j = 0; j < r; ++j) u[j][d] += q * u[j][i];
    };
    auto col_sub = [&](std::size_t j, const Int& q, std::size_t d) {
        for (std::size_t i = 0; i < r; ++i) s[i][j] -= q * s[i][d];
    };

    for (std::size_t d = 0; d < r; ++d) {
        while (true) {
            std::size_t pi = r, pj = r;
            for (std::size_t i = d; i < r; ++i)
                for (std::size_t j = d; j < r; ++j)
                    if (s[i][j] != 0 &&
                        (pi == r || abs(s[i][j]) < abs(s[pi][pj])))
                        { pi = i; pj = j; }
            if (pi == r) throw InternalError("singular matrix in parallelepiped enumeration");
            if (pi != d) {
                std::swap(s[pi], s[d]);
                for (std::size_t j = 0; j < r; ++j) std::swap(u[j][pi], u[j][d]);
            }
            if (pj != d)
                for (std::size_t i = 0; i < r; ++i) std::swap(s[i][pj], s[i][d]);
            if (s[d][d] < 0) {
                for (std::size_t j = 0; j < r; ++j) s[d][j] = -s[d][j];
                for (std::size_t j = 0; j < r; ++j) u[j][d] = -u[j][d];
            }
            bool clean = true;
            for (std::size_t i = d + 1; i < r; ++i)
                if (s[i][d] != 0) {
                    row_sub(i, s[i][d] / s[d][d], d);
                    if (s[i][d] != 0) clean = false;
                }
            for (std::size_t j = d + 1; j < r; ++j)
                if (s[d][j] != 0) {
                    col_sub(j, s[d][j] / s[d][d], d);
                    if (s[d][j] != 0) clean = false;
                }
            if (clean) break;
        }
    }
    IntVec diag(r);
    for (std::size_t d = 0; d < r; ++d) diag[d] = s[d][d];
    return {diag, u};
}

/// Lattice points of the half-open parallelepiped spanned by the cone's
/// generators: one representative per coset of the generator sublattice.
std::vector<IntVec> parallelepiped_points(const Triangulation& tri,
                                          const SimplicialCone& cone,
                                          const Limits& /*limits*/) {
    const std::size_t r = tri.r;
    if (cone.det_abs == 1) return {};
    if (cone.det_abs > (Int(1) << 22))
        throw ResourceLimitError("fundamental parallelepiped too large");

    std::vector<IntVec> w(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            w[i][j] = (*tri.coords)[static_cast<std::size_t>(cone.gens[j])][i];
    auto [diag, u] = diagonalize_with_left(w);

    std::set<IntVec> points;
    IntVec counter(r, 0);
    while (true) {
        IntVec z(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                z[i] += u[i][j] * counter[j];
        // reduce into the half-open box: z -= W * floor(W^inv z)
        RatVec t = mat_vec(cone.inverse, z);
        for (std::size_t j = 0; j < r; ++j) {
            Int f = rat_floor(t[j]);
            if (f != 0)
                for (std::size_t i = 0; i < r; ++i)
                    z[i] -= f * w[i][j];
        }
        bool zero = std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
        if (!zero) points.insert(std::move(z));

        std::size_t d = 0;
        while (d < r && ++counter[d] == diag[d]) counter[d++] = 0;
        if (d == r) break;
    }
    if (Int(points.size()) + 1 != cone.det_abs)
        throw InternalError("parallelepiped point count does not match the determinant");
    return {points.begin(), points.end()};
}

} // namespace

HilbertBasisReport hilbert_basis(const std::vector<EdgeVector>& generators,
                                 const LatticeDescription& ld, const Limits& limits) {
    HilbertBasisReport report;

    std::set<EdgeVector> gen_set;
    std::vector<EdgeVector> gens;
    for (const EdgeVector& g : generators) {
        if (g.size() != static_cast<std::size_t>(ld.edge_count))
            throw InvalidInputError("hilbert_basis: generator dimension mismatch");
        if (g.is_zero()) continue;
        if (gen_set.insert(g).second) gens.push_back(g);
    }
    if (gens.empty()) return report;

    if (static_cast<int>(gens.size()) > limits.max_hilbert_generators)
        throw ResourceLimitError("hilbert_basis limited to " +
                                 std::to_string(limits.max_hilbert_generators) + " generators");
    const std::size_t r = ld.hnf_basis.size();
    if (static_cast<int>(r) > limits.max_hilbert_dim)
        throw ResourceLimitError("hilbert_basis limited to lattice rank " +
                                 std::to_string(limits.max_hilbert_dim));

    // Work in lattice coordinates: the cone is full-dimensional there, which
    // is exactly the restriction to the linear span of the generators.
    std::vector<IntVec> coords;
    for (const EdgeVector& g : gens) {
        auto c = hnf_solve(ld.hnf_basis, g.entries);
        if (!c) throw InvalidInputError("hilbert_basis: generator outside the lattice");
        coords.push_back(std::move(*c));
    }

    Triangulation tri;
    tri.r = r;
    tri.coords = &coords;

    // lexicographically first independent subset seeds the triangulation
    std::vector<int> seed;
    {
        RatMat rows;
        for (std::size_t i = 0; i < coords.size() && seed.size() < r; ++i) {
            RatMat trial = rows;
            RatVec row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = Rat(coords[i][j]);
            trial.push_back(row);
            // rank via elimination
            RatMat e = trial;
            std::size_t rank = 0;
            for (std::size_t col = 0; col < r && rank < e.size(); ++col) {
                std::size_t piv = e.size();
                for (std::size_t k = rank; k < e.size(); ++k)
                    if (e[k][col] != 0) { piv = k; break; }
                if (piv == e.size()) continue;
                std::swap(e[piv], e[rank]);
                for (std::size_t k = 0; k < e.size(); ++k) {
                    if (k == rank || e[k][col] == 0) continue;
                    Rat f = e[k][col] / e[rank][col];
                    for (std::size_t j = 0; j < r; ++j) e[k][j] -= f * e[rank][j];
                }
                ++rank;
            }
            if (rank == trial.size()) {
                rows = std::move(trial);
                seed.push_back(static_cast<int>(i));
            }
        }
    }
    if (seed.size() != r)
        throw InvalidInputError("hilbert_basis: generators do not span the lattice");

    tri.add_cone(seed);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (std::find(seed.begin(), seed.end(), static_cast<int>(i)) == seed.end())
            tri.place(static_cast<int>(i));
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!tri.contains(coords[i]))
            throw InternalError("triangulation does not cover its generators");

    // candidate monoid generators: the generators plus every parallelepiped
    // point of every simplicial cone
    std::set<EdgeVector> candidates(gens.begin(), gens.end());
    for (const auto& cone : tri.cones)
        for (const IntVec& z : parallelepiped_points(tri, cone, limits)) {
            EdgeVector x(static_cast<std::size_t>(ld.edge_count));
            for (std::size_t i = 0; i < r; ++i)
                if (z[i] != 0)
                    for (std::size_t j = 0; j < x.size(); ++j)
                        x[j] += z[i] * ld.hnf_basis[i][j];
            candidates.insert(std::move(x));
        }

    bool nonneg_cone = true;
    for (const EdgeVector& g : gens)
        for (const Int& v : g.entries)
            if (v < 0) { nonneg_cone = false; break; }

    // c is reducible iff c - s lies in the monoid for some nonzero candidate
    // s != c; candidates generate the monoid, so this search is complete
    std::vector<EdgeVector> ordered(candidates.begin(), candidates.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const EdgeVector& a, const EdgeVector& b) {
                         return gen_set.count(a) > gen_set.count(b);
                     });
    for (const EdgeVector& c : candidates) {
        bool reducible = false;
        for (const EdgeVector& s : ordered) {
            if (s == c) continue;
            EdgeVector rest = c - s;
            if (rest.is_zero()) continue;
            if (nonneg_cone) {
                bool box = true;
                for (const Int& v : rest.entries)
                    if (v < 0) { box = false; break; }
                if (!box) continue;
            }
            if (candidates.count(rest) || lp_member_cone(gens, scaled(rest, 1))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) report.basis.push_back(c);
    }
    std::sort(report.basis.begin(), report.basis.end());

    for (const EdgeVector& b : report.basis)
        if (!gen_set.count(b)) report.offending.push_back(b);
    report.is_subset_of_cuts = report.offending.empty();
    return report;
}

} // namespace cutpoly
