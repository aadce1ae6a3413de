#include "cutpoly/lattice.hpp"

#include <algorithm>
#include <map>

#include "cutpoly/simplex.hpp"

namespace cutpoly {

namespace {

// floor division with positive divisor
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

int pivot_column(const std::vector<Int>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<int>(j);
    return -1;
}

void sub_scaled(std::vector<Int>& a, const Int& q, const std::vector<Int>& b) {
    if (q == 0) return;
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}

/// Reduce x against an HNF basis; returns the coefficients used. x becomes
/// the residue (zero iff x was in the row lattice).
std::vector<Int> reduce_against(const Matrix& basis, std::vector<Int>& x) {
    std::vector<Int> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& row : basis) {
        int p = pivot_column(row);
        Int q = floor_div(x[static_cast<std::size_t>(p)], row[static_cast<std::size_t>(p)]);
        sub_scaled(x, q, row);
        coeffs.push_back(q);
    }
    return coeffs;
}

} // namespace

Matrix hnf(Matrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw InvalidInputError("hnf: ragged matrix");

    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        // gcd elimination below position r
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    abs(rows[i][col]) < abs(rows[best][col]) ||
                    (abs(rows[i][col]) == abs(rows[best][col]) && i < best))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            if (rows[r][col] < 0)
                for (auto& v : rows[r]) v = -v;
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[r][col];
                sub_scaled(rows[i], q, rows[r]);
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] == 0) continue;
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][col], rows[r][col]);
            sub_scaled(rows[i], q, rows[r]);
        }
        ++r;
    }

    for (std::size_t i = r; i < rows.size(); ++i)
        for (const Int& v : rows[i])
            if (v != 0) throw InternalError("hnf left a nonzero row below the profile");
    rows.resize(r);
    return rows;
}

std::optional<std::vector<Int>> hnf_solve(const Matrix& basis, const std::vector<Int>& x) {
    if (!basis.empty() && basis[0].size() != x.size())
        throw InvalidInputError("hnf_solve: dimension mismatch");
    std::vector<Int> residue = x;
    std::vector<Int> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& row : basis) {
        int p = pivot_column(row);
        const Int& piv = row[static_cast<std::size_t>(p)];
        if (residue[static_cast<std::size_t>(p)] % piv != 0) return std::nullopt;
        Int q = residue[static_cast<std::size_t>(p)] / piv;
        sub_scaled(residue, q, row);
        coeffs.push_back(std::move(q));
    }
    for (const Int& v : residue)
        if (v != 0) return std::nullopt;
    return coeffs;
}

LatticeDescription lattice_description(const Multigraph& g, const Limits& limits) {
    LatticeDescription ld;
    ld.edge_count = g.edge_count();
    ld.parity_constraints = cycle_basis(g);
    {
        std::map<std::pair<int, int>, int> rep;
        for (const Edge& e : g.edges()) {
            auto key = std::minmax(e.u, e.v);
            auto [it, fresh] = rep.emplace(std::make_pair(key.first, key.second), e.id);
            if (!fresh) ld.parallel_pairs.emplace_back(e.id, it->second);
        }
    }

    const int n = g.vertex_count();
    if (n < 1) throw InvalidInputError("lattice_description needs at least one vertex");
    if (n > limits.max_cut_vertices)
        throw ResourceLimitError("cut enumeration limited to " +
                                 std::to_string(limits.max_cut_vertices) + " vertices");

    // Insert cut vectors one at a time, keeping the basis in HNF; most rows
    // reduce to zero once the basis saturates.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        Cut c = Cut::from_index(n, mask);
        std::vector<Int> row = cut_vector(g, c).entries;
        reduce_against(ld.hnf_basis, row);
        bool zero = std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; });
        if (!zero) {
            ld.hnf_basis.push_back(std::move(row));
            ld.hnf_basis = hnf(std::move(ld.hnf_basis));
        }
    }
    return ld;
}

bool in_cut_lattice(const LatticeDescription& ld, const EdgeVector& x) {
    if (x.size() != static_cast<std::size_t>(ld.edge_count))
        throw InvalidInputError("in_cut_lattice: dimension mismatch");
    for (auto [e, r] : ld.parallel_pairs)
        if (x[static_cast<std::size_t>(e)] != x[static_cast<std::size_t>(r)]) return false;
    for (const auto& cyc : ld.parity_constraints) {
        Int sum = 0;
        for (int e : cyc) sum += x[static_cast<std::size_t>(e)];
        if (sum % 2 != 0) return false;
    }
    return true;
}

bool in_cut_lattice_hnf(const LatticeDescription& ld, const EdgeVector& x) {
    if (x.size() != static_cast<std::size_t>(ld.edge_count))
        throw InvalidInputError("in_cut_lattice_hnf: dimension mismatch");
    return hnf_solve(ld.hnf_basis, x.entries).has_value();
}

bool in_dilation(const Multigraph& g, const LatticeDescription& ld,
                 const DilatedPoint& p, const Limits& limits) {
    if (p.level < 1) throw InvalidInputError("dilation level must be >= 1");
    if (p.vector.size() != static_cast<std::size_t>(g.edge_count()))
        throw InvalidInputError("point length does not match edge count");
    if (!in_cut_lattice(ld, p.vector)) return false;
    std::vector<EdgeVector> gens;
    for (const Cut& c : enumerate_cuts(g, limits)) gens.push_back(cut_vector(g, c));
    return lp_member_convex(gens, scaled(p.vector, p.level));
}

} // namespace cutpoly
