#include "cutpoly/audit.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "cutpoly/simplex.hpp"
#include "cutpoly/switching.hpp"

namespace cutpoly {

namespace {

struct ParityTracker {
    // constraints containing each edge, and constraints closed by each edge
    std::vector<std::vector<int>> touching;
    std::vector<std::vector<int>> closing;
    std::vector<int> parity;

    ParityTracker(const LatticeDescription& ld, int m)
        : touching(static_cast<std::size_t>(m)),
          closing(static_cast<std::size_t>(m)),
          parity(ld.parity_constraints.size(), 0) {
        for (std::size_t c = 0; c < ld.parity_constraints.size(); ++c) {
            const auto& cyc = ld.parity_constraints[c];
            for (int e : cyc) touching[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
            closing[static_cast<std::size_t>(cyc.back())].push_back(static_cast<int>(c));
        }
    }

    void flip(int edge, int value) {
        if (value % 2 == 0) return;
        for (int c : touching[static_cast<std::size_t>(edge)]) parity[static_cast<std::size_t>(c)] ^= 1;
    }
    bool closes_even(int edge) const {
        for (int c : closing[static_cast<std::size_t>(edge)])
            if (parity[static_cast<std::size_t>(c)]) return false;
        return true;
    }
};

struct PointEnumerator {
    const Multigraph& g;
    const LatticeDescription& ld;
    int k;
    int m;
    std::vector<EdgeVector> gens;
    // valid-inequality pruning, keyed by the edge that completes the check:
    // triangle and pentagonal inequalities over representative edges, and
    // coordinate equality on parallel edges (every cut vector satisfies all)
    std::vector<std::vector<std::array<int, 3>>> triangles_closing;
    // pentagonal: sum of sign * x over the 10 pairs of a complete
    // 5-vertex subset is at most 0 for b = (1,1,1,-1,-1) patterns
    std::vector<std::vector<std::vector<std::pair<int, int>>>> pentagons_closing;
    std::vector<int> parallel_rep;

    PointEnumerator(const Multigraph& g_, const LatticeDescription& ld_, int k_,
                    const Limits& limits)
        : g(g_), ld(ld_), k(k_), m(g_.edge_count()),
          triangles_closing(static_cast<std::size_t>(m)),
          pentagons_closing(static_cast<std::size_t>(m)),
          parallel_rep(static_cast<std::size_t>(m), -1) {
        if (k < 1) throw InvalidInputError("dilation level must be >= 1");
        double nodes = 1;
        for (int i = 0; i < m; ++i) {
            nodes *= k + 1;
            if (nodes > static_cast<double>(limits.max_enum_nodes))
                throw ResourceLimitError("lattice point enumeration box too large");
        }
        for (const Cut& c : enumerate_cuts(g, limits)) gens.push_back(cut_vector(g, c));

        std::map<std::pair<int, int>, int> rep;
        for (const Edge& e : g.edges()) {
            auto key = std::minmax(e.u, e.v);
            auto [it, fresh] = rep.emplace(std::make_pair(key.first, key.second), e.id);
            if (!fresh) parallel_rep[static_cast<std::size_t>(e.id)] = it->second;
        }
        const int n = g.vertex_count();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto ab = rep.find({a, b});
                if (ab == rep.end()) continue;
                for (int c = b + 1; c < n; ++c) {
                    auto ac = rep.find({a, c});
                    auto bc = rep.find({b, c});
                    if (ac == rep.end() || bc == rep.end()) continue;
                    std::array<int, 3> tri{ab->second, ac->second, bc->second};
                    int last = std::max({tri[0], tri[1], tri[2]});
                    triangles_closing[static_cast<std::size_t>(last)].push_back(tri);
                }
            }

        // complete 5-subsets, one term list per (1,1,1,-1,-1) sign pattern
        std::vector<int> quint(5);
        std::function<void(int, int)> quintuples = [&](int from, int depth) {
            if (depth == 5) {
                std::vector<std::pair<int, int>> pair_edges;
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j) {
                        auto it = rep.find({quint[static_cast<std::size_t>(i)],
                                            quint[static_cast<std::size_t>(j)]});
                        if (it == rep.end()) return;
                        pair_edges.emplace_back(i * 8 + j, it->second);
                    }
                for (int neg1 = 0; neg1 < 5; ++neg1)
                    for (int neg2 = neg1 + 1; neg2 < 5; ++neg2) {
                        std::vector<std::pair<int, int>> terms;
                        int last = -1;
                        for (auto [code, eid] : pair_edges) {
                            int i = code / 8, j = code % 8;
                            int bi = (i == neg1 || i == neg2) ? -1 : 1;
                            int bj = (j == neg1 || j == neg2) ? -1 : 1;
                            terms.emplace_back(eid, bi * bj);
                            last = std::max(last, eid);
                        }
                        pentagons_closing[static_cast<std::size_t>(last)].push_back(std::move(terms));
                    }
                return;
            }
            for (int v = from; v < n; ++v) {
                quint[static_cast<std::size_t>(depth)] = v;
                quintuples(v + 1, depth + 1);
            }
        };
        if (n >= 5) quintuples(0, 0);
    }

    bool admissible(const std::vector<int>& x, int edge) const {
        int r = parallel_rep[static_cast<std::size_t>(edge)];
        if (r >= 0 && x[static_cast<std::size_t>(edge)] != x[static_cast<std::size_t>(r)]) return false;
        for (const auto& tri : triangles_closing[static_cast<std::size_t>(edge)]) {
            int a = x[static_cast<std::size_t>(tri[0])];
            int b = x[static_cast<std::size_t>(tri[1])];
            int c = x[static_cast<std::size_t>(tri[2])];
            if (a > b + c || b > a + c || c > a + b || a + b + c > 2 * k) return false;
        }
        for (const auto& terms : pentagons_closing[static_cast<std::size_t>(edge)]) {
            long long sum = 0;
            for (auto [eid, sign] : terms) sum += static_cast<long long>(sign) * x[static_cast<std::size_t>(eid)];
            if (sum > 0) return false;
        }
        return true;
    }

    // DFS below a fixed prefix; assumes tracker reflects the prefix.
    void run(std::vector<int>& x, ParityTracker& tracker, int depth,
             std::vector<EdgeVector>& out) const {
        if (depth == m) {
            EdgeVector v(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
            if (lp_member_convex(gens, scaled(v, k))) out.push_back(std::move(v));
            return;
        }
        for (int val = 0; val <= k; ++val) {
            x[static_cast<std::size_t>(depth)] = val;
            tracker.flip(depth, val);
            if (tracker.closes_even(depth) && admissible(x, depth))
                run(x, tracker, depth + 1, out);
            tracker.flip(depth, val);
        }
    }
};

} // namespace

std::vector<EdgeVector> enumerate_lattice_points(const Multigraph& g,
                                                 const LatticeDescription& ld, int k,
                                                 const Limits& limits) {
    if (ld.edge_count != g.edge_count())
        throw InvalidInputError("lattice description does not match graph");
    PointEnumerator en(g, ld, k, limits);
    const int m = g.edge_count();

    if (m == 0) return {EdgeVector(0)}; // the single point of a 0-dim polytope

    const int workers = std::max(1, limits.workers);
    const int prefix_len = (workers > 1 && m >= 2) ? 2 : (workers > 1 ? 1 : 0);
    if (prefix_len == 0) {
        std::vector<EdgeVector> out;
        std::vector<int> x(static_cast<std::size_t>(m), 0);
        ParityTracker tracker(ld, m);
        en.run(x, tracker, 0, out);
        return out;
    }

    // Split the box by value prefixes; tasks are merged in prefix order, so
    // output is identical for every worker count.
    long long task_count = 1;
    for (int i = 0; i < prefix_len; ++i) task_count *= k + 1;
    std::vector<std::vector<EdgeVector>> results(static_cast<std::size_t>(task_count));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (long long t = w; t < task_count; t += workers) {
                    std::vector<int> x(static_cast<std::size_t>(m), 0);
                    ParityTracker tracker(ld, m);
                    long long code = t;
                    bool ok = true;
                    for (int i = prefix_len - 1; i >= 0; --i) {
                        x[static_cast<std::size_t>(i)] = static_cast<int>(code % (k + 1));
                        code /= k + 1;
                    }
                    for (int i = 0; i < prefix_len && ok; ++i) {
                        tracker.flip(i, x[static_cast<std::size_t>(i)]);
                        ok = tracker.closes_even(i) && en.admissible(x, i);
                    }
                    if (ok) en.run(x, tracker, prefix_len, results[static_cast<std::size_t>(t)]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<EdgeVector> out;
    for (auto& r : results)
        for (auto& v : r) out.push_back(std::move(v));
    return out;
}

std::optional<std::vector<Cut>> is_sum_of_k_cuts(const Multigraph& g,
                                                 const EdgeVector& x, int k,
                                                 const Limits& limits) {
    if (k < 0) throw InvalidInputError("is_sum_of_k_cuts: negative k");
    if (x.size() != static_cast<std::size_t>(g.edge_count()))
        throw InvalidInputError("is_sum_of_k_cuts: dimension mismatch");
    const int m = g.edge_count();
    for (int e = 0; e < m; ++e)
        if (x[static_cast<std::size_t>(e)] < 0 || x[static_cast<std::size_t>(e)] > k) return std::nullopt;

    // residual parity on cycles is invariant under subtracting cut vectors,
    // so one check at the root settles the lattice side
    for (const auto& cyc : cycle_basis(g)) {
        Int sum = 0;
        for (int e : cyc) sum += x[static_cast<std::size_t>(e)];
        if (sum % 2 != 0) return std::nullopt;
    }

    const auto cuts = enumerate_cuts(g, limits);
    std::vector<std::vector<int>> cvecs(cuts.size(), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t i = 0; i < cuts.size(); ++i)
        for (const Edge& e : g.edges())
            if (cuts[i].separates(e.u, e.v)) cvecs[i][static_cast<std::size_t>(e.id)] = 1;

    std::vector<int> residual(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        residual[static_cast<std::size_t>(e)] = static_cast<int>(x[static_cast<std::size_t>(e)]);

    std::vector<int> chosen;
    // non-increasing index sequences; the empty cut (index 0) pads the tail
    std::function<bool(int, int)> dfs = [&](int slots, int max_index) -> bool {
        bool zero = std::all_of(residual.begin(), residual.end(), [](int v) { return v == 0; });
        if (zero) {
            for (int i = 0; i < slots; ++i) chosen.push_back(0);
            return true;
        }
        if (slots == 0) return false;
        for (int e = 0; e < m; ++e)
            if (residual[static_cast<std::size_t>(e)] > slots) return false;
        for (int idx = max_index; idx >= 1; --idx) {
            const auto& cv = cvecs[static_cast<std::size_t>(idx)];
            bool fits = true;
            for (int e = 0; e < m && fits; ++e)
                fits = residual[static_cast<std::size_t>(e)] >= cv[static_cast<std::size_t>(e)];
            if (!fits) continue;
            for (int e = 0; e < m; ++e) residual[static_cast<std::size_t>(e)] -= cv[static_cast<std::size_t>(e)];
            chosen.push_back(idx);
            if (dfs(slots - 1, idx)) return true;
            chosen.pop_back();
            for (int e = 0; e < m; ++e) residual[static_cast<std::size_t>(e)] += cv[static_cast<std::size_t>(e)];
        }
        return false;
    };

    if (!dfs(k, static_cast<int>(cuts.size()) - 1)) return std::nullopt;

    std::vector<Cut> result;
    for (int idx : chosen) result.push_back(cuts[static_cast<std::size_t>(idx)]);
    std::sort(result.begin(), result.end());

    EdgeVector sum(static_cast<std::size_t>(m));
    for (const Cut& c : result) sum += cut_vector(g, c);
    if (!(sum == x)) throw InternalError("decomposition does not sum to the input");
    return result;
}

GapReport find_gaps(const Multigraph& g, int k_max, const Limits& limits) {
    if (k_max < 1) throw InvalidInputError("find_gaps: k_max must be >= 1");
    LatticeDescription ld = lattice_description(g, limits);
    GapReport report;
    report.k_max = k_max;

    for (int k = 1; k <= k_max; ++k) {
        auto pts = enumerate_lattice_points(g, ld, k, limits);
        report.lattice_point_counts.push_back(static_cast<long long>(pts.size()));

        const int workers = std::max(1, limits.workers);
        std::vector<char> decomposable(pts.size(), 0);
        if (workers == 1 || pts.size() < 2) {
            for (std::size_t i = 0; i < pts.size(); ++i)
                decomposable[i] = is_sum_of_k_cuts(g, pts[i], k, limits).has_value();
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&, w]() {
                    try {
                        for (std::size_t i = static_cast<std::size_t>(w); i < pts.size();
                             i += static_cast<std::size_t>(workers))
                            decomposable[i] = is_sum_of_k_cuts(g, pts[i], k, limits).has_value();
                    } catch (...) {
                        errors[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            for (auto& th : pool) th.join();
            for (const auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!decomposable[i]) report.gaps.push_back(DilatedPoint{pts[i], k});
    }
    return report;
}

NormalityVerdict check_normal(const Multigraph& g, int k_max, const Limits& limits) {
    GapReport report = find_gaps(g, k_max, limits);
    NormalityVerdict verdict;
    verdict.k_max = k_max;
    if (!report.gaps.empty()) verdict.gap = report.gaps.front();
    return verdict;
}

SeminormalityVerdict check_seminormal(const Multigraph& g, int k_max, const Limits& limits) {
    if (k_max < 3) throw InvalidInputError("check_seminormal needs k_max >= 3");
    SeminormalityVerdict verdict;
    verdict.k_max = k_max;

    // Gaps at level k are examined only when 3k <= k_max; 2x and 3x live in
    // dilations they certainly belong to, so gapness there reduces to a
    // pointwise decomposition search.
    GapReport report = find_gaps(g, k_max / 3, limits);
    for (const DilatedPoint& gap : report.gaps) {
        DilatedPoint twice{Int(2) * gap.vector, 2 * gap.level};
        DilatedPoint thrice{Int(3) * gap.vector, 3 * gap.level};
        bool twice_gap = !is_sum_of_k_cuts(g, twice.vector, twice.level, limits).has_value();
        bool thrice_gap = !is_sum_of_k_cuts(g, thrice.vector, thrice.level, limits).has_value();
        if (!twice_gap && !thrice_gap) {
            verdict.violation = gap;
            return verdict;
        }
    }
    return verdict;
}

VeryAmpleVerdict check_very_ample(const Multigraph& g, const Limits& limits) {
    if (!verify_transitivity(g, limits))
        throw InternalError("cut polytope transitivity check failed");
    LatticeDescription ld = lattice_description(g, limits);
    std::vector<EdgeVector> gens;
    for (const Cut& c : enumerate_cuts(g, limits)) gens.push_back(cut_vector(g, c));
    VeryAmpleVerdict verdict;
    verdict.report = hilbert_basis(gens, ld, limits);
    verdict.very_ample = verdict.report.is_subset_of_cuts;
    return verdict;
}

} // namespace cutpoly
