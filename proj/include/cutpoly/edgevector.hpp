#pragma once

#include <cstddef>
#include <vector>

#include "cutpoly/common.hpp"

namespace cutpoly {

/// Integer vector indexed by edge id. Houses cut vectors, lattice points
/// and gap witnesses.
struct EdgeVector {
    std::vector<Int> entries;

    EdgeVector() = default;
    explicit EdgeVector(std::size_t m) : entries(m) {}
    explicit EdgeVector(std::vector<Int> e) : entries(std::move(e)) {}
    static EdgeVector from_ints(const std::vector<long long>& e);

    std::size_t size() const { return entries.size(); }
    const Int& operator[](std::size_t i) const { return entries[i]; }
    Int& operator[](std::size_t i) { return entries[i]; }

    bool is_zero() const;
    /// Edge ids with nonzero entry, ascending.
    std::vector<int> support() const;

    EdgeVector& operator+=(const EdgeVector& o);
    EdgeVector& operator-=(const EdgeVector& o);
    friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
    friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
    friend EdgeVector operator*(const Int& c, const EdgeVector& a);

    bool operator==(const EdgeVector& o) const { return entries == o.entries; }
    /// Lexicographic by entry; the tie-break order used everywhere.
    bool operator<(const EdgeVector& o) const { return entries < o.entries; }
};

/// An EdgeVector together with its dilation level k (the point lives in kP).
struct DilatedPoint {
    EdgeVector vector;
    int level = 1;

    bool operator==(const DilatedPoint& o) const {
        return level == o.level && vector == o.vector;
    }
    bool operator<(const DilatedPoint& o) const {
        if (level != o.level) return level < o.level;
        return vector < o.vector;
    }
};

} // namespace cutpoly
