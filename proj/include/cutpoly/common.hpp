#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutpoly {

// All lattice / polytope arithmetic is exact. Int and Rat are the only
// numeric types that may appear in membership or decomposition decisions.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Malformed or out-of-contract input (bad file, loop in a graph,
/// dimension mismatch, failed membership precondition).
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input exceeds a configured resource bound.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An invariant that cannot fail under checked preconditions failed anyway.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Resource bounds shared across operations. All overridable.
struct Limits {
    int max_cut_vertices = 20;           // cut enumeration: 2^(n-1) cuts
    int max_minor_vertices = 15;         // K5 minor search
    long long max_enum_nodes = 1LL << 34; // lattice point DFS box guard
    int max_hilbert_dim = 10;            // lattice rank for Hilbert basis runs
    int max_hilbert_generators = 16;
    int workers = 1;                     // parallel workers for enumerations
};

} // namespace cutpoly
