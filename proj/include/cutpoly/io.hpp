#pragma once

#include <string>

#include <json.hpp>

#include "cutpoly/edgevector.hpp"
#include "cutpoly/graph.hpp"

namespace cutpoly {

using Json = nlohmann::ordered_json;

/// {"n": <int>, "edges": [[u,v],...]}; edge order defines edge ids.
Multigraph parse_graph_json(const std::string& text);

/// "p cut <n> <m>" then m lines "e <u> <v>", 0-indexed; 'c' lines are
/// comments.
Multigraph parse_graph_text(const std::string& text);

/// Reads a file and dispatches on the leading character.
Multigraph load_graph(const std::string& path);

/// {"k": <int>, "x": [<int>,...]} aligned to the graph's edge order.
DilatedPoint parse_point_json(const std::string& text);
DilatedPoint load_point(const std::string& path);

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
std::string graph_digest(const Multigraph& g);
std::string point_digest(const DilatedPoint& p);

Json graph_to_json(const Multigraph& g);
Json edge_vector_to_json(const EdgeVector& x);
Json cut_to_json(const Cut& c);

long long checked_int64(const Int& v);

} // namespace cutpoly
