#include "cutpoly/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace cutpoly {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

Multigraph parse_graph_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInputError(std::string("graph JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InvalidInputError("graph JSON needs fields \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw InvalidInputError("graph JSON edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Multigraph(n, edges);
}

Multigraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "cut")
                throw InvalidInputError("expected header: p cut <n> <m>");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw InvalidInputError("expected edge line: e <u> <v>");
            edges.emplace_back(u, v);
        } else {
            throw InvalidInputError("unknown line tag: " + tag);
        }
    }
    if (n < 0) throw InvalidInputError("missing header: p cut <n> <m>");
    if (m >= 0 && static_cast<int>(edges.size()) != m)
        throw InvalidInputError("edge count does not match header");
    return Multigraph(n, edges);
}

Multigraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
    }
    throw InvalidInputError("empty graph file: " + path);
}

DilatedPoint parse_point_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidInputError(std::string("point JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("x"))
        throw InvalidInputError("point JSON needs fields \"k\" and \"x\"");
    DilatedPoint p;
    p.level = j.at("k").get<int>();
    if (p.level < 1) throw InvalidInputError("point level k must be >= 1");
    for (const auto& v : j.at("x")) p.vector.entries.emplace_back(v.get<long long>());
    return p;
}

DilatedPoint load_point(const std::string& path) { return parse_point_json(read_file(path)); }

std::string graph_digest(const Multigraph& g) {
    std::ostringstream ss;
    ss << "G|n=" << g.vertex_count() << "|";
    for (const Edge& e : g.edges()) ss << e.u << "-" << e.v << ";";
    return fnv1a_hex(ss.str());
}

std::string point_digest(const DilatedPoint& p) {
    std::ostringstream ss;
    ss << "P|k=" << p.level << "|";
    for (const Int& v : p.vector.entries) ss << v << ";";
    return fnv1a_hex(ss.str());
}

Json graph_to_json(const Multigraph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    return j;
}

Json edge_vector_to_json(const EdgeVector& x) {
    Json a = Json::array();
    for (const Int& v : x.entries) a.push_back(checked_int64(v));
    return a;
}

Json cut_to_json(const Cut& c) {
    Json a = Json::array();
    for (int v : c.side_a()) a.push_back(v);
    return a;
}

long long checked_int64(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) throw InternalError("integer too large for serialization");
    return v.convert_to<long long>();
}

} // namespace cutpoly
