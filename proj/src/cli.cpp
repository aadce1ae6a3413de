#include "cutpoly/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cutpoly/audit.hpp"
#include "cutpoly/decompose.hpp"
#include "cutpoly/generate.hpp"
#include "cutpoly/lattice.hpp"
#include "cutpoly/planar.hpp"
#include "cutpoly/switching.hpp"

namespace cutpoly {

namespace {

struct Options {
    std::string command;
    std::string graph_path;
    std::string point_path;
    std::string cut_spec;
    int k = 0;
    int kmax = 3;
    int max_n = 5;
    std::string format = "json";
    int limit_vertices = 0;
    int workers = 1;
    long long seed = 0;
    std::string fail_on;
};

Limits make_limits(const Options& opt) {
    Limits limits;
    if (opt.limit_vertices > 0) {
        limits.max_cut_vertices = opt.limit_vertices;
        limits.max_minor_vertices = opt.limit_vertices;
    }
    limits.workers = std::max(1, opt.workers);
    return limits;
}

std::vector<int> parse_vertex_list(const std::string& spec, int n) {
    std::vector<int> vs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw InvalidInputError("bad vertex in --cut list: " + item);
        }
        if (v < 0 || v >= n) throw InvalidInputError("cut vertex out of range");
        vs.push_back(v);
    }
    return vs;
}

Json verdict_json(const NormalityVerdict& v) {
    Json j;
    if (v.gap) {
        j["verdict"] = "gap_found";
        j["witness"] = Json{{"k", v.gap->level}, {"x", edge_vector_to_json(v.gap->vector)}};
    } else {
        j["verdict"] = "normal_up_to";
        j["k"] = v.k_max;
    }
    return j;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
    if (opt.format == "text") {
        for (const auto& [key, value] : report.items())
            out << key << ": " << value.dump() << "\n";
    } else {
        out << report.dump(2) << "\n";
    }
}

int finish(Json report, const Options& opt, std::ostream& out) {
    report["seed"] = opt.seed;
    report["workers"] = std::max(1, opt.workers);
    emit(report, opt, out);
    if (!opt.fail_on.empty() && report.contains("verdict") &&
        report["verdict"].is_string() && report["verdict"].get<std::string>() == opt.fail_on)
        return 1;
    return 0;
}

int run_command(const Options& opt, std::ostream& out) {
    const Limits limits = make_limits(opt);
    Json report;
    report["command"] = opt.command;

    if (opt.command == "conjecture-scan") {
        Json scan = conjecture_scan(opt.max_n, opt.kmax, limits);
        for (auto& [key, value] : scan.items()) report[key] = std::move(value);
        return finish(std::move(report), opt, out);
    }

    Multigraph g = load_graph(opt.graph_path);
    report["graph_digest"] = graph_digest(g);
    report["n"] = g.vertex_count();
    report["m"] = g.edge_count();

    if (opt.command == "cuts") {
        auto cuts = enumerate_cuts(g, limits);
        Json arr = Json::array();
        for (const Cut& c : cuts)
            arr.push_back(Json{{"side_a", cut_to_json(c)},
                               {"vector", edge_vector_to_json(cut_vector(g, c))}});
        report["count"] = cuts.size();
        report["cuts"] = std::move(arr);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "lattice") {
        LatticeDescription ld = lattice_description(g, limits);
        Json cons = Json::array();
        for (const auto& cyc : ld.parity_constraints) cons.push_back(cyc);
        Json basis = Json::array();
        for (const auto& row : ld.hnf_basis) {
            Json r = Json::array();
            for (const Int& v : row) r.push_back(checked_int64(v));
            basis.push_back(std::move(r));
        }
        report["parity_constraints"] = std::move(cons);
        report["rank"] = ld.hnf_basis.size();
        if (static_cast<int>(ld.hnf_basis.size()) == g.edge_count()) {
            Int index = 1;
            for (std::size_t i = 0; i < ld.hnf_basis.size(); ++i) {
                for (std::size_t j = 0; j < ld.hnf_basis[i].size(); ++j)
                    if (ld.hnf_basis[i][j] != 0) { index *= ld.hnf_basis[i][j]; break; }
            }
            report["index_in_ambient"] = checked_int64(index);
        }
        report["hnf_basis"] = std::move(basis);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "gaps") {
        GapReport gr = find_gaps(g, opt.kmax, limits);
        report["k_max"] = gr.k_max;
        Json counts = Json::array();
        for (std::size_t k = 0; k < gr.lattice_point_counts.size(); ++k)
            counts.push_back(Json{{"k", k + 1}, {"count", gr.lattice_point_counts[k]}});
        report["lattice_point_counts"] = std::move(counts);
        Json gaps = Json::array();
        for (const DilatedPoint& p : gr.gaps)
            gaps.push_back(Json{{"k", p.level}, {"x", edge_vector_to_json(p.vector)}});
        report["gap_count"] = gr.gaps.size();
        report["gaps"] = std::move(gaps);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "check-normal") {
        NormalityVerdict v = check_normal(g, opt.kmax, limits);
        Json vj = verdict_json(v);
        for (auto& [key, value] : vj.items()) report[key] = std::move(value);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "check-seminormal") {
        SeminormalityVerdict v = check_seminormal(g, opt.kmax, limits);
        if (v.violation) {
            report["verdict"] = "violation";
            report["witness"] = Json{{"k", v.violation->level},
                                     {"x", edge_vector_to_json(v.violation->vector)}};
        } else {
            report["verdict"] = "consistent_up_to";
            report["k"] = v.k_max;
        }
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "check-very-ample") {
        VeryAmpleVerdict v = check_very_ample(g, limits);
        report["verdict"] = v.very_ample ? "very_ample" : "not_very_ample";
        report["hilbert_basis_size"] = v.report.basis.size();
        Json off = Json::array();
        for (const EdgeVector& x : v.report.offending) off.push_back(edge_vector_to_json(x));
        report["offending"] = std::move(off);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "decompose") {
        DilatedPoint p = load_point(opt.point_path);
        if (opt.k > 0) p.level = opt.k;
        report["point_digest"] = point_digest(p);
        report["k"] = p.level;
        DecomposeOptions dopts;
        dopts.limits = limits;
        std::vector<Cut> cuts;
        if (p.level == 1)
            cuts = {decompose1(g, p.vector, dopts)};
        else if (p.level == 2)
            cuts = decompose2_planar(g, p.vector, dopts);
        else if (p.level == 3)
            cuts = decompose3_planar(g, p.vector, dopts);
        else
            throw InvalidInputError("decompose supports k in {1,2,3}");
        Json arr = Json::array();
        for (const Cut& c : cuts) arr.push_back(cut_to_json(c));
        report["cuts"] = std::move(arr);
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "four-color") {
        Coloring4 col = four_color(g);
        report["colors"] = col.color;
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "minor-k5") {
        auto witness = has_K5_minor(g, limits);
        report["verdict"] = witness ? "minor_found" : "no_k5_minor";
        if (witness) {
            Json sets = Json::array();
            for (const auto& bs : *witness) sets.push_back(bs);
            report["branch_sets"] = std::move(sets);
        }
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "dual") {
        auto emb = is_planar(g);
        if (!emb) throw InvalidInputError("graph is not planar");
        DualMap dm = dual_graph(g, *emb);
        report["faces"] = emb->faces.size();
        report["dual"] = graph_to_json(dm.dual);
        report["edge_bijection"] = dm.edge_bijection;
        return finish(std::move(report), opt, out);
    }

    if (opt.command == "switch") {
        std::vector<int> side = parse_vertex_list(opt.cut_spec, g.vertex_count());
        SwitchMap s = make_switch(g, Cut::from_side(g.vertex_count(), side));
        report["base_cut"] = cut_to_json(s.base_cut);
        report["crossing_set"] = s.crossing_set;
        if (!opt.point_path.empty()) {
            DilatedPoint p = load_point(opt.point_path);
            if (opt.k > 0) p.level = opt.k;
            if (p.vector.size() != static_cast<std::size_t>(g.edge_count()))
                throw InvalidInputError("point length does not match edge count");
            report["point_digest"] = point_digest(p);
            report["k"] = p.level;
            DilatedPoint q = switch_point(s, p);
            report["switched"] = edge_vector_to_json(q.vector);
        } else {
            Json images = Json::array();
            for (const Cut& c : enumerate_cuts(g, limits))
                images.push_back(Json{{"cut", cut_to_json(c)},
                                      {"image", cut_to_json(switch_cut(s, c))}});
            report["cut_images"] = std::move(images);
        }
        return finish(std::move(report), opt, out);
    }

    throw InvalidInputError("unknown command: " + opt.command);
}

} // namespace

Json conjecture_scan(int max_n, int kmax, const Limits& limits) {
    if (max_n < 1) throw InvalidInputError("conjecture-scan needs max-n >= 1");
    if (max_n > 6)
        throw ResourceLimitError("conjecture-scan is isomorph-reduced by brute force; "
                                 "limited to 6 vertices");
    Json rows = Json::array();
    long long minor_and_gap = 0, minor_no_gap = 0, no_minor_gap = 0, no_minor_no_gap = 0;
    for (int n = 1; n <= max_n; ++n) {
        for (const Multigraph& g : connected_graph_classes(n)) {
            bool minor = has_K5_minor(g, limits).has_value();
            NormalityVerdict v = check_normal(g, kmax, limits);
            bool gap = v.gap.has_value();
            (minor ? (gap ? minor_and_gap : minor_no_gap)
                   : (gap ? no_minor_gap : no_minor_no_gap))++;
            Json row;
            row["n"] = n;
            row["edges"] = graph_to_json(g)["edges"];
            row["k5_minor"] = minor;
            row["verdict"] = gap ? "gap_found" : "normal_up_to";
            if (gap)
                row["gap"] = Json{{"k", v.gap->level}, {"x", edge_vector_to_json(v.gap->vector)}};
            rows.push_back(std::move(row));
        }
    }
    Json j;
    j["max_n"] = max_n;
    j["kmax"] = kmax;
    j["rows"] = std::move(rows);
    j["contingency"] = Json{{"minor_and_gap", minor_and_gap},
                            {"minor_no_gap", minor_no_gap},
                            {"no_minor_gap", no_minor_gap},
                            {"no_minor_no_gap", no_minor_no_gap}};
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact cut polytope toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", opt.graph_path, "graph file (JSON or text)")->required();
        cmd->add_option("--format", opt.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--limit-vertices", opt.limit_vertices, "override vertex bounds");
        cmd->add_option("--workers", opt.workers, "parallel workers for enumerations");
        cmd->add_option("--seed", opt.seed, "seed recorded in the report");
        cmd->add_option("--fail-on", opt.fail_on, "exit 1 when the verdict equals this value");
    };

    add_common(app.add_subcommand("cuts", "enumerate all cuts"), true);
    add_common(app.add_subcommand("lattice", "cut lattice description"), true);
    auto* gaps = app.add_subcommand("gaps", "find gaps in dilations up to kmax");
    add_common(gaps, true);
    gaps->add_option("--kmax", opt.kmax, "largest dilation");
    auto* normal = app.add_subcommand("check-normal", "bounded normality verdict");
    add_common(normal, true);
    normal->add_option("--kmax", opt.kmax, "largest dilation");
    auto* semi = app.add_subcommand("check-seminormal", "bounded seminormality verdict");
    add_common(semi, true);
    semi->add_option("--kmax", opt.kmax, "largest dilation (>= 3)");
    add_common(app.add_subcommand("check-very-ample", "Hilbert basis verdict"), true);
    auto* dec = app.add_subcommand("decompose", "write a point as a sum of k cuts");
    add_common(dec, true);
    dec->add_option("--point", opt.point_path, "point file (JSON)")->required();
    dec->add_option("--k", opt.k, "override the point's level");
    add_common(app.add_subcommand("four-color", "proper 4-coloring of a planar graph"), true);
    add_common(app.add_subcommand("minor-k5", "search for a K5 minor"), true);
    add_common(app.add_subcommand("dual", "dual graph of a planar embedding"), true);
    auto* sw = app.add_subcommand("switch", "apply a switching map");
    add_common(sw, true);
    sw->add_option("--cut", opt.cut_spec, "comma-separated side A of the base cut");
    sw->add_option("--point", opt.point_path, "point file to switch");
    sw->add_option("--k", opt.k, "override the point's level");
    auto* scan = app.add_subcommand("conjecture-scan", "minor/normality contingency table");
    add_common(scan, false);
    scan->add_option("--max-n", opt.max_n, "largest vertex count");
    scan->add_option("--kmax", opt.kmax, "largest dilation");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
    opt.command = app.get_subcommands().front()->get_name();

    try {
        return run_command(opt, out);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cutpoly
