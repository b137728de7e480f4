// ehrgraph: build hypergraph polytopes, count lattice points, fit Ehrhart
// series, and check their structural properties.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehrgraph/analysis.hpp"

using namespace ehrgraph;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonOpts {
    std::string input;
    std::string format = "text";
    long long n_max = -1;
    int margin = kDefaultMargin;
    bool graph_box = false;
    std::uint64_t tu_cap = kDefaultTuWorkCap;
    std::uint64_t vertex_cap = kDefaultVertexSubsetCap;
    bool naive = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", o.input, "hypergraph file, or '-' for stdin")
            ->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--n-max", o.n_max, "dilations to count (auto when omitted)");
    cmd->add_option("--margin", o.margin, "extra verified series coefficients");
    cmd->add_flag("--graph-box", o.graph_box, "add unit upper-bound rows (P(G) form)");
    cmd->add_option("--tu-cap", o.tu_cap, "total-unimodularity submatrix cap");
    cmd->add_option("--vertex-cap", o.vertex_cap, "vertex enumeration subset cap");
}

AnalysisOptions to_analysis_options(const CommonOpts& o) {
    AnalysisOptions opts;
    if (o.n_max >= 0) opts.n_max = o.n_max;
    opts.margin = o.margin;
    opts.graph_box = o.graph_box;
    opts.tu_cap = o.tu_cap;
    opts.vertex_cap = o.vertex_cap;
    return opts;
}

int cmd_validate(const CommonOpts& o) {
    Hypergraph h = parse_hypergraph(read_input(o.input));
    HypergraphProperties p = validate(h);
    if (o.format == "json") {
        nlohmann::json j = {{"vertices", h.k},
                            {"edges", h.edges},
                            {"is_simple", p.is_simple},
                            {"is_connected", p.is_connected},
                            {"is_covering", p.is_covering},
                            {"has_loops", p.has_loops},
                            {"has_repeated_edges", p.has_repeated_edges},
                            {"is_graph", p.is_graph}};
        if (p.uniform_s) j["uniform_s"] = *p.uniform_s;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k = " << h.k << ", r = " << h.edges.size() << "\n"
                  << "simple: " << (p.is_simple ? "yes" : "no") << "\n"
                  << "connected: " << (p.is_connected ? "yes" : "no") << "\n"
                  << "covering: " << (p.is_covering ? "yes" : "no") << "\n"
                  << "loops: " << (p.has_loops ? "yes" : "no") << "\n"
                  << "repeated edges: " << (p.has_repeated_edges ? "yes" : "no")
                  << "\n";
        if (p.uniform_s) std::cout << "uniform: s = " << *p.uniform_s << "\n";
        else std::cout << "uniform: no\n";
        std::cout << "graph: " << (p.is_graph ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_vertices(const CommonOpts& o) {
    Hypergraph h = parse_hypergraph(read_input(o.input));
    HRep p = build_polytope(h, o.graph_box);
    VertexSet vs = enumerate_vertices(p, o.vertex_cap);
    auto dens = vertex_denominators(vs);
    if (o.format == "json") {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& pt : vs.points) {
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& c : pt.coords) coords.push_back(rat_to_string(c));
            verts.push_back(coords);
        }
        nlohmann::json jdens = nlohmann::json::array();
        for (const auto& d : dens) jdens.push_back(d.str());
        std::cout << nlohmann::json{{"vertices", verts}, {"denominators", jdens}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& pt : vs.points) {
            for (size_t i = 0; i < pt.coords.size(); ++i)
                std::cout << (i ? " " : "") << rat_to_string(pt.coords[i]);
            std::cout << "\n";
        }
        std::map<Int, int> hist;
        for (const auto& d : dens) ++hist[d];
        std::cout << "denominators: {";
        bool first = true;
        for (const auto& [d, n] : hist) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << d << ": " << n;
        }
        std::cout << "}\n";
    }
    return 0;
}

int cmd_count(const CommonOpts& o) {
    Hypergraph h = parse_hypergraph(read_input(o.input));
    const long long n_max = o.n_max >= 0 ? o.n_max : 10;
    std::vector<Int> values;
    if (o.naive) {
        for (long long n = 0; n <= n_max; ++n) values.push_back(count_naive(h, n));
    } else {
        HRep p = build_polytope(h, o.graph_box);
        values = count_sequence(p, n_max).values;
    }
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : values) arr.push_back(v.str());
        std::cout << arr.dump(2) << "\n";
    } else {
        for (size_t n = 0; n < values.size(); ++n)
            std::cout << "ehr(" << n << ") = " << values[n] << "\n";
    }
    return 0;
}

int cmd_series(const CommonOpts& o, bool verify) {
    Hypergraph h = parse_hypergraph(read_input(o.input));
    EhrhartAnalysis a = analyze(h, to_analysis_options(o));
    if (o.format == "json") std::cout << render_json(a) << "\n";
    else std::cout << render_text(a);
    if (verify) return a.all_applicable_pass() ? 0 : 1;
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& format) {
    Hypergraph h = generate_family(family_from_name(family), params);
    if (format == "json") std::cout << to_json_text(h) << "\n";
    else std::cout << to_text(h);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ehrhart series toolkit for graph and hypergraph polytopes"};
    app.require_subcommand(1);

    CommonOpts o;
    auto* validate_cmd = app.add_subcommand("validate", "parse and classify a hypergraph");
    add_common(validate_cmd, o);
    auto* vertices_cmd = app.add_subcommand("vertices", "enumerate polytope vertices exactly");
    add_common(vertices_cmd, o);
    auto* count_cmd = app.add_subcommand("count", "count lattice points of dilations");
    add_common(count_cmd, o);
    count_cmd->add_flag("--naive", o.naive, "use the exhaustive oracle counter");
    auto* series_cmd = app.add_subcommand("series", "fit and report the Ehrhart series");
    add_common(series_cmd, o);
    auto* verify_cmd = app.add_subcommand(
        "verify", "full analysis; exit 0 iff all applicable checks pass");
    add_common(verify_cmd, o);

    std::string gen_family;
    std::vector<int> gen_params;
    std::string gen_format = "text";
    auto* gen_cmd = app.add_subcommand("gen", "generate a named graph family");
    gen_cmd->add_option("family", gen_family,
                        "path|cycle|complete|complete_bipartite|hypercube")
        ->required();
    gen_cmd->add_option("params", gen_params, "family parameters")->required();
    gen_cmd->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(o);
        if (vertices_cmd->parsed()) return cmd_vertices(o);
        if (count_cmd->parsed()) return cmd_count(o);
        if (series_cmd->parsed()) return cmd_series(o, false);
        if (verify_cmd->parsed()) return cmd_series(o, true);
        if (gen_cmd->parsed()) return cmd_gen(gen_family, gen_params, gen_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
