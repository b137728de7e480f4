#include "ehrgraph/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ehrgraph {

bool EhrhartAnalysis::all_applicable_pass() const {
    for (const auto& [name, v] : theorem_verdicts)
        if (v == Verdict::fail) return false;
    return true;
}

EhrhartAnalysis analyze(const Hypergraph& h, const AnalysisOptions& opts) {
    EhrhartAnalysis a;
    a.hypergraph = h;
    a.properties = validate(h);
    a.bipartite = a.properties.is_graph && is_bipartite_graph(h);

    a.incidence = incidence_matrix(h);
    a.tu = is_totally_unimodular(a.incidence, opts.tu_cap);

    a.polytope = build_polytope(h, opts.graph_box);
    a.vertices = enumerate_vertices(a.polytope, opts.vertex_cap);
    a.denominators = vertex_denominators(a.vertices);
    a.integral = is_integral(a.vertices);

    a.candidate = candidate_denominator(a.denominators, h.k);
    long long n_max = a.candidate.poly.degree() + opts.margin;
    if (opts.n_max) n_max = std::max(n_max, *opts.n_max);
    a.counts = count_sequence(a.polytope, n_max);

    a.fitted = fit_series(a.counts, a.candidate.poly, opts.margin);
    a.series = reduce_lowest_terms(a.fitted);
    a.shape = denominator_shape(a.series.den, h.k);  // throws on pole mismatch
    a.palindromic = is_palindromic(a.series.num);
    a.numerator_degree = a.series.num.degree();
    a.normalized_volume = normalized_volume(a.series, h.k);

    VerdictMap& v = a.theorem_verdicts;
    v["ehr0_is_1"] = a.counts.values.at(0) == 1 ? Verdict::pass : Verdict::fail;
    {
        bool mono = true;
        for (size_t i = 1; i < a.counts.values.size(); ++i)
            if (a.counts.values[i] < a.counts.values[i - 1]) mono = false;
        v["counts_monotone"] = mono ? Verdict::pass : Verdict::fail;
    }
    v["fit_residual_zero"] = Verdict::pass;  // fit_series throws otherwise
    v["pole_order_k_plus_1"] = Verdict::pass;  // denominator_shape throws otherwise
    {
        auto coeffs = expand_series(a.series, static_cast<int>(n_max));
        bool ok = true;
        for (size_t i = 0; i < a.counts.values.size(); ++i)
            if (coeffs[i] != Rat(a.counts.values[i])) ok = false;
        v["series_round_trip"] = ok ? Verdict::pass : Verdict::fail;
    }
    if (a.integral) {
        v["numerator_nonnegative_integers"] =
            a.series.num.all_integer_coeffs() && a.series.num.all_nonnegative_coeffs()
                ? Verdict::pass
                : Verdict::fail;
    }

    // Theorem checks assume simple hypergraphs; suppressed for repeats.
    const bool repeats = a.properties.has_repeated_edges;
    const bool connected = a.properties.is_connected;
    const int s = a.properties.uniform_s.value_or(0);

    a.reciprocity_ok = false;
    if (!repeats && connected && a.properties.is_simple && a.properties.uniform_s) {
        a.reciprocity_ok = check_reciprocity(a.series, h.k, s);
        v["reciprocity"] = a.reciprocity_ok ? Verdict::pass : Verdict::fail;
    } else {
        v["reciprocity"] = Verdict::not_applicable;
    }

    if (!repeats && connected && a.properties.is_graph) {
        GraphReport gr = graph_report(a.series, h.k, a.bipartite);
        for (const auto& [name, verdict] : gr.verdicts)
            v["graph." + name] = verdict;
    }
    if (!repeats && connected && a.properties.is_simple && a.properties.uniform_s) {
        VerdictMap ur = uniform_report(a.series, h.k, s, a.tu.status == TuStatus::yes);
        for (const auto& [name, verdict] : ur)
            v["uniform." + name] = verdict;
    }
    if (a.tu.status == TuStatus::yes && !repeats) {
        v["tu_implies_integral"] = a.integral ? Verdict::pass : Verdict::fail;
        v["tu_denominator_1mx_k_plus_1"] =
            a.series.den == Poly::one_minus_x_pow(1).pow(h.k + 1) ? Verdict::pass
                                                                  : Verdict::fail;
    }
    return a;
}

std::string shape_str(const DenominatorShape& shape) {
    std::ostringstream out;
    const int paired = shape.mult_1px;  // (1-x)(1+x) pairs shown as (1-x^2)
    const int plain = shape.mult_1mx - paired;
    auto pow_str = [&](const std::string& base, int e) {
        if (e == 0) return;
        out << base;
        if (e > 1) out << "^" << e;
    };
    pow_str("(1-x)", plain);
    pow_str("(1-x^2)", paired);
    if (shape.remainder != Poly::one() || (plain == 0 && paired == 0))
        out << "(" << shape.remainder.str() << ")";
    return out.str();
}

namespace {

std::string tu_str(const TuVerdict& tu) {
    switch (tu.status) {
        case TuStatus::yes: return "true";
        case TuStatus::no: return "false";
        case TuStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

// factored display of the candidate, e.g. "(1-x)^5(1-x^2)" or "(1-x^2)^4"
std::string candidate_str(const EhrhartAnalysis& a) {
    std::ostringstream out;
    if (a.candidate.rule == DenominatorRule::lcm_power) {
        Int L = 1;
        for (const auto& d : a.denominators) L = lcm(L, d);
        out << "(1-x";
        if (L > 1) out << "^" << L;
        out << ")^" << a.hypergraph.k + 1;
    } else {
        std::map<Int, int> hist;
        for (const auto& d : a.denominators) ++hist[d];
        for (const auto& [q, n] : hist) {
            out << "(1-x";
            if (q > 1) out << "^" << q;
            out << ")";
            if (n > 1) out << "^" << n;
        }
    }
    return out.str();
}

std::string den_multiset_str(const std::vector<Int>& dens) {
    std::map<Int, int> hist;
    for (const auto& d : dens) ++hist[d];
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [d, n] : hist) {
        if (!first) out << ", ";
        first = false;
        out << d << ": " << n;
    }
    out << "}";
    return out.str();
}

}  // namespace

std::string render_text(const EhrhartAnalysis& a) {
    std::ostringstream out;
    out << "hypergraph: k=" << a.hypergraph.k << " r=" << a.hypergraph.edges.size()
        << "\n";
    const auto& p = a.properties;
    out << "properties: simple=" << (p.is_simple ? "yes" : "no")
        << " connected=" << (p.is_connected ? "yes" : "no")
        << " covering=" << (p.is_covering ? "yes" : "no")
        << " loops=" << (p.has_loops ? "yes" : "no")
        << " repeated=" << (p.has_repeated_edges ? "yes" : "no");
    if (p.uniform_s) out << " uniform_s=" << *p.uniform_s;
    out << " graph=" << (p.is_graph ? "yes" : "no");
    if (p.is_graph) out << " bipartite=" << (a.bipartite ? "yes" : "no");
    out << "\n";
    out << "totally unimodular: " << tu_str(a.tu);
    if (a.tu.witness) {
        out << " (witness rows {";
        for (size_t i = 0; i < a.tu.witness->row_idx.size(); ++i)
            out << (i ? "," : "") << a.tu.witness->row_idx[i] + 1;
        out << "} cols {";
        for (size_t i = 0; i < a.tu.witness->col_idx.size(); ++i)
            out << (i ? "," : "") << a.tu.witness->col_idx[i] + 1;
        out << "} det " << a.tu.witness->det << ")";
    }
    out << "\n";
    out << "vertices: " << a.vertices.points.size()
        << "  integral: " << (a.integral ? "yes" : "no")
        << "  denominators: " << den_multiset_str(a.denominators) << "\n";
    out << "candidate denominator: " << candidate_str(a) << " [rule: "
        << (a.candidate.rule == DenominatorRule::vertex_product ? "vertex-product"
                                                                : "lcm-power")
        << "]\n";
    out << "counts:\n";
    for (size_t n = 0; n < a.counts.values.size(); ++n)
        out << "  ehr(" << n << ") = " << a.counts.values[n] << "\n";
    out << "series: (" << a.series.num.str() << ")/(" << shape_str(a.shape)
        << ")\n";
    out << "shape: (1-x)^" << a.shape.mult_1mx << " (1+x)^" << a.shape.mult_1px
        << " remainder " << a.shape.remainder.str() << "\n";
    out << "numerator degree: " << a.numerator_degree
        << "  palindromic: " << (a.palindromic ? "yes" : "no") << "\n";
    out << "normalized volume: " << rat_to_string(a.normalized_volume) << "\n";
    out << "checks:\n";
    for (const auto& [name, verdict] : a.theorem_verdicts) {
        out << "  " << name;
        for (size_t i = name.size(); i < 44; ++i) out << (i == name.size() ? ' ' : '.');
        out << " " << verdict_name(verdict) << "\n";
    }
    out << "result: " << (a.all_applicable_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string render_json(const EhrhartAnalysis& a) {
    nlohmann::json j;
    j["hypergraph"] = {{"vertices", a.hypergraph.k}, {"edges", a.hypergraph.edges}};
    const auto& p = a.properties;
    j["properties"] = {{"is_simple", p.is_simple},
                       {"is_connected", p.is_connected},
                       {"is_covering", p.is_covering},
                       {"has_loops", p.has_loops},
                       {"has_repeated_edges", p.has_repeated_edges},
                       {"is_graph", p.is_graph}};
    if (p.uniform_s) j["properties"]["uniform_s"] = *p.uniform_s;
    if (p.is_graph) j["properties"]["is_bipartite"] = a.bipartite;
    j["totally_unimodular"] = tu_str(a.tu);
    if (a.tu.witness) {
        j["tu_witness"] = {{"rows", a.tu.witness->row_idx},
                           {"cols", a.tu.witness->col_idx},
                           {"det", a.tu.witness->det.str()}};
    }
    {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& pt : a.vertices.points) {
            nlohmann::json coords = nlohmann::json::array();
            for (const auto& c : pt.coords) coords.push_back(rat_to_string(c));
            verts.push_back(coords);
        }
        j["vertices"] = verts;
    }
    {
        nlohmann::json dens = nlohmann::json::array();
        for (const auto& d : a.denominators) dens.push_back(d.str());
        j["vertex_denominators"] = dens;
    }
    j["integral"] = a.integral;
    {
        nlohmann::json counts = nlohmann::json::array();
        for (const auto& c : a.counts.values) counts.push_back(c.str());
        j["counts"] = counts;
    }
    auto poly_json = [](const Poly& q) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : q.coeffs()) arr.push_back(rat_to_string(c));
        return arr;
    };
    j["candidate_denominator"] = {
        {"coefficients", poly_json(a.candidate.poly)},
        {"display", candidate_str(a)},
        {"rule", a.candidate.rule == DenominatorRule::vertex_product
                     ? "vertex-product"
                     : "lcm-power"}};
    j["series"] = {{"numerator", poly_json(a.series.num)},
                   {"denominator", poly_json(a.series.den)},
                   {"display", "(" + a.series.num.str() + ")/(" +
                                   shape_str(a.shape) + ")"}};
    j["shape"] = {{"mult_1mx", a.shape.mult_1mx},
                  {"mult_1px", a.shape.mult_1px},
                  {"remainder", poly_json(a.shape.remainder)}};
    j["numerator_degree"] = a.numerator_degree;
    j["palindromic"] = a.palindromic;
    j["normalized_volume"] = rat_to_string(a.normalized_volume);
    {
        nlohmann::json checks;
        for (const auto& [name, verdict] : a.theorem_verdicts)
            checks[name] = verdict_name(verdict);
        j["checks"] = checks;
    }
    j["pass"] = a.all_applicable_pass();
    return j.dump(2);
}

}  // namespace ehrgraph
