// Full pipeline: validate -> polytope -> vertices -> counts -> fit ->
// reduce -> shape -> theorem reports, and its text/JSON rendering.
#pragma once

#include <optional>
#include <string>

#include "ehrgraph/counting.hpp"
#include "ehrgraph/hypergraph.hpp"
#include "ehrgraph/incidence.hpp"
#include "ehrgraph/polytope.hpp"
#include "ehrgraph/series.hpp"

namespace ehrgraph {

struct AnalysisOptions {
    std::optional<long long> n_max;  // raised to deg(candidate) + margin
    int margin = kDefaultMargin;
    std::uint64_t tu_cap = kDefaultTuWorkCap;
    std::uint64_t vertex_cap = kDefaultVertexSubsetCap;
    bool graph_box = false;
};

struct EhrhartAnalysis {
    Hypergraph hypergraph;
    HypergraphProperties properties;
    bool bipartite = false;

    IncidenceMatrix incidence;
    TuVerdict tu;

    HRep polytope;
    VertexSet vertices;
    std::vector<Int> denominators;
    bool integral = false;

    CandidateDenominator candidate;
    CountSequence counts;
    RationalFn fitted;   // over the candidate denominator
    RationalFn series;   // lowest terms, den(0) = 1
    DenominatorShape shape;
    bool palindromic = false;
    int numerator_degree = 0;
    bool reciprocity_ok = false;
    Rat normalized_volume;

    VerdictMap theorem_verdicts;

    bool all_applicable_pass() const;
};

EhrhartAnalysis analyze(const Hypergraph& h, const AnalysisOptions& opts = {});

// Factored denominator display, e.g. "(1-x)^6(1-x^2)".
std::string shape_str(const DenominatorShape& shape);

std::string render_text(const EhrhartAnalysis& a);
std::string render_json(const EhrhartAnalysis& a);

}  // namespace ehrgraph
