// Ehrhart series fitting and the structural theorem checks: candidate
// denominators, exact series fitting, lowest-terms reduction, denominator
// factor shape, palindromicity, reciprocity, and the graph/uniform reports.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehrgraph/counting.hpp"
#include "ehrgraph/polynomial.hpp"
#include "ehrgraph/rational.hpp"

namespace ehrgraph {

enum class DenominatorRule { vertex_product, lcm_power };

struct CandidateDenominator {
    Poly poly;
    DenominatorRule rule;
};

// The lower-degree of the two valid denominators: the per-vertex product
// prod (1 - x^den) and (1 - x^L)^{k+1} with L = lcm of the denominators.
// Ties go to the vertex product.
CandidateDenominator candidate_denominator(const std::vector<Int>& dens, int k);

inline constexpr int kDefaultMargin = 10;

// Numerator = degree-(deg t) truncation of t(x) * sum counts[n] x^n.
// The next `margin` product coefficients must vanish and deg(num) must be
// < deg(t); otherwise the denominator hypothesis is rejected (throws).
RationalFn fit_series(const CountSequence& counts, const Poly& t,
                      int margin = kDefaultMargin);

RationalFn reduce_lowest_terms(const RationalFn& r);

struct DenominatorShape {
    int mult_1mx = 0;   // multiplicity of (1-x)
    int mult_1px = 0;   // multiplicity of (1+x)
    Poly remainder;     // co-factor, divisible by neither
};

// Peels (1-x) then (1+x) factors to exhaustion. Throws "pole-order
// violation" when the (1-x) multiplicity differs from k+1.
DenominatorShape denominator_shape(const Poly& q, int k);
// Same peeling without the pole-order assertion.
DenominatorShape factor_shape(const Poly& q);

bool is_palindromic(const Poly& m);

// Exact polynomial identity x^{s+1} Ehr(x) = (-1)^{k+1} Ehr(1/x) after
// clearing denominators; r must be in lowest terms.
bool check_reciprocity(const RationalFn& r, int k, int s);

enum class Verdict { pass, fail, not_applicable };
using VerdictMap = std::map<std::string, Verdict>;

struct GraphReport {
    VerdictMap verdicts;
    int s = 0;       // (1+x)-multiplicity of the lowest-terms denominator
    Poly numerator;  // H(x) over (1-x)^{k+1} (1+x)^s
};

// Theorem checks for connected 2-uniform instances: denominator shape
// (1-x)^{k+1} (1+x)^s, H symmetric of degree exactly k+s-2; bipartite
// inputs additionally s = 0 and degree k-2.
GraphReport graph_report(const RationalFn& r, int k, bool bipartite);

// Theorem checks for connected simple s-uniform instances: palindromic
// numerator of degree deg Q - (s+1); when also unimodular, denominator
// (1-x)^{k+1} and degree k - s.
VerdictMap uniform_report(const RationalFn& r, int k, int s, bool unimodular);

// Euclidean volume from the series: evaluate (1-x)^{k+1} * r at x = 1 and
// divide by k!. Requires the (1-x) pole order to be exactly k+1.
Rat normalized_volume(const RationalFn& r, int k);

const char* verdict_name(Verdict v);

}  // namespace ehrgraph
