// Exact lattice-point counts of polytope dilations: a pruned depth-first
// counter over the H-representation, plus the exhaustive oracle it is
// tested against.
#pragma once

#include <cstdint>
#include <vector>

#include "ehrgraph/hypergraph.hpp"
#include "ehrgraph/polytope.hpp"
#include "ehrgraph/rational.hpp"

namespace ehrgraph {

struct CountSequence {
    std::vector<Int> values;  // values[n] = ehr(P, n)
};

// |nP ∩ Z^k| by depth-first assignment with per-row residual pruning.
// Variables are visited in descending incidence degree, ties by vertex id.
// The top-level range may be split across workers; the result is the exact
// sum either way.
Int count_dilation(const HRep& p, long long n);
Int count_dilation_serial(const HRep& p, long long n);

inline constexpr std::uint64_t kDefaultNaiveWorkCap = 100'000'000;

// Exhaustive scan of all (n+1)^k tuples against the hyperedge-sum
// constraints; the independent oracle for count_dilation. Throws when
// (n+1)^k exceeds work_cap.
Int count_naive(const Hypergraph& h, long long n,
                std::uint64_t work_cap = kDefaultNaiveWorkCap);

CountSequence count_sequence(const HRep& p, long long n_max);

}  // namespace ehrgraph
