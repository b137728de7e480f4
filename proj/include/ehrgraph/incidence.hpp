// Incidence matrices and the brute-force total-unimodularity test.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehrgraph/hypergraph.hpp"
#include "ehrgraph/rational.hpp"

namespace ehrgraph {

struct IncidenceMatrix {
    int rows = 0;  // r, one per hyperedge
    int cols = 0;  // k, one per vertex
    std::vector<std::vector<int>> a;  // entries in {0,1}
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);

// Edge list read back from the rows; inverse of incidence_matrix.
std::vector<std::vector<int>> edges_from_matrix(const IncidenceMatrix& m);

// Exact integer determinant (fraction-free Bareiss elimination).
Int int_determinant(std::vector<std::vector<Int>> m);

enum class TuStatus { yes, no, indeterminate };

struct TuWitness {
    std::vector<int> row_idx;  // 0-based, ascending
    std::vector<int> col_idx;
    Int det;                   // |det| >= 2
};

struct TuVerdict {
    TuStatus status = TuStatus::indeterminate;
    std::optional<TuWitness> witness;        // set iff status == no
    std::uint64_t submatrix_count = 0;       // total submatrices of the scan
};

inline constexpr std::uint64_t kDefaultTuWorkCap = 10'000'000;

// Scans every t x t submatrix, t = 1..min(r,k), in ascending size and
// lexicographic (rows, cols) order; the first violating submatrix in that
// order is the witness no matter how the scan is scheduled. Returns
// indeterminate when the total submatrix count exceeds work_cap.
TuVerdict is_totally_unimodular(const IncidenceMatrix& m,
                                std::uint64_t work_cap = kDefaultTuWorkCap);

// Single-threaded reference scan; same contract.
TuVerdict is_totally_unimodular_serial(const IncidenceMatrix& m,
                                       std::uint64_t work_cap = kDefaultTuWorkCap);

}  // namespace ehrgraph
