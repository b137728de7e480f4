// H-representation of the hypergraph polytope {x >= 0 : Ax <= 1} and exact
// vertex enumeration by the k-subset tight-row scan.
#pragma once

#include <cstdint>
#include <vector>

#include "ehrgraph/hypergraph.hpp"
#include "ehrgraph/rational.hpp"

namespace ehrgraph {

enum class RowKind { incidence, nonneg, box };

struct HRow {
    std::vector<int> coeffs;  // entries in {-1,0,1}
    int rhs = 0;
    RowKind kind = RowKind::incidence;
};

struct HRep {
    int k = 0;
    std::vector<HRow> rows;
};

struct RationalPoint {
    std::vector<Rat> coords;  // lowest terms
    Int den;                  // lcm of coordinate denominators
};

struct VertexSet {
    std::vector<RationalPoint> points;  // lex sorted, duplicate-free
};

// r incidence rows (sum over edge <= 1) + k nonnegativity rows; graph_box
// additionally appends the k unit upper bounds x_i <= 1. Rejects an
// uncovered vertex unless graph_box is set (the polytope would be unbounded).
HRep build_polytope(const Hypergraph& h, bool graph_box = false);

inline constexpr std::uint64_t kDefaultVertexSubsetCap = 5'000'000;

// Solves every rank-k tight subsystem exactly, keeps feasible solutions,
// dedupes and sorts. Throws when C(rows, k) exceeds subset_cap.
VertexSet enumerate_vertices(const HRep& p,
                             std::uint64_t subset_cap = kDefaultVertexSubsetCap);
VertexSet enumerate_vertices_serial(const HRep& p,
                                    std::uint64_t subset_cap = kDefaultVertexSubsetCap);

// {den gamma : gamma in the vertex set}, multiplicity preserved, in
// vertex-set order.
std::vector<Int> vertex_denominators(const VertexSet& vs);

bool is_integral(const VertexSet& vs);

// coeffs . x for one row
Rat row_dot(const HRow& row, const std::vector<Rat>& x);

}  // namespace ehrgraph
