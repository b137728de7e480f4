#include "ehrgraph/polytope.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ehrgraph/parallel.hpp"

namespace ehrgraph {

HRep build_polytope(const Hypergraph& h, bool graph_box) {
    if (!graph_box) {
        std::vector<bool> covered(static_cast<size_t>(h.k) + 1, false);
        for (const auto& e : h.edges)
            for (int v : e) covered[static_cast<size_t>(v)] = true;
        for (int v = 1; v <= h.k; ++v)
            if (!covered[static_cast<size_t>(v)])
                throw std::invalid_argument(
                    "vertex " + std::to_string(v) +
                    " lies in no hyperedge; the polytope would be unbounded "
                    "(use graph_box for graphs with isolated vertices)");
    }
    HRep p;
    p.k = h.k;
    for (const auto& e : h.edges) {
        HRow row;
        row.coeffs.assign(static_cast<size_t>(h.k), 0);
        for (int v : e) row.coeffs[static_cast<size_t>(v - 1)] = 1;
        row.rhs = 1;
        row.kind = RowKind::incidence;
        p.rows.push_back(std::move(row));
    }
    for (int i = 0; i < h.k; ++i) {
        HRow row;
        row.coeffs.assign(static_cast<size_t>(h.k), 0);
        row.coeffs[static_cast<size_t>(i)] = -1;
        row.rhs = 0;
        row.kind = RowKind::nonneg;
        p.rows.push_back(std::move(row));
    }
    if (graph_box) {
        for (int i = 0; i < h.k; ++i) {
            HRow row;
            row.coeffs.assign(static_cast<size_t>(h.k), 0);
            row.coeffs[static_cast<size_t>(i)] = 1;
            row.rhs = 1;
            row.kind = RowKind::box;
            p.rows.push_back(std::move(row));
        }
    }
    return p;
}

Rat row_dot(const HRow& row, const std::vector<Rat>& x) {
    Rat s = 0;
    for (size_t j = 0; j < x.size(); ++j) {
        if (row.coeffs[j] == 1) s += x[j];
        else if (row.coeffs[j] == -1) s -= x[j];
    }
    return s;
}

namespace {

// Unique solution of the k x k system (tight rows), if any.
std::optional<std::vector<Rat>> solve_square(const HRep& p,
                                             const std::vector<int>& rows) {
    const size_t k = static_cast<size_t>(p.k);
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k + 1, Rat(0)));
    for (size_t i = 0; i < k; ++i) {
        const HRow& r = p.rows[static_cast<size_t>(rows[i])];
        for (size_t j = 0; j < k; ++j) m[i][j] = r.coeffs[j];
        m[i][k] = r.rhs;
    }
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) return std::nullopt;  // singular
        std::swap(m[col], m[piv]);
        const Rat inv = Rat(1) / m[col][col];
        for (size_t j = col; j <= k; ++j) m[col][j] *= inv;
        for (size_t i = 0; i < k; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (size_t j = col; j <= k; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> x(k);
    for (size_t i = 0; i < k; ++i) x[i] = m[i][k];
    return x;
}

bool feasible(const HRep& p, const std::vector<Rat>& x) {
    for (const auto& row : p.rows)
        if (row_dot(row, x) > row.rhs) return false;
    return true;
}

bool next_combination(std::vector<int>& c, int n) {
    const int t = static_cast<int>(c.size());
    for (int i = t - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - (t - i)) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

RationalPoint make_point(std::vector<Rat> coords) {
    RationalPoint pt;
    pt.den = 1;
    for (const auto& c : coords) pt.den = lcm(pt.den, Int(denominator(c)));
    pt.coords = std::move(coords);
    return pt;
}

bool point_less(const RationalPoint& a, const RationalPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                        b.coords.begin(), b.coords.end());
}

VertexSet vertex_scan(const HRep& p, std::uint64_t subset_cap, bool parallel) {
    const int m = static_cast<int>(p.rows.size());
    if (m < p.k)
        throw std::runtime_error("fewer rows than dimension; polytope unbounded");

    Int n_subsets = 1;
    for (int i = 0; i < p.k; ++i) {
        n_subsets *= (m - i);
        n_subsets /= (i + 1);
    }
    if (n_subsets > Int(subset_cap))
        throw std::runtime_error("vertex enumeration: subset count " +
                                 n_subsets.str() + " exceeds cap " +
                                 std::to_string(subset_cap));

    // Materialize subsets, then solve in parallel.
    std::vector<std::vector<int>> subsets;
    subsets.reserve(static_cast<size_t>(n_subsets));
    std::vector<int> c(static_cast<size_t>(p.k));
    for (int i = 0; i < p.k; ++i) c[static_cast<size_t>(i)] = i;
    do {
        subsets.push_back(c);
    } while (next_combination(c, m));

    const int threads = parallel ? worker_count() : 1;
    std::vector<std::vector<RationalPoint>> found(
        static_cast<size_t>(std::max(threads, 1)));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads) if (threads > 1)
#endif
    {
#ifdef _OPENMP
        const size_t tid = static_cast<size_t>(omp_get_thread_num());
#else
        const size_t tid = 0;
#endif
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
        for (long long si = 0; si < static_cast<long long>(subsets.size()); ++si) {
            auto sol = solve_square(p, subsets[static_cast<size_t>(si)]);
            if (sol && feasible(p, *sol)) found[tid].push_back(make_point(*sol));
        }
    }

    VertexSet vs;
    for (auto& bucket : found)
        for (auto& pt : bucket) vs.points.push_back(std::move(pt));
    std::sort(vs.points.begin(), vs.points.end(), point_less);
    vs.points.erase(std::unique(vs.points.begin(), vs.points.end(),
                                [](const RationalPoint& a, const RationalPoint& b) {
                                    return a.coords == b.coords;
                                }),
                    vs.points.end());
    return vs;
}

}  // namespace

VertexSet enumerate_vertices(const HRep& p, std::uint64_t subset_cap) {
    return vertex_scan(p, subset_cap, true);
}

VertexSet enumerate_vertices_serial(const HRep& p, std::uint64_t subset_cap) {
    return vertex_scan(p, subset_cap, false);
}

std::vector<Int> vertex_denominators(const VertexSet& vs) {
    std::vector<Int> dens;
    dens.reserve(vs.points.size());
    for (const auto& pt : vs.points) dens.push_back(pt.den);
    return dens;
}

bool is_integral(const VertexSet& vs) {
    for (const auto& pt : vs.points)
        if (pt.den != 1) return false;
    return true;
}

}  // namespace ehrgraph
