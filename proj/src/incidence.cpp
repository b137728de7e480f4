#include "ehrgraph/incidence.hpp"

#include <algorithm>
#include <limits>

#include "ehrgraph/parallel.hpp"

namespace ehrgraph {

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
    IncidenceMatrix m;
    m.rows = static_cast<int>(h.edges.size());
    m.cols = h.k;
    m.a.assign(static_cast<size_t>(m.rows),
               std::vector<int>(static_cast<size_t>(m.cols), 0));
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) m.a[i][static_cast<size_t>(v - 1)] = 1;
    return m;
}

std::vector<std::vector<int>> edges_from_matrix(const IncidenceMatrix& m) {
    std::vector<std::vector<int>> edges;
    for (const auto& row : m.a) {
        std::vector<int> e;
        for (int j = 0; j < m.cols; ++j)
            if (row[static_cast<size_t>(j)]) e.push_back(j + 1);
        edges.push_back(std::move(e));
    }
    return edges;
}

Int int_determinant(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t p = 0; p < n; ++p) {
        if (m[p][p] == 0) {
            size_t swap_row = p + 1;
            while (swap_row < n && m[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i) {
            for (size_t j = p + 1; j < n; ++j) {
                m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]) / prev;
            }
            m[i][p] = 0;
        }
        prev = m[p][p];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

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

std::vector<std::vector<int>> all_combinations(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<size_t>(i)] = i;
    do {
        out.push_back(c);
    } while (next_combination(c, n));
    return out;
}

// C(n,t) saturating at cap+1 to avoid overflow.
std::uint64_t binom_capped(int n, int t, std::uint64_t cap) {
    if (t < 0 || t > n) return 0;
    Int b = 1;
    for (int i = 0; i < t; ++i) {
        b *= (n - i);
        b /= (i + 1);
        if (b > Int(cap) + 1) return cap + 1;
    }
    return static_cast<std::uint64_t>(b);
}

// det of the submatrix m[rows x cols]
Int submatrix_det(const IncidenceMatrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    const size_t t = rows.size();
    std::vector<std::vector<Int>> s(t, std::vector<Int>(t));
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j)
            s[i][j] = m.a[static_cast<size_t>(rows[i])][static_cast<size_t>(cols[j])];
    return int_determinant(std::move(s));
}

TuVerdict tu_scan(const IncidenceMatrix& m, std::uint64_t work_cap, bool parallel) {
    TuVerdict verdict;
    const int tmax = std::min(m.rows, m.cols);
    std::uint64_t total = 0;
    for (int t = 1; t <= tmax; ++t) {
        std::uint64_t rc = binom_capped(m.rows, t, work_cap);
        std::uint64_t cc = binom_capped(m.cols, t, work_cap);
        if (rc > work_cap || cc > work_cap || rc * cc > work_cap - total ||
            total + rc * cc > work_cap) {
            verdict.status = TuStatus::indeterminate;
            verdict.submatrix_count = work_cap;
            return verdict;
        }
        total += rc * cc;
    }
    verdict.submatrix_count = total;

    const int threads = parallel ? worker_count() : 1;
    for (int t = 1; t <= tmax; ++t) {
        auto row_sets = all_combinations(m.rows, t);
        const auto n_sets = static_cast<long long>(row_sets.size());
        // best violation = (row-set index, col-set index), minimal wins
        long long best_ri = std::numeric_limits<long long>::max();
        long long best_ci = 0;
        Int best_det = 0;
        std::vector<int> best_cols;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (threads > 1)
#endif
        for (long long ri = 0; ri < n_sets; ++ri) {
            std::vector<int> cols(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i) cols[static_cast<size_t>(i)] = i;
            long long ci = 0;
            do {
                Int d = submatrix_det(m, row_sets[static_cast<size_t>(ri)], cols);
                if (d > 1 || d < -1) {
#ifdef _OPENMP
#pragma omp critical(tu_witness)
#endif
                    {
                        if (ri < best_ri || (ri == best_ri && ci < best_ci)) {
                            best_ri = ri;
                            best_ci = ci;
                            best_det = d;
                            best_cols = cols;
                        }
                    }
                    break;  // later col sets of this row set cannot beat ci
                }
                ++ci;
            } while (next_combination(cols, m.cols));
        }
        if (best_ri != std::numeric_limits<long long>::max()) {
            verdict.status = TuStatus::no;
            verdict.witness = TuWitness{row_sets[static_cast<size_t>(best_ri)],
                                        best_cols, best_det};
            return verdict;
        }
    }
    verdict.status = TuStatus::yes;
    return verdict;
}

}  // namespace

TuVerdict is_totally_unimodular(const IncidenceMatrix& m, std::uint64_t work_cap) {
    return tu_scan(m, work_cap, true);
}

TuVerdict is_totally_unimodular_serial(const IncidenceMatrix& m,
                                       std::uint64_t work_cap) {
    return tu_scan(m, work_cap, false);
}

}  // namespace ehrgraph
