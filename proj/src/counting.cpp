#include "ehrgraph/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ehrgraph/parallel.hpp"

namespace ehrgraph {

namespace {

struct DfsPlan {
    // variables in visit order (0-based column indices)
    std::vector<int> order;
    // per visit position: rows where the variable appears with +1 / -1
    std::vector<std::vector<int>> plus_rows;
    std::vector<std::vector<int>> minus_rows;
};

DfsPlan make_plan(const HRep& p) {
    DfsPlan plan;
    std::vector<int> degree(static_cast<size_t>(p.k), 0);
    for (const auto& row : p.rows) {
        if (row.kind != RowKind::incidence) continue;
        for (int j = 0; j < p.k; ++j)
            if (row.coeffs[static_cast<size_t>(j)] == 1)
                ++degree[static_cast<size_t>(j)];
    }
    plan.order.resize(static_cast<size_t>(p.k));
    std::iota(plan.order.begin(), plan.order.end(), 0);
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
        return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)];
    });
    plan.plus_rows.resize(static_cast<size_t>(p.k));
    plan.minus_rows.resize(static_cast<size_t>(p.k));
    for (size_t pos = 0; pos < plan.order.size(); ++pos) {
        const int j = plan.order[pos];
        for (size_t ri = 0; ri < p.rows.size(); ++ri) {
            const int c = p.rows[ri].coeffs[static_cast<size_t>(j)];
            if (c == 1) plan.plus_rows[pos].push_back(static_cast<int>(ri));
            else if (c == -1) plan.minus_rows[pos].push_back(static_cast<int>(ri));
        }
    }
    return plan;
}

void var_bounds(const DfsPlan& plan, const std::vector<long long>& residual,
                size_t pos, long long& lo, long long& hi) {
    lo = 0;
    hi = -1;
    bool have_hi = false;
    for (int ri : plan.plus_rows[pos]) {
        const long long r = residual[static_cast<size_t>(ri)];
        if (!have_hi || r < hi) { hi = r; have_hi = true; }
    }
    if (!have_hi) throw std::runtime_error("variable with no upper bound; polytope unbounded");
    for (int ri : plan.minus_rows[pos])
        lo = std::max(lo, -residual[static_cast<size_t>(ri)]);
}

Int dfs_count(const DfsPlan& plan, std::vector<long long>& residual, size_t pos) {
    long long lo, hi;
    var_bounds(plan, residual, pos, lo, hi);
    if (lo > hi) return 0;
    if (pos + 1 == plan.order.size()) return Int(hi - lo + 1);
    Int total = 0;
    for (long long v = lo; v <= hi; ++v) {
        for (int ri : plan.plus_rows[pos]) residual[static_cast<size_t>(ri)] -= v;
        for (int ri : plan.minus_rows[pos]) residual[static_cast<size_t>(ri)] += v;
        total += dfs_count(plan, residual, pos + 1);
        for (int ri : plan.plus_rows[pos]) residual[static_cast<size_t>(ri)] += v;
        for (int ri : plan.minus_rows[pos]) residual[static_cast<size_t>(ri)] -= v;
    }
    return total;
}

std::vector<long long> initial_residuals(const HRep& p, long long n) {
    std::vector<long long> residual(p.rows.size());
    for (size_t i = 0; i < p.rows.size(); ++i)
        residual[i] = n * p.rows[i].rhs;
    return residual;
}

}  // namespace

Int count_dilation_serial(const HRep& p, long long n) {
    if (n < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    if (p.k == 0) return 1;
    const DfsPlan plan = make_plan(p);
    auto residual = initial_residuals(p, n);
    return dfs_count(plan, residual, 0);
}

Int count_dilation(const HRep& p, long long n) {
    if (n < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    if (p.k == 0) return 1;
    const int threads = worker_count();
    if (threads <= 1 || p.k == 1) return count_dilation_serial(p, n);

    const DfsPlan plan = make_plan(p);
    const auto base = initial_residuals(p, n);
    long long lo, hi;
    {
        auto residual = base;
        var_bounds(plan, residual, 0, lo, hi);
    }
    if (lo > hi) return 0;
    std::vector<Int> partial(static_cast<size_t>(hi - lo + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (long long v = lo; v <= hi; ++v) {
        auto residual = base;
        for (int ri : plan.plus_rows[0]) residual[static_cast<size_t>(ri)] -= v;
        for (int ri : plan.minus_rows[0]) residual[static_cast<size_t>(ri)] += v;
        partial[static_cast<size_t>(v - lo)] = dfs_count(plan, residual, 1);
    }
    Int total = 0;
    for (const auto& x : partial) total += x;
    return total;
}

Int count_naive(const Hypergraph& h, long long n, std::uint64_t work_cap) {
    if (n < 0) throw std::invalid_argument("dilation factor must be nonnegative");
    Int tuples = 1;
    for (int i = 0; i < h.k; ++i) {
        tuples *= (n + 1);
        if (tuples > Int(work_cap))
            throw std::runtime_error("count_naive: (n+1)^k exceeds work cap");
    }
    std::vector<long long> x(static_cast<size_t>(h.k), 0);
    Int count = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : h.edges) {
            long long s = 0;
            for (int v : e) s += x[static_cast<size_t>(v - 1)];
            if (s > n) { ok = false; break; }
        }
        if (ok) ++count;
        // odometer
        int j = 0;
        while (j < h.k && x[static_cast<size_t>(j)] == n) {
            x[static_cast<size_t>(j)] = 0;
            ++j;
        }
        if (j == h.k) break;
        ++x[static_cast<size_t>(j)];
    }
    return count;
}

CountSequence count_sequence(const HRep& p, long long n_max) {
    CountSequence seq;
    seq.values.reserve(static_cast<size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n)
        seq.values.push_back(count_dilation(p, n));
    return seq;
}

}  // namespace ehrgraph
