#include "ehrgraph/series.hpp"

#include <stdexcept>

namespace ehrgraph {

CandidateDenominator candidate_denominator(const std::vector<Int>& dens, int k) {
    if (dens.empty())
        throw std::invalid_argument("candidate_denominator: empty denominator multiset");
    Int sum = 0;
    Int L = 1;
    for (const auto& d : dens) {
        sum += d;
        L = lcm(L, d);
    }
    const Int deg_product = sum;
    const Int deg_power = L * (k + 1);
    CandidateDenominator out;
    if (deg_product <= deg_power) {
        out.rule = DenominatorRule::vertex_product;
        out.poly = Poly::one();
        for (const auto& d : dens)
            out.poly = out.poly * Poly::one_minus_x_pow(static_cast<int>(d));
    } else {
        out.rule = DenominatorRule::lcm_power;
        out.poly = Poly::one_minus_x_pow(static_cast<int>(L)).pow(k + 1);
    }
    return out;
}

RationalFn fit_series(const CountSequence& counts, const Poly& t, int margin) {
    const int dt = t.degree();
    const int need = dt + 1 + margin;
    if (static_cast<int>(counts.values.size()) < need)
        throw std::invalid_argument("fit_series: need " + std::to_string(need) +
                                    " counts, have " +
                                    std::to_string(counts.values.size()));
    // convolution t(x) * sum counts[n] x^n, up to degree dt + margin
    std::vector<Rat> prod(static_cast<size_t>(dt + margin) + 1, Rat(0));
    for (int n = 0; n <= dt + margin; ++n) {
        Rat acc = 0;
        for (int i = std::max(0, n - dt); i <= n; ++i)
            acc += Rat(counts.values[static_cast<size_t>(i)]) * t.coeff(n - i);
        prod[static_cast<size_t>(n)] = acc;
    }
    for (int n = dt + 1; n <= dt + margin; ++n)
        if (prod[static_cast<size_t>(n)] != 0)
            throw std::runtime_error(
                "denominator hypothesis rejected: residual coefficient at degree " +
                std::to_string(n) + " is nonzero");
    prod.resize(static_cast<size_t>(dt) + 1);
    Poly num{std::move(prod)};
    if (num.degree() > dt - 1)
        throw std::runtime_error(
            "denominator hypothesis rejected: numerator degree not below denominator");
    return RationalFn{std::move(num), t};
}

RationalFn reduce_lowest_terms(const RationalFn& r) {
    Poly g = Poly::gcd(r.num, r.den);
    Poly num = r.num;
    Poly den = r.den;
    if (!g.is_zero() && g.degree() > 0) {
        num = num.div_exact(g);
        den = den.div_exact(g);
    }
    const Rat d0 = den.coeff(0);
    if (d0 == 0)
        throw std::runtime_error("reduced denominator vanishes at 0");
    num = num * (Rat(1) / d0);
    den = den * (Rat(1) / d0);
    return RationalFn{std::move(num), std::move(den)};
}

DenominatorShape factor_shape(const Poly& q) {
    DenominatorShape shape;
    shape.remainder = q;
    const Poly one_minus_x = Poly::one_minus_x_pow(1);
    const Poly one_plus_x = Poly::one_plus_x();
    while (!shape.remainder.is_zero() && shape.remainder.eval(Rat(1)) == 0) {
        shape.remainder = shape.remainder.div_exact(one_minus_x);
        ++shape.mult_1mx;
    }
    while (!shape.remainder.is_zero() && shape.remainder.eval(Rat(-1)) == 0) {
        shape.remainder = shape.remainder.div_exact(one_plus_x);
        ++shape.mult_1px;
    }
    return shape;
}

DenominatorShape denominator_shape(const Poly& q, int k) {
    if (q.coeff(0) != 1)
        throw std::invalid_argument("denominator_shape: q(0) must be 1");
    DenominatorShape shape = factor_shape(q);
    if (shape.mult_1mx != k + 1)
        throw std::runtime_error("pole-order violation: (1-x) multiplicity " +
                                 std::to_string(shape.mult_1mx) + ", expected " +
                                 std::to_string(k + 1));
    return shape;
}

bool is_palindromic(const Poly& m) {
    if (m.is_zero())
        throw std::invalid_argument("is_palindromic: zero polynomial");
    return m == m.reversed();
}

bool check_reciprocity(const RationalFn& r, int k, int s) {
    // With r = M/Q: x^{s+1} M/Q = (-1)^{k+1} M(1/x)/Q(1/x). Substituting
    // M(1/x) = M*(x)/x^{deg M}, Q(1/x) = Q*(x)/x^{deg Q} and clearing gives
    //   x^{s+1+deg M} M(x) Q*(x) = (-1)^{k+1} x^{deg Q} M*(x) Q(x).
    const Poly& M = r.num;
    const Poly& Q = r.den;
    if (M.is_zero()) return false;
    Poly lhs = M * Q.reversed();
    {
        std::vector<Rat> shift(static_cast<size_t>(s + 1 + M.degree()) + 1, Rat(0));
        shift.back() = 1;
        lhs = lhs * Poly(std::move(shift));
    }
    Poly rhs = M.reversed() * Q;
    {
        std::vector<Rat> shift(static_cast<size_t>(Q.degree()) + 1, Rat(0));
        shift.back() = 1;
        rhs = rhs * Poly(std::move(shift));
    }
    if ((k + 1) % 2 != 0) rhs = rhs * Rat(-1);
    return lhs == rhs;
}

GraphReport graph_report(const RationalFn& r, int k, bool bipartite) {
    GraphReport rep;
    DenominatorShape shape = factor_shape(r.den);
    rep.s = shape.mult_1px;
    const int s = rep.s;

    rep.verdicts["pole_order_k_plus_1"] =
        shape.mult_1mx == k + 1 ? Verdict::pass : Verdict::fail;
    if (shape.remainder != Poly::one()) {
        rep.verdicts["denominator_shape"] = Verdict::fail;  // unexpected factor
        rep.numerator = r.num;
        return rep;
    }
    rep.verdicts["denominator_shape"] = Verdict::pass;

    // H(x) = num * (1-x)^{k+1} (1+x)^s / den; exact when the shape matches.
    const Poly target =
        Poly::one_minus_x_pow(1).pow(k + 1) * Poly::one_plus_x().pow(s);
    rep.numerator = (r.num * target).div_exact(r.den);

    rep.verdicts["numerator_palindromic"] =
        is_palindromic(rep.numerator) ? Verdict::pass : Verdict::fail;
    rep.verdicts["numerator_degree_k_plus_s_minus_2"] =
        rep.numerator.degree() == k + s - 2 ? Verdict::pass : Verdict::fail;
    if (bipartite) {
        rep.verdicts["bipartite_s_zero"] = s == 0 ? Verdict::pass : Verdict::fail;
        rep.verdicts["bipartite_degree_k_minus_2"] =
            rep.numerator.degree() == k - 2 ? Verdict::pass : Verdict::fail;
    }
    return rep;
}

VerdictMap uniform_report(const RationalFn& r, int k, int s, bool unimodular) {
    VerdictMap v;
    v["numerator_palindromic"] =
        is_palindromic(r.num) ? Verdict::pass : Verdict::fail;
    v["numerator_degree_degQ_minus_s_plus_1"] =
        r.num.degree() == r.den.degree() - (s + 1) ? Verdict::pass : Verdict::fail;
    if (unimodular) {
        v["unimodular_denominator_1mx_k_plus_1"] =
            r.den == Poly::one_minus_x_pow(1).pow(k + 1) ? Verdict::pass
                                                         : Verdict::fail;
        v["unimodular_degree_k_minus_s"] =
            r.num.degree() == k - s ? Verdict::pass : Verdict::fail;
    }
    return v;
}

Rat normalized_volume(const RationalFn& r, int k) {
    DenominatorShape shape = factor_shape(r.den);
    if (shape.mult_1mx != k + 1)
        throw std::runtime_error("normalized_volume: (1-x) pole order " +
                                 std::to_string(shape.mult_1mx) + " != " +
                                 std::to_string(k + 1));
    // ((1-x)^{k+1} r)(1) = num(1) / ((1+x)^{mult} remainder)(1)
    Rat rest = shape.remainder.eval(Rat(1));
    for (int i = 0; i < shape.mult_1px; ++i) rest *= 2;
    return r.num.eval(Rat(1)) / rest / Rat(factorial(k));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "n/a";
    }
    return "?";
}

}  // namespace ehrgraph
