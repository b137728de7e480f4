#include <doctest.h>

#include "corpus.hpp"
#include "ehrgraph/analysis.hpp"
#include "ehrgraph/series.hpp"

using namespace ehrgraph;
namespace et = ehrgraph::testing;

namespace {
Poly P(std::vector<int> coeffs) {
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return Poly(std::move(c));
}
Poly pow1mx(int e) { return Poly::one_minus_x_pow(1).pow(e); }
}  // namespace

TEST_CASE("candidate denominator picks the cheaper form") {
    auto a = candidate_denominator({Int(1), Int(1), Int(1)}, 2);
    CHECK(a.poly == pow1mx(3));
    CHECK(a.rule == DenominatorRule::vertex_product);

    auto b = candidate_denominator(std::vector<Int>(6, Int(1)), 5);
    CHECK(b.poly == pow1mx(6));

    auto c = candidate_denominator({Int(1), Int(1), Int(2)}, 2);
    CHECK(c.poly == pow1mx(2) * Poly::one_minus_x_pow(2));
    CHECK(c.rule == DenominatorRule::vertex_product);

    // many den-2 vertices make the lcm power cheaper
    auto d = candidate_denominator(std::vector<Int>(20, Int(2)), 3);
    CHECK(d.rule == DenominatorRule::lcm_power);
    CHECK(d.poly == Poly::one_minus_x_pow(2).pow(4));
}

TEST_CASE("fit the simplex series") {
    CountSequence counts;
    for (int n = 0; n <= 13; ++n)
        counts.values.push_back(Int((n + 1) * (n + 2) / 2));
    RationalFn f = fit_series(counts, pow1mx(3));
    CHECK(f.num == Poly::one());
}

TEST_CASE("fit figure 1 counts") {
    // frozen from the brute-force counts 1, 11, 54, 179, ...
    auto counts = count_sequence(build_polytope(et::fig1()), 16);
    CHECK(counts.values[1] == 11);
    CHECK(counts.values[2] == 54);
    CHECK(counts.values[3] == 179);
    RationalFn f = fit_series(counts, pow1mx(6));
    CHECK(f.num == P({1, 5, 3}));
}

TEST_CASE("figure 2 reduces to the worked series") {
    EhrhartAnalysis a = analyze(et::fig2());
    CHECK(a.series.num == P({1, 8, 15, 8, 1}));
    CHECK(a.series.den == pow1mx(6) * Poly::one_minus_x_pow(2));
}

TEST_CASE("fit rejects a wrong denominator hypothesis") {
    auto counts = count_sequence(build_polytope(et::fig1()), 15);
    CHECK_THROWS(fit_series(counts, pow1mx(5)));
    CHECK_THROWS(fit_series(counts, pow1mx(20)));  // too few counts
}

TEST_CASE("lowest-terms reduction") {
    // (1-x^2)/((1-x)(1-x^2)) -> 1/(1-x)
    RationalFn f{Poly::one_minus_x_pow(2),
                 Poly::one_minus_x_pow(1) * Poly::one_minus_x_pow(2)};
    RationalFn r = reduce_lowest_terms(f);
    CHECK(r.num == Poly::one());
    CHECK(r.den == P({1, -1}));

    // ((1+x)(1+2x))/((1+x)(1-x)^2) -> (1+2x)/(1-x)^2
    RationalFn g{Poly::one_plus_x() * P({1, 2}), Poly::one_plus_x() * pow1mx(2)};
    RationalFn s = reduce_lowest_terms(g);
    CHECK(s.num == P({1, 2}));
    CHECK(s.den == pow1mx(2));

    // equal as rational functions, and the result is actually coprime
    CHECK(s.num * g.den == s.den * g.num);
    CHECK(Poly::gcd(s.num, s.den).degree() <= 0);
    // reduction undone: the removed gcd divides both inputs exactly
    Poly gcd_removed = Poly::gcd(g.num, g.den);
    CHECK(g.num.div_exact(gcd_removed) * gcd_removed == g.num);
    CHECK(g.den.div_exact(gcd_removed) * gcd_removed == g.den);
}

TEST_CASE("denominator shapes of the worked examples") {
    auto s1 = denominator_shape(pow1mx(6), 5);
    CHECK(s1.mult_1mx == 6);
    CHECK(s1.mult_1px == 0);
    CHECK(s1.remainder == Poly::one());

    auto s2 = denominator_shape(pow1mx(6) * Poly::one_minus_x_pow(2), 6);
    CHECK(s2.mult_1mx == 7);
    CHECK(s2.mult_1px == 1);
    CHECK(s2.remainder == Poly::one());

    auto s3 = denominator_shape(pow1mx(2) * P({1, 1, 1}), 1);
    CHECK(s3.mult_1mx == 2);
    CHECK(s3.mult_1px == 0);
    CHECK(s3.remainder == P({1, 1, 1}));

    CHECK_THROWS(denominator_shape(pow1mx(3), 5));  // pole-order violation
}

TEST_CASE("reciprocity on the worked instances") {
    // Figure 2
    RationalFn fig2{P({1, 8, 15, 8, 1}), pow1mx(6) * Poly::one_minus_x_pow(2)};
    CHECK(check_reciprocity(fig2, 6, 3));
    // K2: 1/(1-x)^3 with k = s = 2
    CHECK(check_reciprocity(RationalFn{Poly::one(), pow1mx(3)}, 2, 2));
    // corrupted numerator breaks the identity
    RationalFn bad{P({1, 7, 15, 8, 1}), pow1mx(6) * Poly::one_minus_x_pow(2)};
    CHECK_FALSE(check_reciprocity(bad, 6, 3));
}

TEST_CASE("graph report: C4, C5, P3") {
    {
        EhrhartAnalysis a = analyze(generate_family(Family::cycle, {4}));
        GraphReport g = graph_report(a.series, 4, true);
        CHECK(g.s == 0);
        CHECK(g.numerator.degree() == 2);
        CHECK(g.verdicts.at("numerator_palindromic") == Verdict::pass);
        CHECK(g.verdicts.at("bipartite_s_zero") == Verdict::pass);
    }
    {
        EhrhartAnalysis a = analyze(generate_family(Family::cycle, {5}));
        GraphReport g = graph_report(a.series, 5, false);
        CHECK(g.s == 1);
        CHECK(a.series.den == pow1mx(6) * Poly::one_plus_x());
        CHECK(g.numerator.degree() == 4);
        CHECK(g.verdicts.at("numerator_palindromic") == Verdict::pass);
        CHECK(g.verdicts.at("numerator_degree_k_plus_s_minus_2") == Verdict::pass);
    }
    {
        EhrhartAnalysis a = analyze(generate_family(Family::path, {3}));
        GraphReport g = graph_report(a.series, 3, true);
        CHECK(g.s == 0);
        CHECK(g.numerator == P({1, 1}));
        CHECK(g.verdicts.at("bipartite_degree_k_minus_2") == Verdict::pass);
    }
}

TEST_CASE("uniform report: figure 2, loop, C3") {
    {
        RationalFn fig2{P({1, 8, 15, 8, 1}), pow1mx(6) * Poly::one_minus_x_pow(2)};
        auto v = uniform_report(fig2, 6, 3, false);
        CHECK(v.at("numerator_palindromic") == Verdict::pass);
        CHECK(v.at("numerator_degree_degQ_minus_s_plus_1") == Verdict::pass);
    }
    {
        // single loop: 1/(1-x)^2, k = s = 1, unimodular
        RationalFn loop{Poly::one(), pow1mx(2)};
        auto v = uniform_report(loop, 1, 1, true);
        for (const auto& [name, verdict] : v) {
            CAPTURE(name);
            CHECK(verdict == Verdict::pass);
        }
    }
    {
        EhrhartAnalysis a = analyze(generate_family(Family::cycle, {3}));
        CHECK(a.series.den.degree() == 5);
        CHECK(a.series.num.degree() == 2);
        auto v = uniform_report(a.series, 3, 2, false);
        CHECK(v.at("numerator_palindromic") == Verdict::pass);
        CHECK(v.at("numerator_degree_degQ_minus_s_plus_1") == Verdict::pass);
    }
}

TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(RationalFn{Poly::one(), pow1mx(3)}, 2) == Rat(1, 2));
    CHECK(normalized_volume(RationalFn{Poly::one(), pow1mx(2)}, 1) == 1);
    CHECK(normalized_volume(RationalFn{P({1, 6, 4}), pow1mx(6)}, 5) == Rat(11, 120));
    CHECK_THROWS(normalized_volume(RationalFn{Poly::one(), pow1mx(3)}, 5));
}
