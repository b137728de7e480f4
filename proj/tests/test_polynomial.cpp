#include <doctest.h>

#include "ehrgraph/polynomial.hpp"
#include "ehrgraph/series.hpp"

using namespace ehrgraph;

namespace {
Poly P(std::vector<int> coeffs) {
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    return Poly(std::move(c));
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly a = P({1, 2});       // 1 + 2x
    Poly b = P({0, 0, 3});    // 3x^2
    CHECK((a + b) == P({1, 2, 3}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK((a * b) == P({0, 0, 3, 6}));
    CHECK(a.eval(Rat(2)) == 5);
    CHECK(Poly::one_minus_x_pow(2) == P({1, 0, -1}));
    CHECK(Poly::one_minus_x_pow(1).pow(2) == P({1, -2, 1}));
}

TEST_CASE("divmod and exact division") {
    Poly n = P({1, 0, -1});  // (1-x)(1+x)
    auto [q, r] = Poly::divmod(n, P({1, -1}));
    CHECK(r.is_zero());
    CHECK(q == P({1, 1}));
    CHECK_THROWS(P({1, 1, 1}).div_exact(P({1, -1})));
    // random-ish round trip a = q*b + r
    Poly a = P({3, -7, 0, 2, 5});
    Poly b = P({1, 2, -1});
    auto [q2, r2] = Poly::divmod(a, b);
    CHECK(q2 * b + r2 == a);
    CHECK(r2.degree() < b.degree());
}

TEST_CASE("gcd is monic and divides both") {
    Poly g = P({1, 1});                 // 1+x
    Poly a = g * P({1, -1});
    Poly b = g * P({2, 0, 1});
    Poly d = Poly::gcd(a, b);
    CHECK(d == g);
    CHECK((a.div_exact(d) * d) == a);
    CHECK((b.div_exact(d) * d) == b);
    CHECK(Poly::gcd(P({2}), P({0})) == Poly::one());  // monic normalization
}

TEST_CASE("palindromicity matches the worked numerators") {
    CHECK(is_palindromic(P({1, 8, 15, 8, 1})));
    CHECK_FALSE(is_palindromic(P({1, 6, 4})));
    CHECK(is_palindromic(P({1})));
    CHECK(P({1, 6, 4}).reversed() == P({4, 6, 1}));
}

TEST_CASE("power series expansion of 1/(1-x)^3") {
    RationalFn f{Poly::one(), Poly::one_minus_x_pow(1).pow(3)};
    auto c = expand_series(f, 4);
    // binomial C(n+2,2)
    CHECK(c[0] == 1);
    CHECK(c[1] == 3);
    CHECK(c[2] == 6);
    CHECK(c[3] == 10);
    CHECK(c[4] == 15);
}

TEST_CASE("polynomial display") {
    CHECK(P({1, 6, 4}).str() == "1 + 6x + 4x^2");
    CHECK(P({1, -1}).str() == "1 - x");
    CHECK(Poly().str() == "0");
}
