// Dense univariate polynomials with exact rational coefficients, and
// quotients of them. The coefficient vector is indexed by degree with
// trailing zeros trimmed; the zero polynomial has degree -1.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ehrgraph/rational.hpp"

namespace ehrgraph {

class Poly {
public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs);  // index = degree

    static Poly one() { return Poly(Rat(1)); }
    // 1 - x^q
    static Poly one_minus_x_pow(int q);
    // 1 + x
    static Poly one_plus_x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of x^i; zero beyond the degree.
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int e) const;
    Rat eval(const Rat& x) const;

    // (quotient, remainder) with deg(rem) < deg(divisor).
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Division that must be exact; throws std::invalid_argument otherwise.
    Poly div_exact(const Poly& b) const;
    // Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b);

    // x^deg * p(1/x): the coefficient list reversed.
    Poly reversed() const;
    bool all_integer_coeffs() const;
    bool all_nonnegative_coeffs() const;

    // Human form, e.g. "1 + 6x + 4x^2".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// num/den with the canonical normalization den(0) = 1.
struct RationalFn {
    Poly num;
    Poly den;
};

// Coefficient list of the power series num/den up to x^n_max.
// Requires den(0) != 0.
std::vector<Rat> expand_series(const RationalFn& f, int n_max);

}  // namespace ehrgraph
