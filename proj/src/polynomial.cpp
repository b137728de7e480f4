#include "ehrgraph/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace ehrgraph {

Poly::Poly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::one_minus_x_pow(int q) {
    if (q <= 0) throw std::invalid_argument("one_minus_x_pow: q must be positive");
    std::vector<Rat> c(static_cast<size_t>(q) + 1, Rat(0));
    c[0] = 1;
    c[static_cast<size_t>(q)] = -1;
    return Poly(std::move(c));
}

Poly Poly::one_plus_x() { return Poly(std::vector<Rat>{Rat(1), Rat(1)}); }

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::pow(int e) const {
    Poly r = Poly::one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs_;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<Rat> quot(static_cast<size_t>(dq) + 1, Rat(0));
    const Rat& lead = b.coeffs_.back();
    for (int i = dq; i >= 0; --i) {
        Rat q = rem[static_cast<size_t>(i + db)] / lead;
        if (q == 0) continue;
        quot[static_cast<size_t>(i)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] -= q * b.coeffs_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::invalid_argument("non-exact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.coeffs_.back());  // monic
}

Poly Poly::reversed() const {
    std::vector<Rat> c(coeffs_.rbegin(), coeffs_.rend());
    return Poly(std::move(c));
}

bool Poly::all_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

bool Poly::all_nonnegative_coeffs() const {
    for (const auto& c : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) out << rat_to_string(a);
        if (i >= 1) {
            out << var;
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

std::vector<Rat> expand_series(const RationalFn& f, int n_max) {
    if (f.den.coeff(0) == 0)
        throw std::invalid_argument("expand_series: denominator vanishes at 0");
    const Rat d0 = f.den.coeff(0);
    std::vector<Rat> c(static_cast<size_t>(n_max) + 1, Rat(0));
    for (int n = 0; n <= n_max; ++n) {
        Rat acc = f.num.coeff(n);
        for (int i = 1; i <= std::min(n, f.den.degree()); ++i)
            acc -= f.den.coeff(i) * c[static_cast<size_t>(n - i)];
        c[static_cast<size_t>(n)] = acc / d0;
    }
    return c;
}

}  // namespace ehrgraph
