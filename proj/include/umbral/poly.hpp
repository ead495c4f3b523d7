#pragma once

#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

// Dense univariate polynomial over BigRat. Canonical form trims trailing
// zero coefficients; the zero polynomial is the empty coefficient vector
// and reports degree kNegInfDegree.
class Poly {
public:
    static constexpr int kNegInfDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const BigRat& c) { return Poly({c}); }
    // x^n
    static Poly monomial(unsigned n, const BigRat& c = BigRat(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of x^k, zero beyond the stored degree.
    const BigRat& coeff(unsigned k) const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat eval(const BigRat& y) const;
    Poly derivative(unsigned k = 1) const;
    // p(x+y) expanded in powers of x.
    Poly shift(const BigRat& y) const;
    // x * p(x)
    Poly mul_x() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const BigRat& s) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const { return *this * BigRat(-1); }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Human-readable, e.g. "x^2 - 3/2*x + 1/4".
    std::string to_string() const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

}  // namespace umbral
