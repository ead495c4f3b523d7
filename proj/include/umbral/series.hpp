#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umbral/errors.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Truncated formal power series in t, stored by EGF coefficients:
// f(t) = sum_{k<=T} a_k t^k / k!. Coefficients beyond the truncation are
// unknown, never assumed zero; every operation propagates the minimum
// truncation of its operands.
class EgfSeries {
public:
    // The zero series through truncation T.
    explicit EgfSeries(unsigned trunc) : coeffs_(trunc + 1, BigRat(0)) {}
    explicit EgfSeries(std::vector<BigRat> coeffs);

    static EgfSeries constant(const BigRat& c, unsigned trunc);
    static EgfSeries one(unsigned trunc) { return constant(BigRat(1), trunc); }
    // t^k through truncation T (EGF coefficient a_k = k!).
    static EgfSeries t_power(unsigned k, unsigned trunc);
    // e^{yt}: a_k = y^k.
    static EgfSeries exp_linear(const BigRat& y, unsigned trunc);

    unsigned trunc() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const BigRat& coeff(unsigned k) const { return coeffs_.at(k); }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    // Smallest k with a_k != 0; nullopt when zero through the truncation.
    std::optional<unsigned> order() const;

    // Drops coefficients above new_trunc (new_trunc <= trunc()).
    EgfSeries truncate(unsigned new_trunc) const;

    EgfSeries operator+(const EgfSeries& o) const;
    EgfSeries operator-(const EgfSeries& o) const;
    EgfSeries operator*(const BigRat& s) const;
    // Product of functionals: (fg)_n = sum_k binom(n,k) f_k g_{n-k}.
    EgfSeries operator*(const EgfSeries& o) const;

    // Multiplicative inverse by triangular back-substitution.
    // Throws NotInvertible when a_0 = 0.
    EgfSeries inverse() const;
    EgfSeries pow(unsigned r) const;

    // (df)_k = f_{k+1}; truncation drops by one.
    // Throws TruncationExhausted when trunc() = 0.
    EgfSeries derivative() const;

    // f(h(t)); throws CompositionOrderError unless h has zero constant term.
    EgfSeries compose(const EgfSeries& inner) const;

    // The series fbar with compose(*this, fbar) = t through the truncation.
    // Throws NotDeltaSeries unless order() == 1.
    EgfSeries comp_inverse() const;

    // Equality through the shorter of the two truncations.
    bool agrees_with(const EgfSeries& o) const;
    bool operator==(const EgfSeries& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    std::vector<BigRat> coeffs_;
};

}  // namespace umbral
