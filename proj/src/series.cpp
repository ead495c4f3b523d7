#include "umbral/series.hpp"

#include <algorithm>

namespace umbral {

EgfSeries::EgfSeries(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

EgfSeries EgfSeries::constant(const BigRat& c, unsigned trunc) {
    EgfSeries s(trunc);
    s.coeffs_[0] = c;
    return s;
}

EgfSeries EgfSeries::t_power(unsigned k, unsigned trunc) {
    EgfSeries s(trunc);
    if (k <= trunc) s.coeffs_[k] = BigRat(factorial(k));
    return s;
}

EgfSeries EgfSeries::exp_linear(const BigRat& y, unsigned trunc) {
    EgfSeries s(trunc);
    BigRat pw(1);
    for (unsigned k = 0; k <= trunc; ++k) {
        s.coeffs_[k] = pw;
        pw *= y;
    }
    return s;
}

std::optional<unsigned> EgfSeries::order() const {
    for (unsigned k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return std::nullopt;
}

EgfSeries EgfSeries::truncate(unsigned new_trunc) const {
    if (new_trunc > trunc()) throw TruncationExhausted("cannot extend a truncated series");
    return EgfSeries(std::vector<BigRat>(coeffs_.begin(), coeffs_.begin() + new_trunc + 1));
}

EgfSeries EgfSeries::operator+(const EgfSeries& o) const {
    unsigned T = std::min(trunc(), o.trunc());
    EgfSeries s(T);
    for (unsigned k = 0; k <= T; ++k) s.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return s;
}

EgfSeries EgfSeries::operator-(const EgfSeries& o) const {
    unsigned T = std::min(trunc(), o.trunc());
    EgfSeries s(T);
    for (unsigned k = 0; k <= T; ++k) s.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return s;
}

EgfSeries EgfSeries::operator*(const BigRat& c) const {
    EgfSeries s(*this);
    for (auto& a : s.coeffs_) a *= c;
    return s;
}

EgfSeries EgfSeries::operator*(const EgfSeries& o) const {
    unsigned T = std::min(trunc(), o.trunc());
    EgfSeries s(T);
    for (unsigned n = 0; n <= T; ++n) {
        BigRat acc(0);
        for (unsigned k = 0; k <= n; ++k) {
            if (coeffs_[k] == 0 || o.coeffs_[n - k] == 0) continue;
            acc += BigRat(binomial(n, k)) * coeffs_[k] * o.coeffs_[n - k];
        }
        s.coeffs_[n] = acc;
    }
    return s;
}

EgfSeries EgfSeries::inverse() const {
    if (coeffs_[0] == 0) throw NotInvertible();
    unsigned T = trunc();
    EgfSeries g(T);
    g.coeffs_[0] = 1 / coeffs_[0];
    // (fg)_n = 0 for n >= 1 solved for g_n
    for (unsigned n = 1; n <= T; ++n) {
        BigRat acc(0);
        for (unsigned k = 1; k <= n; ++k)
            acc += BigRat(binomial(n, k)) * coeffs_[k] * g.coeffs_[n - k];
        g.coeffs_[n] = -acc / coeffs_[0];
    }
    return g;
}

EgfSeries EgfSeries::pow(unsigned r) const {
    EgfSeries acc = one(trunc());
    for (unsigned i = 0; i < r; ++i) acc = acc * *this;
    return acc;
}

EgfSeries EgfSeries::derivative() const {
    if (trunc() == 0) throw TruncationExhausted("derivative of a series truncated at order 0");
    EgfSeries s(trunc() - 1);
    for (unsigned k = 0; k < coeffs_.size() - 1; ++k) s.coeffs_[k] = coeffs_[k + 1];
    return s;
}

EgfSeries EgfSeries::compose(const EgfSeries& inner) const {
    if (inner.coeffs_[0] != 0) throw CompositionOrderError();
    unsigned T = std::min(trunc(), inner.trunc());
    EgfSeries h = inner.truncate(T);
    // Horner: f(h) = f_0/0! + h*(f_1/1! + h*(f_2/2! + ...))
    EgfSeries acc = constant(coeffs_[T] / BigRat(factorial(T)), T);
    for (int k = static_cast<int>(T) - 1; k >= 0; --k) {
        acc = acc * h;
        acc.coeffs_[0] += coeffs_[k] / BigRat(factorial(k));
    }
    return acc;
}

EgfSeries EgfSeries::comp_inverse() const {
    if (order() != 1) throw NotDeltaSeries();
    unsigned T = trunc();
    EgfSeries g(T);
    g.coeffs_[1] = 1 / coeffs_[1];
    // Degree-by-degree: with g fixed below n, the coefficient of t^n in
    // f(g) is affine in g_n with slope f_1.
    for (unsigned n = 2; n <= T; ++n) {
        EgfSeries probe = compose(g.truncate(n));
        BigRat target = n == 1 ? BigRat(1) : BigRat(0);
        g.coeffs_[n] = (target - probe.coeff(n)) / coeffs_[1];
    }
    return g;
}

bool EgfSeries::agrees_with(const EgfSeries& o) const {
    unsigned T = std::min(trunc(), o.trunc());
    for (unsigned k = 0; k <= T; ++k)
        if (coeffs_[k] != o.coeffs_[k]) return false;
    return true;
}

std::string EgfSeries::to_string() const {
    std::string s = "[";
    for (unsigned k = 0; k < coeffs_.size(); ++k) {
        if (k) s += ", ";
        s += rat_to_string(coeffs_[k]);
    }
    return s + "]";
}

}  // namespace umbral
