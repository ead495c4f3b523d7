#pragma once

#include <mutex>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

// The linear-functional pairing <f(t)|p(x)>: with p = sum c_n x^n this is
// sum c_n a_n, since <f|x^n> = a_n. Requires trunc(f) >= deg(p); a shorter
// series would silently drop terms, so that case throws.
BigRat pair(const EgfSeries& f, const Poly& p);

// The operator action f(t) p(x) = sum_k (a_k/k!) p^{(k)}(x).
Poly apply(const EgfSeries& f, const Poly& p);

// The series with a_k = values[k]; inverse of coefficient extraction.
EgfSeries reconstruct_series(const std::vector<BigRat>& values);

// An Appell family: the polynomials s_n(x) = g(t)^{-1} x^n for an
// invertible series g. Computed polynomials are memoized; concurrent
// access is synchronized internally.
class AppellFamily {
public:
    explicit AppellFamily(EgfSeries g);

    const EgfSeries& g() const { return g_; }
    const EgfSeries& g_inv() const { return g_inv_; }
    unsigned trunc() const { return g_.trunc(); }

    // s_n(x) = apply(g^{-1}, x^n); monic of degree n.
    Poly poly(unsigned n) const;

    // s_{n+1} via the operator recurrence s_{n+1} = (x - g'(t)/g(t)) s_n,
    // an independent route that must agree with poly(n+1).
    Poly step(unsigned n) const;

    // Coordinates d_k = <g t^k|p>/k! with p = sum d_k s_k.
    std::vector<BigRat> expand_poly(const Poly& p) const;

    // Coordinates e_k = <h|s_k>/k! with h = sum e_k g t^k through trunc.
    std::vector<BigRat> expand_functional(const EgfSeries& h) const;

    // True iff the EGF coefficients of g^{-1} e^{yt} equal s_k(y), k <= T.
    bool generating_check(const BigRat& y, unsigned T) const;

private:
    EgfSeries g_;
    EgfSeries g_inv_;
    mutable std::mutex mu_;
    mutable std::vector<Poly> polys_;
};

}  // namespace umbral
