#include "umbral/pairing.hpp"

namespace umbral {

BigRat pair(const EgfSeries& f, const Poly& p) {
    if (p.is_zero()) return BigRat(0);
    if (static_cast<int>(f.trunc()) < p.degree())
        throw TruncationExhausted("pairing needs trunc(f) >= deg(p)");
    BigRat acc(0);
    for (int n = 0; n <= p.degree(); ++n) acc += p.coeff(n) * f.coeff(n);
    return acc;
}

Poly apply(const EgfSeries& f, const Poly& p) {
    if (p.is_zero()) return Poly::zero();
    if (static_cast<int>(f.trunc()) < p.degree())
        throw TruncationExhausted("operator action needs trunc(f) >= deg(p)");
    Poly acc;
    for (int k = 0; k <= p.degree(); ++k) {
        if (f.coeff(k) == 0) continue;
        acc = acc + p.derivative(k) * (f.coeff(k) / BigRat(factorial(k)));
    }
    return acc;
}

EgfSeries reconstruct_series(const std::vector<BigRat>& values) {
    return EgfSeries(values);
}

AppellFamily::AppellFamily(EgfSeries g) : g_(std::move(g)), g_inv_(g_.inverse()) {}

Poly AppellFamily::poly(unsigned n) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (polys_.size() <= n) {
        unsigned m = static_cast<unsigned>(polys_.size());
        if (m > trunc()) throw TruncationExhausted("Appell polynomial degree exceeds series truncation");
        polys_.push_back(apply(g_inv_, Poly::monomial(m)));
    }
    return polys_[n];
}

Poly AppellFamily::step(unsigned n) const {
    if (n + 2 > trunc()) throw TruncationExhausted("operator recurrence needs trunc(g) >= n+2");
    Poly sn = poly(n);
    EgfSeries log_deriv = g_.derivative() * g_inv_.truncate(trunc() - 1);
    return sn.mul_x() - apply(log_deriv, sn);
}

std::vector<BigRat> AppellFamily::expand_poly(const Poly& p) const {
    if (p.is_zero()) return {};
    int d = p.degree();
    if (static_cast<int>(trunc()) < d)
        throw TruncationExhausted("expansion needs trunc(g) >= deg(p)");
    std::vector<BigRat> out(d + 1);
    for (int k = 0; k <= d; ++k)
        out[k] = pair(g_ * EgfSeries::t_power(k, trunc()), p) / BigRat(factorial(k));
    return out;
}

std::vector<BigRat> AppellFamily::expand_functional(const EgfSeries& h) const {
    unsigned T = std::min(trunc(), h.trunc());
    std::vector<BigRat> out(T + 1);
    for (unsigned k = 0; k <= T; ++k)
        out[k] = pair(h, poly(k)) / BigRat(factorial(k));
    return out;
}

bool AppellFamily::generating_check(const BigRat& y, unsigned T) const {
    if (T > trunc()) throw TruncationExhausted("generating check beyond series truncation");
    EgfSeries gen = g_inv_ * EgfSeries::exp_linear(y, T);
    for (unsigned k = 0; k <= T; ++k)
        if (gen.coeff(k) != poly(k).eval(y)) return false;
    return true;
}

}  // namespace umbral
