#include "umbral/poly.hpp"

#include <algorithm>

namespace umbral {

namespace {
const BigRat kZero(0);
}

Poly Poly::monomial(unsigned n, const BigRat& c) {
    std::vector<BigRat> cs(n + 1, BigRat(0));
    cs[n] = c;
    return Poly(std::move(cs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& Poly::coeff(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigRat Poly::eval(const BigRat& y) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

Poly Poly::derivative(unsigned k) const {
    if (k == 0) return *this;
    if (static_cast<int>(k) > degree()) return zero();
    std::vector<BigRat> out(coeffs_.size() - k);
    for (size_t j = 0; j < out.size(); ++j) {
        // falling factorial (j+k)(j+k-1)...(j+1)
        BigInt ff(1);
        for (size_t i = j + 1; i <= j + k; ++i) ff *= static_cast<unsigned long>(i);
        out[j] = coeffs_[j + k] * BigRat(ff);
    }
    return Poly(std::move(out));
}

Poly Poly::shift(const BigRat& y) const {
    if (y == 0 || is_zero()) return *this;
    std::vector<BigRat> out(coeffs_.size(), BigRat(0));
    for (size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] == 0) continue;
        BigRat ypow(1);
        for (size_t k = 0; k <= n; ++k) {
            // coefficient of x^{n-k} in c_n (x+y)^n, walking k upward
            out[n - k] += coeffs_[n] * BigRat(binomial(n, k)) * ypow;
            ypow *= y;
        }
    }
    return Poly(std::move(out));
}

Poly Poly::mul_x() const {
    if (is_zero()) return zero();
    std::vector<BigRat> out;
    out.reserve(coeffs_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<BigRat> out(std::max(coeffs_.size(), o.coeffs_.size()), BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const BigRat& s) const {
    if (s == 0) return zero();
    std::vector<BigRat> out(coeffs_);
    for (auto& c : out) c *= s;
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<BigRat> out(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int n = degree(); n >= 0; --n) {
        const BigRat& c = coeffs_[n];
        if (c == 0) continue;
        BigRat a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (n == 0) {
            s += rat_to_string(a);
        } else {
            if (a != 1) s += rat_to_string(a) + "*";
            s += n == 1 ? "x" : "x^" + std::to_string(n);
        }
    }
    return s;
}

}  // namespace umbral
