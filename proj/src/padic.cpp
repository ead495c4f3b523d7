#include "umbral/padic.hpp"

#include <algorithm>

namespace umbral {

void require_odd_prime(unsigned long p) {
    if (p == 2) throw InvalidPrime("p = 2 is excluded; an odd prime is required");
    if (p < 3) throw InvalidPrime("p must be an odd prime, got " + std::to_string(p));
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InvalidPrime(std::to_string(p) + " is composite");
}

namespace {

// Factors p^k out of n (n != 0); returns k and divides n in place.
long strip_prime(BigInt& n, unsigned long p) {
    long k = 0;
    BigInt q, rem;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), p);
        if (rem != 0) return k;
        n = q;
        ++k;
    }
}

BigInt pow_ui(unsigned long p, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

}  // namespace

std::optional<long> rational_valuation(const BigRat& r, unsigned long p) {
    if (r == 0) return std::nullopt;
    BigInt num = r.get_num(), den = r.get_den();
    return strip_prime(num, p) - strip_prime(den, p);
}

PadicNum PadicNum::zero(unsigned long p, long abs_prec) {
    require_odd_prime(p);
    return PadicNum(p, std::nullopt, BigInt(0), abs_prec);
}

PadicNum PadicNum::from_rational(const BigRat& r, unsigned long p, unsigned precision) {
    require_odd_prime(p);
    if (precision == 0) throw std::domain_error("precision must be positive");
    if (r == 0) return zero(p, precision);
    BigInt num = r.get_num(), den = r.get_den();
    long v = strip_prime(num, p) - strip_prime(den, p);
    BigInt modulus = pow_ui(p, precision);
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("denominator not invertible after stripping p");
    BigInt u = (num * den_inv) % modulus;
    if (u < 0) u += modulus;
    return PadicNum(p, v, std::move(u), v + static_cast<long>(precision));
}

// Renormalizes value * p^scale known modulo p^(abs_prec - scale).
PadicNum PadicNum::normalize(unsigned long p, const BigInt& value, long scale, long abs_prec) {
    BigInt n = value;
    long window = abs_prec - scale;
    if (window <= 0) return PadicNum(p, std::nullopt, BigInt(0), abs_prec);
    BigInt modulus = pow_ui(p, static_cast<unsigned long>(window));
    n %= modulus;
    if (n < 0) n += modulus;
    if (n == 0) return PadicNum(p, std::nullopt, BigInt(0), abs_prec);
    long v = scale + strip_prime(n, p);
    BigInt unit_mod = pow_ui(p, static_cast<unsigned long>(abs_prec - v));
    n %= unit_mod;
    return PadicNum(p, v, std::move(n), abs_prec);
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    if (p_ != o.p_) throw PrimeMismatch();
    long abs_prec = std::min(abs_prec_, o.abs_prec_);
    if (is_zero() && o.is_zero()) return PadicNum(p_, std::nullopt, BigInt(0), abs_prec);
    long scale = std::min({v_.value_or(abs_prec), o.v_.value_or(abs_prec), abs_prec});
    BigInt a = is_zero() ? BigInt(0) : u_ * pow_ui(p_, static_cast<unsigned long>(*v_ - scale));
    BigInt b = o.is_zero() ? BigInt(0) : o.u_ * pow_ui(p_, static_cast<unsigned long>(*o.v_ - scale));
    return normalize(p_, a + b, scale, abs_prec);
}

PadicNum PadicNum::operator-(const PadicNum& o) const {
    if (p_ != o.p_) throw PrimeMismatch();
    PadicNum neg = o;
    if (!o.is_zero()) {
        BigInt modulus = pow_ui(p_, static_cast<unsigned long>(o.rel_precision()));
        neg.u_ = (modulus - o.u_) % modulus;
        if (neg.u_ == 0) neg = PadicNum(p_, std::nullopt, BigInt(0), o.abs_prec_);
    }
    return *this + neg;
}

PadicNum PadicNum::operator*(const PadicNum& o) const {
    if (p_ != o.p_) throw PrimeMismatch();
    if (is_zero() || o.is_zero()) {
        // O(p^A) * (u p^v + ...) = O(p^(A+v))
        long a = is_zero() ? abs_prec_ : *v_;
        long b = o.is_zero() ? o.abs_prec_ : *o.v_;
        return PadicNum(p_, std::nullopt, BigInt(0), a + b);
    }
    long v = *v_ + *o.v_;
    long rel = std::min(rel_precision(), o.rel_precision());
    return normalize(p_, u_ * o.u_, v, v + rel);
}

PadicNum PadicNum::reduce_precision(long new_abs) const {
    if (new_abs > abs_prec_) throw std::domain_error("cannot raise precision");
    return is_zero() ? PadicNum(p_, std::nullopt, BigInt(0), new_abs)
                     : normalize(p_, u_, *v_, new_abs);
}

std::string PadicNum::to_string() const {
    std::string base = std::to_string(p_);
    if (is_zero()) return "O(" + base + "^" + std::to_string(abs_prec_) + ")";
    return u_.get_str() + " * " + base + "^" + std::to_string(*v_) + " + O(" + base + "^" +
           std::to_string(abs_prec_) + ")";
}

}  // namespace umbral
