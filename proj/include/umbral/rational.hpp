#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace umbral {

// Exact rational scalar. Always in lowest terms with positive denominator
// (gmpxx keeps canonical form through arithmetic; constructors canonicalize).
using BigInt = mpz_class;
using BigRat = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rat(long num, long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

// "num/den" in lowest terms, "n" alone when den = 1.
inline std::string rat_to_string(const BigRat& r) {
    return r.get_str();
}

// Parses "n" or "num/den"; the input need not be in lowest terms.
inline BigRat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    BigRat r;
    if (r.set_str(s, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace umbral
