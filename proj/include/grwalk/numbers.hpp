#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include <grwalk/errors.hpp>

namespace grwalk {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator as long as they are built through
// make_rational or arithmetic on already-canonical values.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw InvalidParamsError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// gmpxx constructors stop at long, so route wider values through here
inline Integer make_integer(long long v) {
    if constexpr (sizeof(long) >= sizeof(long long))
        return Integer(static_cast<long>(v));
    else
        return Integer(std::to_string(v));
}

inline bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

// "-3/4", "5"; the canonical text form used across reports.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline std::string to_string(const Integer& z) {
    return z.get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer pow2(unsigned long e) {
    Integer b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, e);
    return b;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace grwalk
