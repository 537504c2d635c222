#pragma once

// Exact arithmetic primitives. Everything in this library is computed over
// unbounded integers or exact rationals; no floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "singlab/errors.hpp"

namespace singlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

// floor(p/q) for an exact rational, valid for either sign.
inline BigInt rational_floor(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);  // > 0
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline int sign_of(const Rational& r) {
    return r.sign();
}

// Parses "p/q" or "p" with optional sign; q must be nonzero.
Rational parse_rational(const std::string& text);

// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string rational_to_string(const Rational& r);

std::string bigint_to_string(const BigInt& v);

// Checked int64 helpers used by the fast arithmetic paths. They throw
// ArithmeticOverflow so callers can fall back to unbounded integers.
struct ArithmeticOverflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

// lcm with overflow detection.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace singlab
