#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "permrec/errors.hpp"

namespace permrec {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline Int factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

/// C(n, k) by the multiplicative formula; zero outside 0 <= k <= n.
inline Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        // r * (n - i) is divisible by (i + 1) at every step.
        r = checked_mul(r, n - i) / (i + 1);
    }
    return r;
}

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline Int ceil(const Rational& q) {
    Int num = q.numerator();
    Int den = q.denominator();
    Int f = num / den;
    if (num % den != 0 && num > 0) ++f;
    return f;
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

} // namespace permrec
