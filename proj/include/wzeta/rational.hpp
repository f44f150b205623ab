#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k). Requires n >= 0; returns 0 outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    // r stays integral: after multiplying i consecutive ascending factors it
    // is i! times a binomial, so the division by i is exact.
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    Int r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int pow_int(Int base, long long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace wzeta
