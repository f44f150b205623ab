#pragma once

#include <vector>

#include "wzeta/polynomial.hpp"
#include "wzeta/rational.hpp"

namespace wzeta {

// Bernoulli numbers with B_1 = -1/2 (first kind).
inline Rational bernoulli_number(long long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n must be nonnegative");
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    for (long long m = 0; m <= n; ++m) {
        if (m == 0) {
            b[0] = 1;
            continue;
        }
        Rational acc(0);
        for (long long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    return b[static_cast<std::size_t>(n)];
}

// B_n(x) = sum_k C(n,k) B_k x^(n-k)
inline RatPolynomial bernoulli_poly(long long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be nonnegative");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long long k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * bernoulli_number(k);
    return RatPolynomial(std::move(c));
}

// P_t with P_t(n) = sum_{m=1}^{n} m^t for integer n >= 0, as a polynomial:
// P_t(x) = (B_{t+1}(x+1) - B_{t+1}(1)) / (t+1).
// Anchoring at B_{t+1}(1) rather than B_{t+1}(0) makes t = 0 come out as
// P_0(x) = x. Useful off-range values: P_t(0) = 0 for all t, P_t(-1) = 0 for
// t >= 1 and P_0(-1) = -1.
inline RatPolynomial faulhaber(long long t) {
    if (t < 0) throw std::invalid_argument("faulhaber: t must be nonnegative");
    RatPolynomial b = bernoulli_poly(t + 1);
    RatPolynomial shiftedUp = b.shifted(Rational(1));
    RatPolynomial constant = RatPolynomial::monomial(0, b.eval(Rational(1)));
    return (shiftedUp - constant) * Rational(Int(1), Int(t + 1));
}

}  // namespace wzeta
