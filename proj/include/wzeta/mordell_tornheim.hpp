#pragma once

#include <algorithm>
#include <vector>

#include "wzeta/partial_fractions.hpp"
#include "wzeta/stuffle.hpp"

namespace wzeta {

// zeta_MT(parts; outer) = sum over independent m_1..m_d >= 1 of
// prod m_i^{-parts_i} * (m_1+...+m_d)^{-outer}. Parts may be zero.
struct MtArgs {
    std::vector<long long> parts;
    long long outer = 0;
};

inline ConvergenceReport mt_conv_check(const MtArgs& a) {
    const int d = static_cast<int>(a.parts.size());
    std::vector<FactoredTerm> factors;
    for (int i = 0; i < d; ++i) {
        if (a.parts[static_cast<std::size_t>(i)] == 0) continue;
        LinearForm f{std::vector<long long>(static_cast<std::size_t>(d), 0)};
        f.c[static_cast<std::size_t>(i)] = 1;
        factors.push_back(FactoredTerm{f, a.parts[static_cast<std::size_t>(i)]});
    }
    if (a.outer != 0)
        factors.push_back(FactoredTerm{LinearForm{std::vector<long long>(static_cast<std::size_t>(d), 1)}, a.outer});
    return conv_check_general(d, factors);
}

inline MzvCombination reduce_mt(const MtArgs& a);

// Counting reduction for the all-but-one-zero cases: with z zero parts the
// zero variables contribute #{m_i >= 1 : sum = k} = C(k-1, z-1) copies, a
// polynomial in k. zeroCount in 1..3; lastPart is the one surviving exponent
// (0 when every part is zero).
inline MzvCombination mt_base_counting(int zeroCount, long long lastPart, long long outer) {
    if (zeroCount < 1 || zeroCount > 3) throw std::invalid_argument("mt_base_counting: zeroCount in 1..3");
    if (lastPart < 0 || outer < 1) throw std::invalid_argument("mt_base_counting: bad exponents");

    // C(x-1, z-1) as a polynomial in x
    RatPolynomial poly = RatPolynomial::monomial(0, Rational(1));
    for (long long i = 1; i <= zeroCount - 1; ++i) {
        RatPolynomial lin(std::vector<Rational>{Rational(-i), Rational(1)});
        poly = poly * lin;
    }
    poly = poly * Rational(Int(1), factorial(zeroCount - 1));

    MzvCombination out;
    if (lastPart == 0) {
        // sum_n C(n-1,z-1) n^-outer
        for (long long k = 0; k <= poly.degree(); ++k) {
            Rational c = poly.coeff(static_cast<std::size_t>(k));
            if (c == 0) continue;
            out += c * normalize_integer_args(MzvIndex{outer - k});
        }
        return out;
    }
    // sum_{n > m} C((n-m)-1, z-1) m^-lastPart n^-outer, expanding (n-m)^j
    for (long long j = 0; j <= poly.degree(); ++j) {
        Rational cj = poly.coeff(static_cast<std::size_t>(j));
        if (cj == 0) continue;
        for (long long i = 0; i <= j; ++i) {
            Rational c = cj * Rational(binomial(j, i));
            if ((j - i) % 2 != 0) c = -c;
            MzvIndex idx{outer - i, lastPart - (j - i)};
            if (!mzv_is_convergent(idx)) throw std::logic_error("mt_base_counting: split term diverges");
            out += c * normalize_integer_args(idx);
        }
    }
    return out;
}

namespace detail {

// all parts positive: one full partial-fraction pass over every variable;
// each output drops one variable's own power into the outer form
inline MzvCombination reduce_mt_all_positive(const MtArgs& a) {
    const std::size_t d = a.parts.size();
    std::vector<FactoredTerm> factors;
    for (std::size_t i = 0; i < d; ++i) {
        LinearForm f{std::vector<long long>(d, 0)};
        f.c[i] = 1;
        factors.push_back(FactoredTerm{f, a.parts[i]});
    }
    PfExpansion ex = pf_expand(factors);
    MzvCombination out;
    for (const auto& term : ex.terms) {
        MtArgs next;
        next.outer = a.outer + term.xExp;
        for (const auto& rest : term.rest) next.parts.push_back(rest.exp);
        next.parts.push_back(0);  // the eliminated variable stays, power 0
        out += Rational(term.coeff) * reduce_mt(next);
    }
    return out;
}

}  // namespace detail

// Reduce zeta_MT (depth <= 3) to canonical nested zetas.
inline MzvCombination reduce_mt(const MtArgs& a) {
    const std::size_t d = a.parts.size();
    if (d < 1 || d > 3) throw std::invalid_argument("reduce_mt: depth must be 1..3");
    for (long long p : a.parts)
        if (p < 0) throw std::invalid_argument("reduce_mt: negative part");
    if (a.outer < 0) throw std::invalid_argument("reduce_mt: negative outer exponent");
    auto rep = mt_conv_check(a);
    if (!rep.ok) throw DivergenceError(rep.violated);

    if (a.outer == 0) {
        // independent product of plain zetas
        MzvMonomial m;
        for (long long p : a.parts) m.factors.push_back(MzvFactor{MzvIndex{p}, false});
        m.normalize_order();
        MzvCombination prod;
        prod.add(m, Rational(1));
        return canonicalize(prod);
    }
    if (d == 1) return normalize_integer_args(MzvIndex{a.parts[0] + a.outer});

    const int zeros = static_cast<int>(std::count(a.parts.begin(), a.parts.end(), 0LL));
    if (zeros == static_cast<int>(d)) return mt_base_counting(static_cast<int>(d), 0, a.outer);
    if (zeros == static_cast<int>(d) - 1) {
        long long p = 0;
        for (long long v : a.parts) p += v;
        return mt_base_counting(zeros, p, a.outer);
    }
    if (d == 3 && zeros == 1) {
        // two positive parts p (on m_i) and q (on m_j); the zero variable only
        // feeds the outer form, so pair-splitting m_i, m_j leaves chains
        long long p = 0, q = 0;
        bool first = true;
        for (long long v : a.parts) {
            if (v == 0) continue;
            (first ? p : q) = v;
            first = false;
        }
        MzvCombination out;
        for (long long x = 0; x <= q - 1; ++x) {
            MzvIndex idx{a.outer, p + x, q - x};
            if (!mzv_is_convergent(idx)) throw std::logic_error("reduce_mt: chain term diverges");
            out += Rational(binomial(p + x - 1, x)) * normalize_integer_args(idx);
        }
        for (long long x = 0; x <= p - 1; ++x) {
            MzvIndex idx{a.outer, q + x, p - x};
            if (!mzv_is_convergent(idx)) throw std::logic_error("reduce_mt: chain term diverges");
            out += Rational(binomial(q + x - 1, x)) * normalize_integer_args(idx);
        }
        return out;
    }
    return detail::reduce_mt_all_positive(a);
}

}  // namespace wzeta
