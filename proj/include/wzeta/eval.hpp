#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <vector>

#include "wzeta/mzv.hpp"

namespace wzeta {

using Real = boost::multiprecision::cpp_bin_float_50;

struct NumericResult {
    Real value;
    Real errorBound;
    std::string method;
};

namespace detail {

inline Real inv_pow(long long m, long long k) {
    Real b(m);
    Real r(1);
    for (long long i = 0; i < k; ++i) r *= b;
    return 1 / r;
}

// Li_{k1,...,kr}(1/2) truncated at outer index N: sum over m1 > ... > mr >= 1
// of 2^{-m1} / prod mi^{ki}. Heads of 1 are fine at 1/2. One pass, rolling
// cumulative per depth level.
inline Real li_half(const std::vector<long long>& comp, long long n) {
    if (comp.empty()) return Real(1);
    const std::size_t d = comp.size();
    std::vector<Real> cum(d, Real(0));  // cum[i]: level-i sums with top index < m
    std::vector<Real> f(d);
    Real li(0);
    Real xpow(Real(1) / 2);
    for (long long m = 1; m <= n; ++m) {
        for (std::size_t i = 0; i < d; ++i) {
            f[i] = inv_pow(m, comp[d - 1 - i]);
            if (i > 0) f[i] *= cum[i - 1];
        }
        li += xpow * f[d - 1];
        for (std::size_t i = 0; i < d; ++i) cum[i] += f[i];
        xpow /= 2;
    }
    return li;
}

// Tail of li_half beyond n: each term is at most 2^-m * (number of chains
// under m) <= 2^-m * m^(d-1), so the tail is < 2^(1-n) * (n+1)^(d-1) once
// n >= 4d.
inline Real li_half_tail_bound(std::size_t depth, long long n) {
    Real b = 2;
    for (long long i = 0; i < n - 1; ++i) b /= 2;
    for (std::size_t i = 1; i < depth; ++i) b *= Real(n + 1);
    return b;
}

// split a 0/1 word ending in 1 into exponent blocks: (0^(k-1) 1) -> k
inline std::vector<long long> word_to_comp(const std::vector<int>& word) {
    std::vector<long long> comp;
    long long zeros = 0;
    for (int a : word) {
        if (a == 0) {
            ++zeros;
        } else {
            comp.push_back(zeros + 1);
            zeros = 0;
        }
    }
    return comp;
}

}  // namespace detail

// Convergent-series evaluation of a canonical index via the convolution
//   I(a_1..a_n; 1) = sum_j I(a_{j+1}..a_n; 1/2) * I(1-a_j,...,1-a_1; 1/2)
// of the iterated-integral word a = 0^(s1-1) 1 ... 0^(sd-1) 1. Every piece is
// a polylog value at 1/2, so truncation error decays like 2^-N.
inline NumericResult eval_mzv(const MzvIndex& idx, const Real& targetError = Real("1e-25")) {
    if (!mzv_is_canonical(idx))
        throw std::invalid_argument("eval_mzv: index must be canonical (entries >= 1, head >= 2)");

    std::vector<int> word;
    for (long long s : idx) {
        for (long long i = 1; i < s; ++i) word.push_back(0);
        word.push_back(1);
    }
    const std::size_t n = word.size();

    long long trunc = 96;
    const std::size_t maxDepth = n;  // split pieces never exceed the word length in depth
    while (trunc < 2048 &&
           detail::li_half_tail_bound(maxDepth, trunc) * Real(4 * (n + 1)) > targetError)
        trunc += 32;

    Real value(0);
    Real err(0);
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<int> suffix(word.begin() + static_cast<std::ptrdiff_t>(j), word.end());
        std::vector<int> prefixRC;
        prefixRC.reserve(j);
        for (std::size_t i = j; i-- > 0;) prefixRC.push_back(1 - word[i]);
        auto cs = detail::word_to_comp(suffix);
        auto cp = detail::word_to_comp(prefixRC);
        Real vs = detail::li_half(cs, trunc);
        Real vp = detail::li_half(cp, trunc);
        value += vs * vp;
        // |Li| at 1/2 is below 2; tails are multiplied by the partner factor
        err += (detail::li_half_tail_bound(cs.size(), trunc) +
                detail::li_half_tail_bound(cp.size(), trunc)) *
               2;
    }
    err += Real("1e-42") * Real(static_cast<long long>(n + 1)) * (1 + abs(value));
    return NumericResult{value, err, "accelerated-series"};
}

// Linear combination with product monomials; T must have been eliminated.
// An empty combination is exactly zero.
inline NumericResult eval_combo(const MzvCombination& combo, const Real& targetError = Real("1e-25")) {
    if (combo.empty()) return NumericResult{Real(0), Real(0), "accelerated-series"};
    Real value(0);
    Real err(0);
    for (const auto& [m, q] : combo.terms()) {
        if (m.tPower != 0) throw std::invalid_argument("eval_combo: combination carries the formal symbol T");
        Real prod(1);
        Real prodErr(0);
        for (const auto& f : m.factors) {
            if (f.reg) throw std::invalid_argument("eval_combo: combination carries a regularized factor");
            NumericResult r = eval_mzv(f.idx, targetError);
            prodErr = prodErr * (abs(r.value) + r.errorBound) + r.errorBound * abs(prod);
            prod *= r.value;
        }
        Real qr = static_cast<Real>(numerator(q)) / static_cast<Real>(denominator(q));
        value += qr * prod;
        err += abs(qr) * prodErr;
    }
    err += Real("1e-44") * (1 + abs(value));
    return NumericResult{value, err, "accelerated-series"};
}

}  // namespace wzeta
