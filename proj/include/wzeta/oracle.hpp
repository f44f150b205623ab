#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "wzeta/convergence.hpp"
#include "wzeta/eval.hpp"
#include "wzeta/mzv.hpp"

namespace wzeta {

namespace detail {

// Extrapolates partial sums at cutoffs c, 2c, 4c, ... to the limit.
// Truncation tails of these sums are sums of log^q(N)/N^p with p >= 1,
// q <= 2, so plain Richardson stalls on the log factors. Collocates the
// model  S(N) = L + sum_j x_j phi_j(N)  with basis ordered
// log^2 N/N, log N/N, 1/N, log^2 N/N^2, ... and as many terms as there
// are cutoffs. The bound combines the shift when the coarsest cutoff is
// dropped with the last fitted term at the finest cutoff (the usual
// asymptotic-series proxy for the omitted remainder); blocks are ordered
// log^2 first so that proxy dominates everything left out.
inline std::pair<double, double> extrapolate_log_tail(const std::vector<double>& partial,
                                                      const std::vector<long long>& cutoffs) {
    const std::size_t k = partial.size();
    auto phi = [](std::size_t j, double n) -> double {
        if (j == 0) return 1.0;
        const auto p = static_cast<double>((j - 1) / 3 + 1);
        const auto q = static_cast<double>(2 - (j - 1) % 3);
        return std::pow(std::log(n), q) / std::pow(n, p);
    };
    // solves on cutoffs[from..]; returns (L, |last term| at the finest cutoff)
    auto fit_from = [&](std::size_t from) -> std::pair<double, double> {
        const std::size_t m = k - from;
        if (m == 1) return {partial[from], 0.0};
        std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
        for (std::size_t r = 0; r < m; ++r) {
            const auto n = static_cast<double>(cutoffs[from + r]);
            for (std::size_t j = 0; j < m; ++j) a[r][j] = phi(j, n);
            a[r][m] = partial[from + r];
        }
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < m; ++r)
                if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
            std::swap(a[col], a[piv]);
            if (a[col][col] == 0.0) return {partial.back(), 0.0};
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col) continue;
                const double f = a[r][col] / a[col][col];
                for (std::size_t j = col; j <= m; ++j) a[r][j] -= f * a[col][j];
            }
        }
        const double xLast = a[m - 1][m] / a[m - 1][m - 1];
        return {a[0][m] / a[0][0], std::abs(xLast) * phi(m - 1, static_cast<double>(cutoffs.back()))};
    };
    auto [full, lastTerm] = fit_from(0);
    if (k < 2) return {full, 0.1 * (1.0 + std::abs(full))};
    return {full, 4.0 * std::abs(full - fit_from(1).first) + 2.0 * lastTerm};
}

inline int cutoff_level(long long m, const std::vector<long long>& cutoffs) {
    for (std::size_t i = 0; i + 1 < cutoffs.size(); ++i)
        if (m <= cutoffs[i]) return static_cast<int>(i);
    return static_cast<int>(cutoffs.size()) - 1;
}

}  // namespace detail

// Brute-force lattice sum of prod_j form_j^{-exp_j} over the positive
// d-dimensional lattice (d = 2 or 3), truncated at max variable <= N, with
// tail extrapolation across cutoffs N/2^(levels-1), ..., N/2, N.
// The returned errorBound is advisory (extrapolation-step heuristic).
inline NumericResult oracle_lattice_sum(const std::vector<FactoredTerm>& factors, int d,
                                        long long n = 1024, int levels = 5) {
    if (d != 2 && d != 3) throw std::invalid_argument("oracle_lattice_sum: d must be 2 or 3");
    if (levels < 1 || levels > 6 || n < (1LL << (levels + 1)))
        throw std::invalid_argument("oracle_lattice_sum: bad cutoff/levels");
    auto rep = conv_check_general(d, factors);
    if (!rep.ok) throw DivergenceError(rep.violated);

    std::vector<long long> cutoffs;
    for (int i = levels - 1; i >= 0; --i) cutoffs.push_back(n >> i);

    // value table per factor: tab[v] = v^-exp for every reachable form value
    struct Fac {
        std::vector<long long> c;
        std::vector<double> tab;
    };
    std::vector<Fac> facs;
    for (const auto& f : factors) {
        if (f.exp == 0) continue;
        Fac fac;
        fac.c = f.form.c;
        long long maxV = 0;
        for (long long ci : fac.c) maxV += ci * n;
        fac.tab.resize(static_cast<std::size_t>(maxV) + 1, 0.0);
        for (long long v = 1; v <= maxV; ++v)
            fac.tab[static_cast<std::size_t>(v)] = std::pow(static_cast<double>(v), -static_cast<double>(f.exp));
        facs.push_back(std::move(fac));
    }

    std::vector<long double> bucket(static_cast<std::size_t>(levels), 0.0L);

    if (d == 2) {
        std::vector<const Fac*> l1, l2;
        for (const auto& f : facs) (f.c[1] == 0 ? l1 : l2).push_back(&f);
        for (long long m1 = 1; m1 <= n; ++m1) {
            double p1 = 1.0;
            for (const Fac* f : l1) p1 *= f->tab[static_cast<std::size_t>(f->c[0] * m1)];
            const int lev1 = detail::cutoff_level(m1, cutoffs);
            long long lo = 1;
            for (int seg = 0; seg < levels; ++seg) {
                const long long hi = cutoffs[static_cast<std::size_t>(seg)];
                const int lev = std::max(lev1, seg);
                long double acc = 0.0L;
                for (long long m2 = lo; m2 <= hi; ++m2) {
                    double p = p1;
                    for (const Fac* f : l2)
                        p *= f->tab[static_cast<std::size_t>(f->c[0] * m1 + f->c[1] * m2)];
                    acc += p;
                }
                bucket[static_cast<std::size_t>(lev)] += acc;
                lo = hi + 1;
            }
        }
    } else {
        std::vector<const Fac*> l1, l2, l3;
        for (const auto& f : facs) {
            if (f.c[2] != 0)
                l3.push_back(&f);
            else if (f.c[1] != 0)
                l2.push_back(&f);
            else
                l1.push_back(&f);
        }
        std::vector<long long> base(l3.size());
        for (long long m1 = 1; m1 <= n; ++m1) {
            double p1 = 1.0;
            for (const Fac* f : l1) p1 *= f->tab[static_cast<std::size_t>(f->c[0] * m1)];
            const int lev1 = detail::cutoff_level(m1, cutoffs);
            for (long long m2 = 1; m2 <= n; ++m2) {
                double p2 = p1;
                for (const Fac* f : l2)
                    p2 *= f->tab[static_cast<std::size_t>(f->c[0] * m1 + f->c[1] * m2)];
                const int lev12 = std::max(lev1, detail::cutoff_level(m2, cutoffs));
                for (std::size_t i = 0; i < l3.size(); ++i)
                    base[i] = l3[i]->c[0] * m1 + l3[i]->c[1] * m2;
                long long lo = 1;
                for (int seg = 0; seg < levels; ++seg) {
                    const long long hi = cutoffs[static_cast<std::size_t>(seg)];
                    const int lev = std::max(lev12, seg);
                    long double acc = 0.0L;
                    switch (l3.size()) {
                        case 1: {
                            const Fac* fa = l3[0];
                            const long long ba = base[0], sa = fa->c[2];
                            for (long long m3 = lo; m3 <= hi; ++m3)
                                acc += p2 * fa->tab[static_cast<std::size_t>(ba + sa * m3)];
                            break;
                        }
                        case 2: {
                            const Fac *fa = l3[0], *fb = l3[1];
                            const long long ba = base[0], sa = fa->c[2], bb = base[1], sb = fb->c[2];
                            for (long long m3 = lo; m3 <= hi; ++m3)
                                acc += p2 * fa->tab[static_cast<std::size_t>(ba + sa * m3)] *
                                       fb->tab[static_cast<std::size_t>(bb + sb * m3)];
                            break;
                        }
                        default: {
                            for (long long m3 = lo; m3 <= hi; ++m3) {
                                double p = p2;
                                for (std::size_t i = 0; i < l3.size(); ++i)
                                    p *= l3[i]->tab[static_cast<std::size_t>(base[i] + l3[i]->c[2] * m3)];
                                acc += p;
                            }
                            break;
                        }
                    }
                    bucket[static_cast<std::size_t>(lev)] += acc;
                    lo = hi + 1;
                }
            }
        }
    }

    std::vector<double> partial(static_cast<std::size_t>(levels));
    long double run = 0.0L;
    for (int i = 0; i < levels; ++i) {
        run += bucket[static_cast<std::size_t>(i)];
        partial[static_cast<std::size_t>(i)] = static_cast<double>(run);
    }
    auto [value, bound] = detail::extrapolate_log_tail(partial, cutoffs);
    bound += 1e-9 + 1e-12 * std::abs(value);
    return NumericResult{Real(value), Real(bound), "truncated-sum+extrapolation"};
}

inline NumericResult oracle_zeta3(const std::array<long long, 7>& s, long long n = 1024, int levels = 5) {
    return oracle_lattice_sum(zeta3_factors(s), 3, n, levels);
}

inline std::array<long long, 7> sl4_embed(const std::array<long long, 6>& s) {
    return {s[0], s[1], s[2], s[3], s[4], 0, s[5]};
}

inline NumericResult oracle_sl4(const std::array<long long, 6>& s, long long n = 1024, int levels = 5) {
    return oracle_zeta3(sl4_embed(s), n, levels);
}

inline NumericResult oracle_mt(const std::vector<long long>& parts, long long outer, long long n = 1024,
                               int levels = 5) {
    const int d = static_cast<int>(parts.size());
    std::vector<FactoredTerm> factors;
    for (int i = 0; i < d; ++i) {
        if (parts[static_cast<std::size_t>(i)] == 0) continue;
        LinearForm f{std::vector<long long>(static_cast<std::size_t>(d), 0)};
        f.c[static_cast<std::size_t>(i)] = 1;
        factors.push_back(FactoredTerm{f, parts[static_cast<std::size_t>(i)]});
    }
    if (outer != 0)
        factors.push_back(FactoredTerm{LinearForm{std::vector<long long>(static_cast<std::size_t>(d), 1)}, outer});
    return oracle_lattice_sum(factors, d, n, levels);
}

// Doubles N until the advisory bound drops under tol (or the cap is hit).
inline NumericResult oracle_auto(const std::vector<FactoredTerm>& factors, int d, double tol,
                                 long long startN = 256, long long maxN = 4096, int levels = 5) {
    NumericResult r;
    for (long long n = startN; n <= maxN; n *= 2) {
        r = oracle_lattice_sum(factors, d, n, levels);
        if (r.errorBound <= tol) return r;
    }
    return r;
}

// Nested-sum oracle for zeta(s1,...,sd) with integer (possibly nonpositive)
// entries, m1 > ... > md >= 1, truncated at m1 <= N with the same tail
// extrapolation. Independent of the symbolic pipeline.
inline NumericResult oracle_mzv_nested(const MzvIndex& s, long long n = (1LL << 20), int levels = 5) {
    if (!mzv_is_convergent(s)) throw DivergenceError({"nested zeta index diverges"});
    const std::size_t d = s.size();
    std::vector<long long> cutoffs;
    for (int i = levels - 1; i >= 0; --i) cutoffs.push_back(n >> i);

    std::vector<long double> cum(d, 0.0L), f(d);
    std::vector<long double> bucket(static_cast<std::size_t>(levels), 0.0L);
    for (long long m = 1; m <= n; ++m) {
        for (std::size_t i = 0; i < d; ++i) {
            f[i] = std::pow(static_cast<long double>(m), -static_cast<long double>(s[d - 1 - i]));
            if (i > 0) f[i] *= cum[i - 1];
        }
        bucket[static_cast<std::size_t>(detail::cutoff_level(m, cutoffs))] += f[d - 1];
        for (std::size_t i = 0; i < d; ++i) cum[i] += f[i];
    }
    std::vector<double> partial(static_cast<std::size_t>(levels));
    long double run = 0.0L;
    for (int i = 0; i < levels; ++i) {
        run += bucket[static_cast<std::size_t>(i)];
        partial[static_cast<std::size_t>(i)] = static_cast<double>(run);
    }
    auto [value, bound] = detail::extrapolate_log_tail(partial, cutoffs);
    bound += 1e-12 + 1e-13 * std::abs(value);
    return NumericResult{Real(value), Real(bound), "truncated-sum+extrapolation"};
}

}  // namespace wzeta
