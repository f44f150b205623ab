#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// Homogeneous integer linear form in d lattice variables (no constant term).
struct LinearForm {
    std::vector<long long> c;

    std::size_t dim() const { return c.size(); }
    bool is_zero() const {
        for (long long v : c)
            if (v != 0) return false;
        return true;
    }
    Rational eval(const std::vector<Rational>& x) const {
        Rational r(0);
        for (std::size_t i = 0; i < c.size(); ++i) r += Rational(c[i]) * x[i];
        return r;
    }
    long long eval_ll(const std::vector<long long>& x) const {
        long long r = 0;
        for (std::size_t i = 0; i < c.size(); ++i) r += c[i] * x[i];
        return r;
    }
    bool operator==(const LinearForm& o) const { return c == o.c; }

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("LinearForm: dimension mismatch");
        LinearForm r = a;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
};

// One factor x^{-exp} of a lattice summand, x the linear form. exp >= 1 inside
// partial-fraction input; exponent-0 factors are dropped by callers.
struct FactoredTerm {
    LinearForm form;
    long long exp = 1;
};

// One output term of the expansion of prod_j x_j^{-n_j}:
//   coeff * x^{-xExp} * prod(rest),  x = sum_j x_j,
// with the eliminated factor recorded for tracing.
struct PfTerm {
    Int coeff;
    std::size_t eliminated;
    long long xExp;
    std::vector<FactoredTerm> rest;
};

struct PfExpansion {
    LinearForm x;
    std::vector<PfTerm> terms;
};

// prod_{j} x_j^{-n_j}
//   = sum_j sum_{0 <= a_k < n_k, k != j} M * x^{-(n_j + A_j)} * prod_{k != j} x_k^{-(n_k - a_k)}
// with A_j = sum_{k != j} a_k and M = (n_j + A_j - 1)! / ((n_j - 1)! * prod a_k!).
// Pure algebra over the identity 1/x_j = (1/x) * (1 + sum_{k != j} x_k / x_j),
// so it holds for signed and scaled forms alike; the only illegal input is a
// combined form x that is identically zero.
inline PfExpansion pf_expand(const std::vector<FactoredTerm>& factors) {
    if (factors.empty()) throw std::invalid_argument("pf_expand: empty factor list");
    for (const auto& f : factors) {
        if (f.exp < 1) throw std::invalid_argument("pf_expand: exponents must be >= 1");
        if (f.form.dim() != factors.front().form.dim())
            throw std::invalid_argument("pf_expand: dimension mismatch");
    }

    PfExpansion out;
    out.x = factors.front().form;
    for (std::size_t j = 1; j < factors.size(); ++j) out.x = out.x + factors[j].form;
    if (out.x.is_zero()) throw std::invalid_argument("pf_expand: combined form is zero");

    const std::size_t r = factors.size();
    if (r == 1) {
        out.terms.push_back(PfTerm{Int(1), 0, factors[0].exp, {}});
        return out;
    }

    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::size_t> others;
        for (std::size_t k = 0; k < r; ++k)
            if (k != j) others.push_back(k);

        std::vector<long long> a(others.size(), 0);
        while (true) {
            long long A = std::accumulate(a.begin(), a.end(), 0LL);
            Int m = factorial(factors[j].exp + A - 1) / factorial(factors[j].exp - 1);
            PfTerm term;
            term.eliminated = j;
            term.xExp = factors[j].exp + A;
            for (std::size_t i = 0; i < others.size(); ++i) {
                m /= factorial(a[i]);
                term.rest.push_back(FactoredTerm{factors[others[i]].form, factors[others[i]].exp - a[i]});
            }
            term.coeff = m;
            out.terms.push_back(std::move(term));

            // odometer over 0 <= a[i] < exp(others[i])
            std::size_t pos = 0;
            while (pos < a.size()) {
                if (++a[pos] < factors[others[pos]].exp) break;
                a[pos++] = 0;
            }
            if (pos == a.size()) break;
        }
    }
    return out;
}

}  // namespace wzeta
