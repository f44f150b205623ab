#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wzeta/bernoulli.hpp"
#include "wzeta/mzv.hpp"

namespace wzeta {

namespace detail {

// Quasi-shuffle of plain index words:
//   (a,u) * (b,v) = a.(u * (b,v)) + b.((a,u) * v) + (a+b).(u * v)
inline std::map<MzvIndex, Int> stuffle_words(const MzvIndex& u, const MzvIndex& v) {
    std::map<MzvIndex, Int> out;
    if (u.empty()) {
        out[v] = 1;
        return out;
    }
    if (v.empty()) {
        out[u] = 1;
        return out;
    }
    MzvIndex ut(u.begin() + 1, u.end());
    MzvIndex vt(v.begin() + 1, v.end());
    auto prependInto = [&out](long long head, const std::map<MzvIndex, Int>& words) {
        for (const auto& [w, c] : words) {
            MzvIndex nw;
            nw.reserve(w.size() + 1);
            nw.push_back(head);
            nw.insert(nw.end(), w.begin(), w.end());
            out[nw] += c;
        }
    };
    prependInto(u[0], stuffle_words(ut, v));
    prependInto(v[0], stuffle_words(u, vt));
    prependInto(u[0] + v[0], stuffle_words(ut, vt));
    return out;
}

}  // namespace detail

// Product of two zeta factors in the stuffle algebra. At most one factor may
// be regularized; a regularized factor contributes the word (1, tail...) and
// output words with head 1 are re-wrapped as regularized factors.
inline MzvCombination stuffle(const MzvFactor& u, const MzvFactor& v) {
    if (u.reg && v.reg) throw std::invalid_argument("stuffle: both factors regularized");
    MzvIndex wu = u.idx, wv = v.idx;
    if (u.reg) wu.insert(wu.begin(), 1);
    if (v.reg) wv.insert(wv.begin(), 1);
    MzvCombination out;
    for (const auto& [w, c] : detail::stuffle_words(wu, wv)) {
        if ((u.reg || v.reg) && !w.empty() && w[0] == 1) {
            out.add(mono_zeta_reg(MzvIndex(w.begin() + 1, w.end())), Rational(c));
        } else {
            out.add(mono_zeta(w), Rational(c));
        }
    }
    return out;
}

inline MzvCombination stuffle(const MzvIndex& u, const MzvIndex& v) {
    return stuffle(MzvFactor{u, false}, MzvFactor{v, false});
}

// zbar(1, tail) = T*z(tail) - (head >= 2 words of (1) * tail).
// Requires tail to be a convergent canonical index.
inline MzvCombination expand_regularized_factor(const MzvIndex& tail) {
    if (!mzv_is_canonical(tail))
        throw std::invalid_argument("expand_regularized: tail must be canonical (head >= 2, entries >= 1)");
    MzvCombination out;
    MzvMonomial tMono = mono_zeta(tail);
    tMono.tPower = 1;
    out.add(tMono, Rational(1));
    MzvIndex one{1};
    bool sawHeadOne = false;
    for (const auto& [w, c] : detail::stuffle_words(one, tail)) {
        if (!w.empty() && w[0] == 1) {
            // exactly the word 1++tail, coefficient 1; it carries the T symbol
            assert(c == 1 && MzvIndex(w.begin() + 1, w.end()) == tail);
            sawHeadOne = true;
            continue;
        }
        out.add(mono_zeta(w), Rational(-c));
    }
    assert(sawHeadOne);
    (void)sawHeadOne;
    return out;
}

// Eliminate every regularized factor via expand_regularized_factor,
// distributing over the rest of each monomial.
inline MzvCombination expand_regularized(const MzvCombination& in) {
    MzvCombination cur = in;
    while (true) {
        const MzvMonomial* hit = nullptr;
        std::size_t pos = 0;
        for (const auto& [m, q] : cur.terms()) {
            for (std::size_t i = 0; i < m.factors.size(); ++i)
                if (m.factors[i].reg) {
                    hit = &m;
                    pos = i;
                    break;
                }
            if (hit) break;
        }
        if (!hit) return cur;
        MzvMonomial mono = *hit;
        Rational q = cur.terms().at(mono);
        MzvCombination rest;
        MzvMonomial stripped = mono;
        stripped.factors.erase(stripped.factors.begin() + static_cast<std::ptrdiff_t>(pos));
        rest.add(stripped, q);
        cur.add(mono, -q);
        cur += rest * expand_regularized_factor(mono.factors[pos].idx);
    }
}

// zeta with integer (possibly nonpositive) arguments, rewritten over
// canonical indices by eliminating the leftmost nonpositive entry with
// power-sum polynomials:
//   sum_{m_{j+1} < m_j < m_{j-1}} m_j^t = P_t(m_{j-1} - 1) - P_t(m_{j+1}).
// Convergence (every prefix sum > its length) is required and is preserved
// by every replacement.
inline MzvCombination normalize_integer_args(const MzvIndex& s) {
    if (!mzv_is_convergent(s)) {
        long long acc = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            acc += s[i];
            if (acc <= static_cast<long long>(i) + 1) {
                std::string name = "s1";
                if (i > 0) name += "+...+s" + std::to_string(i + 1);
                throw DivergenceError({name + " > " + std::to_string(i + 1)});
            }
        }
        throw DivergenceError({"nonempty index required"});
    }
    std::size_t j = s.size();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] <= 0) {
            j = i;
            break;
        }
    if (j == s.size()) return MzvCombination::zeta(s);
    assert(j >= 1);  // head is >= 2 whenever the index converges

    const long long t = -s[j];
    const RatPolynomial p = faulhaber(t);
    MzvCombination out;

    // upper neighbor absorbs P_t(m_{j-1} - 1)
    const RatPolynomial ph = p.shifted(Rational(-1));
    for (long long k = 0; k <= ph.degree(); ++k) {
        Rational c = ph.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        MzvIndex n;
        n.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i == j) continue;
            n.push_back(i == j - 1 ? s[i] - k : s[i]);
        }
        if (!mzv_is_convergent(n)) throw std::logic_error("normalize_integer_args: upper branch lost convergence");
        out += c * normalize_integer_args(n);
    }

    // lower neighbor absorbs -P_t(m_{j+1}); absent when s_j is last
    if (j + 1 < s.size()) {
        for (long long k = 1; k <= p.degree(); ++k) {
            Rational c = p.coeff(static_cast<std::size_t>(k));
            if (c == 0) continue;
            MzvIndex n;
            n.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i == j) continue;
                n.push_back(i == j + 1 ? s[i] - k : s[i]);
            }
            if (!mzv_is_convergent(n)) throw std::logic_error("normalize_integer_args: lower branch lost convergence");
            out -= c * normalize_integer_args(n);
        }
    }
    return out;
}

namespace detail {

// Product of plain factors -> single canonical indices. Factors with
// nonpositive entries are normalized first, then the product is folded by
// repeated stuffling. The empty product contributes the scalar monomial.
inline MzvCombination resolve_plain_factors(const std::vector<MzvFactor>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].reg) throw std::logic_error("resolve_plain_factors: unexpected regularized factor");
        if (!mzv_is_canonical(factors[i].idx)) {
            MzvCombination normalized = normalize_integer_args(factors[i].idx);
            std::vector<MzvFactor> rest = factors;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            MzvCombination out;
            for (const auto& [m, q] : normalized.terms()) {
                std::vector<MzvFactor> next = rest;
                next.insert(next.end(), m.factors.begin(), m.factors.end());
                out += q * resolve_plain_factors(next);
            }
            return out;
        }
    }
    if (factors.empty()) return MzvCombination::one();
    std::map<MzvIndex, Rational> words{{factors[0].idx, Rational(1)}};
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::map<MzvIndex, Rational> next;
        for (const auto& [w, c] : words)
            for (const auto& [w2, c2] : stuffle_words(w, factors[i].idx)) next[w2] += c * Rational(c2);
        words = std::move(next);
    }
    MzvCombination out;
    for (const auto& [w, c] : words) out.add(mono_zeta(w), c);
    return out;
}

}  // namespace detail

// Full rewrite into the canonical basis, stratified by power of the formal
// regularization symbol T: expand regularized factors, normalize integer
// arguments, fold products.
inline std::map<long long, MzvCombination> canonicalize_by_tpower(const MzvCombination& in) {
    MzvCombination expanded = expand_regularized(in);
    std::map<long long, MzvCombination> out;
    for (const auto& [m, q] : expanded.terms()) {
        MzvCombination resolved = detail::resolve_plain_factors(m.factors);
        out[m.tPower] += q * resolved;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.empty())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// T-free canonical form; throws if a genuine T residue remains.
inline MzvCombination canonicalize(const MzvCombination& in) {
    auto byT = canonicalize_by_tpower(in);
    for (const auto& [tp, combo] : byT)
        if (tp > 0 && !combo.empty()) throw std::domain_error("divergent residue");
    auto it = byT.find(0);
    return it == byT.end() ? MzvCombination() : it->second;
}

// sum_{a>=aMin}^{s-1} C(t-1+a,a) z(t+a, s-a) + sum_{b>=bMin}^{t-1} C(s-1+b,b) z(s+b, t-b)
inline MzvCombination euler_decomposition_rhs(long long s, long long t, long long aMin, long long bMin) {
    MzvCombination out;
    for (long long a = aMin; a <= s - 1; ++a)
        out.add(mono_zeta(MzvIndex{t + a, s - a}), Rational(binomial(t - 1 + a, a)));
    for (long long b = bMin; b <= t - 1; ++b)
        out.add(mono_zeta(MzvIndex{s + b, t - b}), Rational(binomial(s - 1 + b, b)));
    return out;
}

// Depth-2 part of the decomposition with both sums starting at 1; equals
// z(s+t) as a value for all s,t >= 1 with s+t >= 3.
inline MzvCombination euler_depth2_tail(long long s, long long t) {
    return euler_decomposition_rhs(s, t, 1, 1);
}

// Both sides of the product decomposition, as canonical combinations:
//   s,t >= 2:        z(s) z(t) = full double sum (bounds s-1 and t-1)
//   s >= 2, t == 1:  z(s+1)    = sum_{a=1}^{s-1} z(1+a, s-a)
inline std::pair<MzvCombination, MzvCombination> euler_identity_check(long long s, long long t) {
    if (s == 1 && t >= 2) std::swap(s, t);
    if (s >= 2 && t >= 2) {
        MzvCombination lhs = canonicalize(MzvCombination::zeta(MzvIndex{s}) * MzvCombination::zeta(MzvIndex{t}));
        return {lhs, euler_decomposition_rhs(s, t, 0, 0)};
    }
    if (s >= 2 && t == 1) {
        return {MzvCombination::zeta(MzvIndex{s + 1}), euler_decomposition_rhs(s, 1, 1, 1)};
    }
    throw std::invalid_argument("euler_identity_check: need s+t >= 3 with s,t >= 1");
}

}  // namespace wzeta
