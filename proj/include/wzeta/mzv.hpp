#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "wzeta/convergence.hpp"
#include "wzeta/rational.hpp"

namespace wzeta {

// Argument tuple (s1,...,sd) of a nested zeta sum over m1 > ... > md >= 1.
using MzvIndex = std::vector<long long>;

inline long long mzv_weight(const MzvIndex& s) { return std::accumulate(s.begin(), s.end(), 0LL); }

// Canonical display/storage order: weight, then depth, then lexicographic.
inline bool canonical_index_less(const MzvIndex& a, const MzvIndex& b) {
    long long wa = mzv_weight(a), wb = mzv_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// All entries >= 1 and head >= 2: directly summable.
inline bool mzv_is_canonical(const MzvIndex& s) {
    if (s.empty() || s[0] < 2) return false;
    for (long long v : s)
        if (v < 1) return false;
    return true;
}

// One zeta factor. reg marks the regularized value with a forced leading 1:
// the stored index is the tail, i.e. the factor denotes zbar(1, idx...).
struct MzvFactor {
    MzvIndex idx;
    bool reg = false;

    bool operator==(const MzvFactor& o) const { return reg == o.reg && idx == o.idx; }
    bool operator<(const MzvFactor& o) const {
        if (reg != o.reg) return !reg && o.reg;
        if (idx != o.idx) return canonical_index_less(idx, o.idx);
        return false;
    }
};

// Product monomial T^tPower * prod(factors). T is the formal symbol standing
// for the regularized zbar(1); factors kept sorted.
struct MzvMonomial {
    long long tPower = 0;
    std::vector<MzvFactor> factors;

    void normalize_order() { std::sort(factors.begin(), factors.end()); }

    bool operator==(const MzvMonomial& o) const { return tPower == o.tPower && factors == o.factors; }
    bool operator<(const MzvMonomial& o) const {
        if (tPower != o.tPower) return tPower < o.tPower;
        std::size_t n = std::min(factors.size(), o.factors.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (factors[i] < o.factors[i]) return true;
            if (o.factors[i] < factors[i]) return false;
        }
        return factors.size() < o.factors.size();
    }
};

inline MzvMonomial mono_zeta(MzvIndex idx) {
    MzvMonomial m;
    m.factors.push_back(MzvFactor{std::move(idx), false});
    return m;
}

inline MzvMonomial mono_zeta_reg(MzvIndex tail) {
    MzvMonomial m;
    m.factors.push_back(MzvFactor{std::move(tail), true});
    return m;
}

// Q-linear combination of monomials; zero coefficients are never stored.
class MzvCombination {
  public:
    using Terms = std::map<MzvMonomial, Rational>;

    MzvCombination() = default;

    static MzvCombination zeta(MzvIndex idx) {
        MzvCombination c;
        c.add(mono_zeta(std::move(idx)), Rational(1));
        return c;
    }
    static MzvCombination zeta_reg(MzvIndex tail) {
        MzvCombination c;
        c.add(mono_zeta_reg(std::move(tail)), Rational(1));
        return c;
    }
    static MzvCombination one() {
        MzvCombination c;
        c.add(MzvMonomial{}, Rational(1));
        return c;
    }

    void add(MzvMonomial m, const Rational& q) {
        if (q == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    MzvCombination& operator+=(const MzvCombination& o) {
        for (const auto& [m, q] : o.terms_) add(m, q);
        return *this;
    }
    MzvCombination& operator-=(const MzvCombination& o) {
        for (const auto& [m, q] : o.terms_) add(m, -q);
        return *this;
    }
    MzvCombination& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= q;
        return *this;
    }
    friend MzvCombination operator+(MzvCombination a, const MzvCombination& b) { return a += b; }
    friend MzvCombination operator-(MzvCombination a, const MzvCombination& b) { return a -= b; }
    friend MzvCombination operator*(MzvCombination a, const Rational& q) { return a *= q; }
    friend MzvCombination operator*(const Rational& q, MzvCombination a) { return a *= q; }
    friend MzvCombination operator-(MzvCombination a) { return a *= Rational(-1); }

    // formal product: concatenate factor lists, add T powers
    friend MzvCombination operator*(const MzvCombination& a, const MzvCombination& b) {
        MzvCombination r;
        for (const auto& [ma, qa] : a.terms_)
            for (const auto& [mb, qb] : b.terms_) {
                MzvMonomial m = ma;
                m.tPower += mb.tPower;
                m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
                m.normalize_order();
                r.add(std::move(m), qa * qb);
            }
        return r;
    }

    bool operator==(const MzvCombination& o) const { return terms_ == o.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, q] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << rational_str(q);
            if (m.tPower > 0) os << " T" << (m.tPower > 1 ? "^" + std::to_string(m.tPower) : "");
            for (const auto& f : m.factors) {
                os << (f.reg ? " zbar(1" : " z(");
                for (std::size_t i = 0; i < f.idx.size(); ++i)
                    os << ((i || f.reg) ? "," : "") << f.idx[i];
                os << ")";
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

}  // namespace wzeta
