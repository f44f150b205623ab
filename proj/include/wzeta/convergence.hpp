#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "wzeta/partial_fractions.hpp"

namespace wzeta {

struct ConvergenceReport {
    bool ok = true;
    std::vector<std::string> violated;  // one entry per failed condition
};

class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(std::vector<std::string> conds)
        : std::runtime_error(join(conds)), conditions(std::move(conds)) {}
    std::vector<std::string> conditions;

  private:
    static std::string join(const std::vector<std::string>& conds) {
        std::string s = "divergent; violated:";
        for (const auto& c : conds) s += " [" + c + "]";
        return s;
    }
};

// Nested-sum convergence for zeta(s1,...,sd) over m1 > ... > md >= 1 with
// integer (possibly nonpositive) entries: every prefix sum must exceed its
// length.
inline bool mzv_is_convergent(const std::vector<long long>& s) {
    long long acc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += s[i];
        if (acc <= static_cast<long long>(i) + 1) return false;
    }
    return !s.empty();
}

// Lattice sum over (m_1..m_d) in Z_{>0}^d of prod_j form_j^{-exp_j}, forms
// with nonnegative coefficients. Converges iff for every nonempty variable
// subset I the exponents of the forms meeting I sum to more than |I|.
inline ConvergenceReport conv_check_general(int d, const std::vector<FactoredTerm>& terms) {
    if (d < 1 || d > 62) throw std::invalid_argument("conv_check_general: bad dimension");
    for (const auto& t : terms) {
        if (static_cast<int>(t.form.dim()) != d)
            throw std::invalid_argument("conv_check_general: form dimension mismatch");
        for (long long c : t.form.c)
            if (c < 0) throw std::invalid_argument("conv_check_general: negative coefficient");
        if (t.exp < 0) throw std::invalid_argument("conv_check_general: negative exponent");
    }
    ConvergenceReport rep;
    for (unsigned long long mask = 1; mask < (1ULL << d); ++mask) {
        long long total = 0;
        for (const auto& t : terms) {
            bool meets = false;
            for (int v = 0; v < d && !meets; ++v)
                if ((mask >> v & 1) && t.form.c[static_cast<std::size_t>(v)] != 0) meets = true;
            if (meets) total += t.exp;
        }
        int size = 0;
        for (int v = 0; v < d; ++v) size += static_cast<int>(mask >> v & 1);
        if (total <= size) {
            rep.ok = false;
            std::string vars;
            for (int v = 0; v < d; ++v)
                if (mask >> v & 1) vars += (vars.empty() ? "m" : ",m") + std::to_string(v + 1);
            rep.violated.push_back("{" + vars + "}: needs exponent sum > " + std::to_string(size) +
                                   ", got " + std::to_string(total));
        }
    }
    return rep;
}

// The triple-sum family: exponents (s1..s7) on forms
// m1, m2, m3, m1+m2, m2+m3, m1+m3, m1+m2+m3. Spelled-out instance of the
// general criterion; condition strings name the slots.
inline ConvergenceReport conv_check_zeta3(const std::array<long long, 7>& s) {
    struct Cond {
        std::array<int, 7> slots;  // 1 if slot participates
        long long bound;
        const char* text;
    };
    static const Cond conds[7] = {
        {{1, 0, 0, 1, 0, 1, 1}, 1, "s1+s4+s6+s7 > 1"},
        {{0, 1, 0, 1, 1, 0, 1}, 1, "s2+s4+s5+s7 > 1"},
        {{0, 0, 1, 0, 1, 1, 1}, 1, "s3+s5+s6+s7 > 1"},
        {{1, 1, 0, 1, 1, 1, 1}, 2, "s1+s2+s4+s5+s6+s7 > 2"},
        {{1, 0, 1, 1, 1, 1, 1}, 2, "s1+s3+s4+s5+s6+s7 > 2"},
        {{0, 1, 1, 1, 1, 1, 1}, 2, "s2+s3+s4+s5+s6+s7 > 2"},
        {{1, 1, 1, 1, 1, 1, 1}, 3, "s1+...+s7 > 3"},
    };
    ConvergenceReport rep;
    for (const auto& c : conds) {
        long long total = 0;
        for (int i = 0; i < 7; ++i)
            if (c.slots[static_cast<std::size_t>(i)]) total += s[static_cast<std::size_t>(i)];
        if (total <= c.bound) {
            rep.ok = false;
            rep.violated.emplace_back(c.text);
        }
    }
    return rep;
}

inline const std::array<LinearForm, 7>& zeta3_forms() {
    static const std::array<LinearForm, 7> forms = {
        LinearForm{{1, 0, 0}}, LinearForm{{0, 1, 0}}, LinearForm{{0, 0, 1}},
        LinearForm{{1, 1, 0}}, LinearForm{{0, 1, 1}}, LinearForm{{1, 0, 1}},
        LinearForm{{1, 1, 1}},
    };
    return forms;
}

inline std::vector<FactoredTerm> zeta3_factors(const std::array<long long, 7>& s) {
    std::vector<FactoredTerm> fs;
    for (std::size_t i = 0; i < 7; ++i)
        if (s[i] != 0) fs.push_back(FactoredTerm{zeta3_forms()[i], s[i]});
    return fs;
}

}  // namespace wzeta
