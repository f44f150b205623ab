#pragma once

#include <vector>

#include "wzeta/eval.hpp"
#include "wzeta/witten.hpp"

// Reference corpus: published weight-4 table and the individually published
// values, with closed forms over products of zetas for exact-side checks.

namespace wzeta {

// value = c2 z(2) + c3 z(3) + c22 z(2)^2
struct CensusEntry {
    Sl4Tuple tuple;
    Rational c2, c3, c22;
};

// Two published table rows give 1/2 z(2)^2 for the tuples below; the
// brute-force lattice sum and the corpus's own splitting identities
// (value = (0,0,0,1,2,1) + (0,0,0,1,1,2) + (1,0,0,1,0,2), all positive)
// both give 7/10 z(2)^2 instead. The census table above carries the
// oracle-confirmed coefficients; the published variants are kept here so the
// discrepancy can be reported verbatim.
inline const std::vector<CensusEntry>& census_published_discrepancies() {
    static const std::vector<CensusEntry> v = {
        {{1, 0, 0, 1, 2, 0}, Rational(0), Rational(0), Rational(1, 2)},
        {{0, 0, 1, 2, 1, 0}, Rational(0), Rational(0), Rational(1, 2)},
    };
    return v;
}

inline const std::vector<CensusEntry>& weight4_census() {
    static const std::vector<CensusEntry> v = {
        {{0, 0, 0, 0, 0, 4}, Rational(1, 2), Rational(-3, 2), Rational(2, 5)},
        {{0, 0, 0, 2, 2, 0}, Rational(0), Rational(3), Rational(-1)},
        {{0, 0, 0, 0, 1, 3}, Rational(1), Rational(-1), Rational(-1, 10)},
        {{0, 0, 0, 1, 0, 3}, Rational(1), Rational(-1), Rational(-1, 10)},
        {{0, 0, 0, 0, 2, 2}, Rational(0), Rational(1), Rational(-3, 10)},
        {{0, 0, 0, 2, 0, 2}, Rational(0), Rational(1), Rational(-3, 10)},
        {{1, 0, 0, 0, 1, 2}, Rational(0), Rational(1), Rational(-1, 5)},
        {{0, 0, 1, 1, 0, 2}, Rational(0), Rational(1), Rational(-1, 5)},
        {{1, 0, 0, 0, 2, 1}, Rational(0), Rational(2), Rational(-1, 2)},
        {{0, 0, 1, 2, 0, 1}, Rational(0), Rational(2), Rational(-1, 2)},
        {{0, 0, 1, 0, 0, 3}, Rational(-1), Rational(2), Rational(-1, 10)},
        {{0, 1, 0, 0, 0, 3}, Rational(-1), Rational(2), Rational(-1, 10)},
        {{1, 0, 0, 0, 0, 3}, Rational(-1), Rational(2), Rational(-1, 10)},
        {{0, 1, 0, 1, 1, 1}, Rational(0), Rational(0), Rational(7, 10)},
        {{1, 1, 1, 0, 0, 1}, Rational(0), Rational(0), Rational(12, 5)},
        {{0, 0, 0, 1, 1, 2}, Rational(0), Rational(0), Rational(1, 10)},
        {{1, 0, 1, 1, 1, 0}, Rational(0), Rational(0), Rational(17, 10)},
        {{1, 0, 1, 0, 0, 2}, Rational(0), Rational(0), Rational(4, 5)},
        {{0, 1, 1, 0, 0, 2}, Rational(0), Rational(0), Rational(4, 5)},
        {{1, 1, 0, 0, 0, 2}, Rational(0), Rational(0), Rational(4, 5)},
        {{1, 0, 0, 1, 1, 1}, Rational(0), Rational(0), Rational(1, 2)},
        {{1, 0, 0, 1, 2, 0}, Rational(0), Rational(0), Rational(7, 10)},
        {{0, 0, 1, 2, 1, 0}, Rational(0), Rational(0), Rational(7, 10)},
        {{0, 0, 1, 1, 1, 1}, Rational(0), Rational(0), Rational(1, 2)},
        {{0, 1, 0, 1, 0, 2}, Rational(0), Rational(0), Rational(2, 5)},
        {{1, 0, 0, 1, 0, 2}, Rational(0), Rational(0), Rational(2, 5)},
        {{0, 1, 0, 0, 1, 2}, Rational(0), Rational(0), Rational(2, 5)},
        {{0, 0, 1, 0, 1, 2}, Rational(0), Rational(0), Rational(2, 5)},
        {{1, 1, 0, 0, 1, 1}, Rational(0), Rational(0), Rational(6, 5)},
        {{1, 0, 1, 1, 0, 1}, Rational(0), Rational(0), Rational(6, 5)},
        {{1, 0, 1, 0, 1, 1}, Rational(0), Rational(0), Rational(6, 5)},
        {{0, 1, 1, 1, 0, 1}, Rational(0), Rational(0), Rational(6, 5)},
    };
    return v;
}

struct ProductTerm {
    Rational coeff;
    std::vector<MzvIndex> factors;
};

struct PaperGolden {
    WittenKind kind;
    std::vector<long long> args;
    const char* decimal;  // published digits
    std::vector<ProductTerm> closed;
};

inline const std::vector<PaperGolden>& paper_goldens() {
    using I = MzvIndex;
    static const std::vector<PaperGolden> v = {
        {WittenKind::SL4,
         {1, 1, 0, 1, 1, 1},
         "0.6150150376",
         {{Rational(5, 2), {I{5}}}, {Rational(-1), {I{2}, I{3}}}}},
        {WittenKind::SL4,
         {0, 1, 1, 1, 1, 1},
         "0.6150150376",
         {{Rational(5, 2), {I{5}}}, {Rational(-1), {I{2}, I{3}}}}},
        {WittenKind::SL4,
         {1, 0, 1, 1, 1, 1},
         "0.4219127176",
         {{Rational(-3, 2), {I{5}}}, {Rational(1), {I{2}, I{3}}}}},
        {WittenKind::SL4,
         {1, 1, 1, 1, 1, 1},
         "0.2617453537",
         {{Rational(-62, 105), {I{2}, I{2}, I{2}}}, {Rational(2), {I{3}, I{3}}}}},
        {WittenKind::SL4,
         {2, 2, 2, 2, 2, 2},
         "0.0083233212",
         {{Rational(368, 875875), {I{2}, I{2}, I{2}, I{2}, I{2}, I{2}}}}},
        {WittenKind::ZETA3,
         {1, 1, 1, 1, 1, 1, 1},
         "0.08840016918",
         {{Rational(21, 8), {I{7}}}, {Rational(-3, 2), {I{2}, I{5}}}}},
        {WittenKind::SL4,
         {1, 2, 3, 3, 2, 1},
         "0.0129650292",
         {{Rational(1), {I{2}, I{8, 2}}},
          {Rational(811324, 238875), {I{2}, I{2}, I{2}, I{2}, I{2}, I{2}}},
          {Rational(-5, 2), {I{2}, I{5}, I{5}}},
          {Rational(-37, 2), {I{3}, I{9}}},
          {Rational(-35), {I{5}, I{7}}},
          {Rational(-2), {I{7}, I{2}, I{3}}},
          {Rational(37, 4), {I{10, 2}}}}},
        {WittenKind::SL4,
         {3, 2, 1, 1, 2, 3},
         "0.0056078053",
         {{Rational(10), {I{2}, I{8, 2}}},
          {Rational(-120112, 53625), {I{2}, I{2}, I{2}, I{2}, I{2}, I{2}}},
          {Rational(-6), {I{2}, I{5}, I{5}}},
          {Rational(44), {I{3}, I{9}}},
          {Rational(40), {I{5}, I{7}}},
          {Rational(-20), {I{7}, I{2}, I{3}}},
          {Rational(-22), {I{10, 2}}}}},
    };
    return v;
}

inline Real eval_rational(const Rational& q) {
    return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

inline Real eval_products(const std::vector<ProductTerm>& terms) {
    Real v = 0;
    for (const auto& t : terms) {
        Real p = eval_rational(t.coeff);
        for (const auto& idx : t.factors) p *= eval_mzv(idx).value;
        v += p;
    }
    return v;
}

inline Real census_entry_value(const CensusEntry& e) {
    const Real z2 = eval_mzv(MzvIndex{2}).value;
    const Real z3 = eval_mzv(MzvIndex{3}).value;
    return eval_rational(e.c2) * z2 + eval_rational(e.c3) * z3 + eval_rational(e.c22) * z2 * z2;
}

}  // namespace wzeta
