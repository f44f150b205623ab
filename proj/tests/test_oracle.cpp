#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "wzeta/oracle.hpp"
#include "wzeta/stuffle.hpp"

using namespace wzeta;

namespace {

bool near(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace

TEST_CASE("two-variable lattice sums match series values", "[oracle]") {
    // sum over (m1,m2) of 1/(m2 (m1+m2)^2) = z(2,1) = z(3)
    NumericResult r = oracle_lattice_sum(
        {{LinearForm{{0, 1}}, 1}, {LinearForm{{1, 1}}, 2}}, 2, 2048);
    // box truncation of a nested-type sum loses log-weighted 1/N tails; the
    // reported bound has to cover the residual after extrapolation
    CHECK(abs(r.value - eval_mzv({3}).value) <= r.errorBound);
    CHECK(near(r.value, eval_mzv({3}).value, Real("1e-4")));
    CHECK(r.errorBound > 0);
    CHECK(r.errorBound < Real("1e-3"));
    CHECK(r.method == "truncated-sum+extrapolation");
}

TEST_CASE("three-variable lattice sums match reduced values", "[oracle]") {
    // all weight on the total: sum (m1+m2+m3)^-4 = z(2)/2 - 3 z(3)/2 + z(4)
    NumericResult r = oracle_zeta3({0, 0, 0, 0, 0, 0, 4}, 256);
    MzvCombination truth;
    truth += Rational(1, 2) * MzvCombination::zeta({2});
    truth -= Rational(3, 2) * MzvCombination::zeta({3});
    truth += MzvCombination::zeta({4});
    CHECK(abs(r.value - eval_combo(truth).value) <= r.errorBound);
    CHECK(near(r.value, eval_combo(truth).value, Real("1e-4")));

    NumericResult r6 = oracle_sl4({1, 1, 1, 1, 1, 1}, 256);
    CHECK(abs(r6.value - Real("0.261745353407442")) <= r6.errorBound);
    CHECK(near(r6.value, Real("0.261745353407442"), Real("5e-4")));
}

TEST_CASE("product-chain lattice sums", "[oracle]") {
    // sum 1/(m1 m2 (m1+m2)) = 2 z(2,1)
    NumericResult r = oracle_mt({1, 1}, 1, 2048);
    CHECK(abs(r.value - 2 * eval_mzv({2, 1}).value) <= r.errorBound);
    CHECK(near(r.value, 2 * eval_mzv({2, 1}).value, Real("2e-3")));

    // zero outer exponent leaves a plain product of independent sums
    NumericResult p = oracle_mt({2, 3}, 0, 1024);
    CHECK(abs(p.value - eval_mzv({2}).value * eval_mzv({3}).value) <= p.errorBound);
    CHECK(near(p.value, eval_mzv({2}).value * eval_mzv({3}).value, Real("1e-4")));
}

TEST_CASE("doubling driver reaches the requested bound", "[oracle]") {
    std::vector<FactoredTerm> factors{{LinearForm{{1, 0}}, 2},
                                      {LinearForm{{0, 1}}, 1},
                                      {LinearForm{{1, 1}}, 1}};
    NumericResult r = oracle_auto(factors, 2, 1e-6, 256, 16384);
    CHECK(r.errorBound <= Real("1e-6"));
    // MT(2,1;1) = 2 z(3,1) + z(2,2)
    MzvCombination truth = Rational(2) * MzvCombination::zeta({3, 1}) + MzvCombination::zeta({2, 2});
    CHECK(near(r.value, eval_combo(truth).value, Real("1e-6")));
}

TEST_CASE("refining the cutoff stays within the advisory bound", "[oracle]") {
    std::vector<FactoredTerm> factors{{LinearForm{{0, 1}}, 1}, {LinearForm{{1, 1}}, 2}};
    NumericResult coarse = oracle_lattice_sum(factors, 2, 512, 3);
    NumericResult fine = oracle_lattice_sum(factors, 2, 2048, 3);
    CHECK(abs(coarse.value - fine.value) <= coarse.errorBound + fine.errorBound);
}

TEST_CASE("lattice oracle input validation", "[oracle]") {
    CHECK_THROWS_AS(oracle_lattice_sum({{LinearForm{{1, 0, 0, 0}}, 2}}, 4, 512, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_lattice_sum({{LinearForm{{1, 1}}, 2}}, 2, 8, 3), std::invalid_argument);
    CHECK_THROWS_AS(oracle_zeta3({0, 0, 0, 1, 1, 0, 1}, 256, 3), DivergenceError);
    CHECK_THROWS_AS(oracle_mt({1, 1}, 0, 512, 3), DivergenceError);
}

TEST_CASE("nested-sum oracle on known values", "[oracle]") {
    CHECK(near(oracle_mzv_nested({2, 1}).value, eval_mzv({3}).value, Real("1e-6")));
    CHECK(near(oracle_mzv_nested({4, -1}).value,
               (eval_mzv({2}).value - eval_mzv({3}).value) / 2, Real("1e-8")));
    CHECK_THROWS_AS(oracle_mzv_nested({1, 2}), DivergenceError);
}

TEST_CASE("integer-argument rewrite agrees with the nested oracle", "[oracle]") {
    // every convergent index with entries in [-1,4] and depth <= 3
    std::vector<MzvIndex> candidates;
    for (long long a = -1; a <= 4; ++a) {
        candidates.push_back({a});
        for (long long b = -1; b <= 4; ++b) {
            candidates.push_back({a, b});
            for (long long c = -1; c <= 4; ++c) candidates.push_back({a, b, c});
        }
    }
    int checked = 0;
    for (const MzvIndex& s : candidates) {
        if (!mzv_is_convergent(s)) continue;
        Real symbolic = eval_combo(normalize_integer_args(s)).value;
        Real brute = oracle_mzv_nested(s, 1LL << 16).value;
        REQUIRE(near(symbolic, brute, Real("1e-6")));
        ++checked;
    }
    CHECK(checked == 99);
}
