#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "wzeta/partial_fractions.hpp"

using namespace wzeta;

namespace {

Rational rat_pow(const Rational& b, long long e) {
    Rational r(1);
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

// value of prod x_j^{-n_j} at the point
Rational lhs_value(const std::vector<FactoredTerm>& fs, const std::vector<Rational>& pt) {
    Rational v(1);
    for (const auto& f : fs) v /= rat_pow(f.form.eval(pt), f.exp);
    return v;
}

Rational rhs_value(const PfExpansion& e, const std::vector<Rational>& pt) {
    Rational v(0);
    Rational x = e.x.eval(pt);
    for (const auto& t : e.terms) {
        Rational w = Rational(t.coeff) / rat_pow(x, t.xExp);
        for (const auto& f : t.rest) w /= rat_pow(f.form.eval(pt), f.exp);
        v += w;
    }
    return v;
}

}  // namespace

TEST_CASE("linear form basics", "[pf]") {
    LinearForm a{{1, 0, 1}};
    LinearForm b{{0, 1, 0}};
    CHECK((a + b).c == std::vector<long long>{1, 1, 1});
    CHECK(a.eval_ll({2, 5, 3}) == 5);
    CHECK(a.eval({Rational(1, 2), Rational(0), Rational(1, 3)}) == Rational(5, 6));
    CHECK(LinearForm{{0, 0}}.is_zero());
    CHECK_FALSE(a.is_zero());
    CHECK_THROWS_AS((a + LinearForm{{1, 1}}), std::invalid_argument);
}

TEST_CASE("expansion shape for simple inputs", "[pf]") {
    LinearForm m1{{1, 0}}, m2{{0, 1}};

    SECTION("single factor passes through") {
        PfExpansion e = pf_expand({{m1 + m2, 3}});
        REQUIRE(e.terms.size() == 1);
        CHECK(e.x.c == std::vector<long long>{1, 1});
        CHECK(e.terms[0].xExp == 3);
        CHECK(e.terms[0].coeff == 1);
        CHECK(e.terms[0].rest.empty());
    }

    SECTION("1/(x1 x2) = 1/x * (1/x1 + 1/x2)") {
        PfExpansion e = pf_expand({{m1, 1}, {m2, 1}});
        REQUIRE(e.terms.size() == 2);
        for (const auto& t : e.terms) {
            CHECK(t.coeff == 1);
            CHECK(t.xExp == 1);
            REQUIRE(t.rest.size() == 1);
            CHECK(t.rest[0].exp == 1);
        }
    }

    SECTION("term count is sum over j of prod of other exponents") {
        PfExpansion e = pf_expand({{m1, 2}, {m2, 3}});
        CHECK(e.terms.size() == 5);
        LinearForm m3{{0, 0, 1}};
        PfExpansion e3 = pf_expand({{LinearForm{{1, 0, 0}}, 2}, {LinearForm{{0, 1, 0}}, 2}, {m3, 2}});
        CHECK(e3.terms.size() == 12);
    }
}

TEST_CASE("invalid inputs are rejected", "[pf]") {
    LinearForm m1{{1, 0}};
    CHECK_THROWS_AS(pf_expand({}), std::invalid_argument);
    CHECK_THROWS_AS(pf_expand({{m1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(pf_expand({{m1, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(pf_expand({{m1, 1}, {LinearForm{{1, 0, 0}}, 1}}), std::invalid_argument);
    // combined form identically zero
    CHECK_THROWS_AS(pf_expand({{m1, 1}, {LinearForm{{-1, 0}}, 1}}), std::invalid_argument);
}

TEST_CASE("expansion is an exact rational identity", "[pf]") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<long long> coeffDist(0, 2);
    std::uniform_int_distribution<long long> expDist(1, 3);
    std::uniform_int_distribution<int> rDist(2, 3);
    std::uniform_int_distribution<long long> ptDist(1, 9);

    int checked = 0;
    while (checked < 200) {
        int r = rDist(rng);
        std::vector<FactoredTerm> fs;
        for (int j = 0; j < r; ++j) {
            LinearForm f{{coeffDist(rng), coeffDist(rng), coeffDist(rng)}};
            if (f.is_zero()) f.c[j % 3] = 1;
            fs.push_back({f, expDist(rng)});
        }
        PfExpansion e = pf_expand(fs);

        std::vector<Rational> pt{Rational(ptDist(rng), ptDist(rng)), Rational(ptDist(rng), ptDist(rng)),
                                 Rational(ptDist(rng), ptDist(rng))};
        REQUIRE(lhs_value(fs, pt) == rhs_value(e, pt));
        ++checked;
    }
}

TEST_CASE("expansion handles signed forms", "[pf]") {
    // factors (m1 - m2)^2 and m2^1 combine to x = m1, still an identity
    LinearForm diff{{1, -1}}, m2{{0, 1}};
    std::vector<FactoredTerm> fs{{diff, 2}, {m2, 1}};
    PfExpansion e = pf_expand(fs);
    CHECK(e.x.c == std::vector<long long>{1, 0});
    std::vector<Rational> pt{Rational(7, 2), Rational(1, 3)};  // keeps all forms nonzero
    CHECK(lhs_value(fs, pt) == rhs_value(e, pt));
}
