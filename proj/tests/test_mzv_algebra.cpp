#include <catch2/catch_amalgamated.hpp>

#include "wzeta/mzv.hpp"
#include "wzeta/stuffle.hpp"

using namespace wzeta;

namespace {

MzvCombination combo(std::initializer_list<std::pair<long long, MzvIndex>> ts) {
    MzvCombination c;
    for (const auto& [q, idx] : ts) c.add(mono_zeta(idx), Rational(q));
    return c;
}

}  // namespace

TEST_CASE("canonical index predicate", "[mzv]") {
    CHECK(mzv_is_canonical({2}));
    CHECK(mzv_is_canonical({2, 1, 1}));
    CHECK_FALSE(mzv_is_canonical({1, 2}));
    CHECK_FALSE(mzv_is_canonical({2, 0}));
    CHECK_FALSE(mzv_is_canonical({}));
}

TEST_CASE("combination bookkeeping", "[mzv]") {
    MzvCombination c = MzvCombination::zeta({2, 1});
    c += MzvCombination::zeta({2, 1});
    CHECK(c.size() == 1);
    CHECK(c.terms().begin()->second == 2);
    c -= Rational(2) * MzvCombination::zeta({2, 1});
    CHECK(c.empty());
    CHECK(c.str() == "0");

    MzvCombination p = MzvCombination::zeta({2}) * MzvCombination::zeta({3});
    REQUIRE(p.size() == 1);
    CHECK(p.terms().begin()->first.factors.size() == 2);  // formal product, not yet folded
    CHECK(MzvCombination::zeta({3, 2}).str() == "1 z(3,2)");
}

TEST_CASE("quasi-shuffle of index words", "[mzv]") {
    CHECK(stuffle(MzvIndex{2}, MzvIndex{3}) == combo({{1, {2, 3}}, {1, {3, 2}}, {1, {5}}}));
    CHECK(stuffle(MzvIndex{1}, MzvIndex{2, 1}) ==
          combo({{1, {1, 2, 1}}, {2, {2, 1, 1}}, {1, {2, 2}}, {1, {3, 1}}}));
    CHECK(stuffle(MzvIndex{2}, MzvIndex{2, 1}) ==
          combo({{2, {2, 2, 1}}, {1, {2, 1, 2}}, {1, {2, 3}}, {1, {4, 1}}}));
}

TEST_CASE("stuffle with a regularized factor", "[mzv]") {
    MzvCombination r = stuffle(MzvFactor{{2}, true}, MzvFactor{{3}, false});
    // zbar(1,2) * z(3): head-1 words stay regularized
    MzvCombination expect;
    expect.add(mono_zeta_reg({2, 3}), Rational(1));
    expect.add(mono_zeta_reg({3, 2}), Rational(1));
    expect.add(mono_zeta_reg({5}), Rational(1));
    expect.add(mono_zeta({3, 1, 2}), Rational(1));
    expect.add(mono_zeta({4, 2}), Rational(1));
    CHECK(r == expect);

    CHECK_THROWS_AS(stuffle(MzvFactor{{2}, true}, MzvFactor{{3}, true}), std::invalid_argument);
}

TEST_CASE("regularized factor expansion", "[mzv]") {
    // zbar(1,3) = T z(3) - z(3,1) - z(4)
    MzvCombination expect;
    MzvMonomial tm = mono_zeta({3});
    tm.tPower = 1;
    expect.add(tm, Rational(1));
    expect.add(mono_zeta({3, 1}), Rational(-1));
    expect.add(mono_zeta({4}), Rational(-1));
    CHECK(expand_regularized_factor({3}) == expect);

    // zbar(1,2,2) = T z(2,2) - z(2,1,2) - z(2,2,1) - z(2,3) - z(3,2)
    MzvCombination expect2;
    MzvMonomial tm2 = mono_zeta({2, 2});
    tm2.tPower = 1;
    expect2.add(tm2, Rational(1));
    expect2 -= combo({{1, {2, 1, 2}}, {1, {2, 2, 1}}, {1, {2, 3}}, {1, {3, 2}}});
    CHECK(expand_regularized_factor({2, 2}) == expect2);

    CHECK_THROWS_AS(expand_regularized_factor({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(expand_regularized_factor({}), std::invalid_argument);
}

TEST_CASE("integer-argument rewrite", "[mzv]") {
    CHECK(normalize_integer_args({3, 2}) == MzvCombination::zeta({3, 2}));
    // z(4,-1): inner sum of n over n < m gives (m^2 - m)/2
    CHECK(normalize_integer_args({4, -1}) ==
          Rational(1, 2) * combo({{1, {2}}, {-1, {3}}}));
    CHECK(normalize_integer_args({3, 2, 0}) == combo({{1, {3, 1}}, {-1, {3, 2}}}));
    CHECK(normalize_integer_args({4, 0, 2}) == combo({{1, {3, 2}}, {-1, {4, 1}}, {-1, {4, 2}}}));

    SECTION("every output factor is canonical") {
        for (const MzvIndex& s :
             {MzvIndex{3, 0, 1}, MzvIndex{5, -2}, MzvIndex{4, 0, 0, 2}, MzvIndex{6, -1, 2}}) {
            REQUIRE(mzv_is_convergent(s));
            const MzvCombination c = normalize_integer_args(s);
            for (const auto& [m, q] : c.terms()) {
                CHECK(m.tPower == 0);
                REQUIRE(m.factors.size() == 1);
                CHECK_FALSE(m.factors[0].reg);
                CHECK(mzv_is_canonical(m.factors[0].idx));
            }
        }
    }

    SECTION("divergent inputs raise with the failing prefix") {
        CHECK_THROWS_AS(normalize_integer_args({1, 2}), DivergenceError);
        try {
            normalize_integer_args({2, 0, 1});
            FAIL("expected DivergenceError");
        } catch (const DivergenceError& e) {
            REQUIRE(e.conditions.size() == 1);
            CHECK(e.conditions[0] == "s1+...+s2 > 2");
        }
    }
}

TEST_CASE("canonical rewrite of products and regularized parts", "[mzv]") {
    CHECK(canonicalize(MzvCombination::zeta({2}) * MzvCombination::zeta({3})) ==
          combo({{1, {2, 3}}, {1, {3, 2}}, {1, {5}}}));

    SECTION("T stratification") {
        auto byT = canonicalize_by_tpower(MzvCombination::zeta_reg({2}));
        REQUIRE(byT.count(1) == 1);
        REQUIRE(byT.count(0) == 1);
        CHECK(byT.at(1) == MzvCombination::zeta({2}));
        CHECK(byT.at(0) == combo({{-1, {2, 1}}, {-1, {3}}}));
    }

    SECTION("bare regularized value has a T residue") {
        CHECK_THROWS_AS(canonicalize(MzvCombination::zeta_reg({3})), std::domain_error);
    }

    SECTION("cancelling the T part by hand leaves the finite part") {
        MzvCombination c = MzvCombination::zeta_reg({3});
        MzvMonomial tm = mono_zeta({3});
        tm.tPower = 1;
        c.add(tm, Rational(-1));
        CHECK(canonicalize(c) == combo({{-1, {3, 1}}, {-1, {4}}}));
    }

    SECTION("idempotent on already-canonical input") {
        MzvCombination c = canonicalize(MzvCombination::zeta({4, -1}) +
                                        MzvCombination::zeta({2}) * MzvCombination::zeta({2, 1}));
        CHECK(canonicalize(c) == c);
    }
}

TEST_CASE("depth-2 product decomposition shapes", "[mzv]") {
    auto [lhs, rhs] = euler_identity_check(2, 2);
    CHECK(lhs == combo({{2, {2, 2}}, {1, {4}}}));
    CHECK(rhs == combo({{2, {2, 2}}, {4, {3, 1}}}));

    auto [lhs31, rhs31] = euler_identity_check(3, 1);
    CHECK(lhs31 == combo({{1, {4}}}));
    CHECK(rhs31 == combo({{1, {2, 2}}, {1, {3, 1}}}));

    CHECK(euler_depth2_tail(2, 1) == combo({{1, {2, 1}}}));
    CHECK(euler_depth2_tail(2, 2) == combo({{4, {3, 1}}}));  // z(4) = 4 z(3,1)
    CHECK_THROWS_AS(euler_identity_check(1, 1), std::invalid_argument);
}
