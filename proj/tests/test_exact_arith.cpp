#include <catch2/catch_amalgamated.hpp>

#include "wzeta/bernoulli.hpp"
#include "wzeta/polynomial.hpp"
#include "wzeta/rational.hpp"

using namespace wzeta;

TEST_CASE("binomial coefficients", "[exact]") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == Int("137846528820"));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

    // Pascal rule on a block
    for (long long n = 1; n <= 20; ++n)
        for (long long k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial and integer powers", "[exact]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(pow_int(Int(3), 4) == 81);
    CHECK(pow_int(Int(-2), 3) == -8);
    CHECK(pow_int(Int(7), 0) == 1);
}

TEST_CASE("rational formatting", "[exact]") {
    CHECK(rational_str(Rational(3, 2)) == "3/2");
    CHECK(rational_str(Rational(4)) == "4");
    CHECK(rational_str(Rational(-1, 2)) == "-1/2");
    CHECK(rational_str(Rational(6, 4)) == "3/2");  // normalized by the type
}

TEST_CASE("polynomial arithmetic", "[exact]") {
    RatPolynomial one({Rational(1)});
    RatPolynomial x = RatPolynomial::monomial(1, Rational(1));
    RatPolynomial p = (one + x) * (one + x);
    CHECK(p.coefficients() == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(3)) == 16);

    RatPolynomial sq = x * x;
    RatPolynomial shifted = sq.shifted(Rational(1));  // (x+1)^2
    CHECK(shifted.coefficients() == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});

    RatPolynomial z = p - p;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("Bernoulli numbers", "[exact]") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(8) == Rational(-1, 30));
    CHECK(bernoulli_number(10) == Rational(5, 66));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (long long n = 3; n <= 13; n += 2) CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("Bernoulli polynomials", "[exact]") {
    CHECK(bernoulli_poly(0).coefficients() == std::vector<Rational>{Rational(1)});
    CHECK(bernoulli_poly(1).coefficients() == std::vector<Rational>{Rational(-1, 2), Rational(1)});
    CHECK(bernoulli_poly(2).coefficients() ==
          std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)});
    // B_n(x+1) - B_n(x) = n x^(n-1)
    for (long long n = 1; n <= 8; ++n) {
        RatPolynomial diff = bernoulli_poly(n).shifted(Rational(1)) - bernoulli_poly(n);
        RatPolynomial expect = RatPolynomial::monomial(n - 1, Rational(n));
        CHECK(diff == expect);
    }
}

TEST_CASE("power-sum polynomials", "[exact]") {
    CHECK(faulhaber(0).coefficients() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(faulhaber(1).coefficients() ==
          std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1, 2)});

    // anchors used by the integer-argument rewrite
    for (long long t = 0; t <= 12; ++t) {
        CHECK(faulhaber(t).eval(Rational(0)) == 0);
        CHECK(faulhaber(t).eval(Rational(-1)) == (t == 0 ? Rational(-1) : Rational(0)));
    }

    for (long long t = 0; t <= 12; ++t) {
        RatPolynomial p = faulhaber(t);
        Rational acc(0);
        for (long long n = 1; n <= 50; ++n) {
            acc += pow_int(Int(n), t);
            REQUIRE(p.eval(Rational(n)) == acc);
        }
    }
}
