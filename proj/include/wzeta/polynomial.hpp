#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wzeta/rational.hpp"

namespace wzeta {

// Univariate polynomial over Q. Coefficients ascending by power; no trailing
// zeros (the zero polynomial has an empty coefficient vector).
class RatPolynomial {
  public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPolynomial monomial(std::size_t power, const Rational& coeff) {
        std::vector<Rational> c(power + 1, Rational(0));
        c[power] = coeff;
        return RatPolynomial(std::move(c));
    }

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    RatPolynomial& operator+=(const RatPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }

    RatPolynomial& operator-=(const RatPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }

    RatPolynomial& operator*=(const Rational& q) {
        if (q == 0) {
            c_.clear();
        } else {
            for (auto& v : c_) v *= q;
        }
        return *this;
    }
    friend RatPolynomial operator*(RatPolynomial a, const Rational& q) { return a *= q; }
    friend RatPolynomial operator*(const Rational& q, RatPolynomial a) { return a *= q; }

    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RatPolynomial(std::move(c));
    }

    // p(x + shift)
    RatPolynomial shifted(const Rational& shift) const {
        std::vector<Rational> r(c_.size(), Rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            Rational p(1);  // shift^(k-j), built from the top power down
            for (std::size_t j = k + 1; j-- > 0;) {
                r[j] += c_[k] * Rational(binomial(static_cast<long long>(k), static_cast<long long>(j))) * p;
                p *= shift;
            }
        }
        return RatPolynomial(std::move(r));
    }

    bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

}  // namespace wzeta
