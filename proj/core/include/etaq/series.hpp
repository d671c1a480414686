#pragma once

#include <string>
#include <vector>

#include "etaq/rational.hpp"

namespace etaq {

/* Truncated formal power series sum_{n=0..order} c_n q^n with exact
 * rational coefficients. Coefficients beyond the order are unknown, not
 * zero, so the order is part of the value: binary operations return the
 * minimum of the two input orders and nothing is ever trusted past it. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries one(int order);
    static TruncatedSeries constant(const Rational& value, int order);
    static TruncatedSeries monomial(const Rational& coeff, int power, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, Rational value);
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /* Index of the first nonzero coefficient, or -1 for the zero series. */
    int valuation() const;

    TruncatedSeries truncated(int new_order) const;
    /* Multiplication by q^m; the result is exact through order+m. */
    TruncatedSeries shifted_up(int m) const;
    /* Division by q^m, requiring the first m coefficients to vanish. */
    TruncatedSeries shifted_down(int m) const;

    /* In-place multiplication by (1 - q^n)^e, exact through the order.
     * Applied as |e| passes of a stride-n update, so the cost is
     * O(|e| * order) rather than a full Cauchy product per factor. */
    void mul_one_minus_qn_pow(int n, int e);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
    TruncatedSeries operator-() const;

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    /* "a0 + a1*q + a2*q^2 + ..." with zero terms omitted; "0" when empty. */
    std::string to_string() const;

private:
    std::vector<Rational> c_;
};

/* Multiplicative inverse through the order via the standard recursive
 * convolution b_n = -(1/a_0) sum_{k>=1} a_k b_{n-k}. Zero coefficients of
 * a are skipped, which makes sparse inputs like Euler products cheap. */
TruncatedSeries invert(const TruncatedSeries& a);

/* The derivation D = q d/dq: c_n -> n c_n. Does not lose order. */
TruncatedSeries q_derive(const TruncatedSeries& a);

/* Integer power by binary exponentiation; negative e inverts first. */
TruncatedSeries pow_int(const TruncatedSeries& a, long e);

} // namespace etaq
