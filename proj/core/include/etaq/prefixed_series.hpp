#pragma once

#include <string>

#include "etaq/series.hpp"

namespace etaq {

/* q^r * f(q) with a rational exponent r and a truncated body f. The value
 * is kept normalized: either f has a nonzero constant term, or f is
 * identically zero (then r is canonically 0). A plain series whose low
 * coefficients vanish normalizes by moving its valuation into the
 * exponent, which shortens the body by the same amount. */
class PrefixedSeries {
public:
    PrefixedSeries(Rational exponent, TruncatedSeries body);

    static PrefixedSeries plain(TruncatedSeries body);
    static PrefixedSeries zero(int order);

    const Rational& exponent() const { return exp_; }
    const TruncatedSeries& body() const { return body_; }
    int order() const { return body_.order(); }
    bool is_zero() const { return body_.is_zero(); }

    /* Products add exponents and multiply bodies. */
    friend PrefixedSeries operator*(const PrefixedSeries& a, const PrefixedSeries& b);
    /* Sums require equal exponents (ExponentMismatch otherwise); a zero
     * operand only contributes its truncation order. */
    friend PrefixedSeries operator+(const PrefixedSeries& a, const PrefixedSeries& b);
    friend PrefixedSeries operator-(const PrefixedSeries& a, const PrefixedSeries& b);
    /* Division subtracts exponents and inverts the body, which must be a
     * unit (ZeroConstantTerm for a zero divisor). */
    friend PrefixedSeries operator/(const PrefixedSeries& a, const PrefixedSeries& b);
    friend PrefixedSeries operator*(const Rational& s, const PrefixedSeries& a);

    bool operator==(const PrefixedSeries& o) const {
        return exp_ == o.exp_ && body_ == o.body_;
    }

    /* Re-embeds q^r * f as a plain series; r must be a non-negative
     * integer (PrefixMismatch otherwise). */
    TruncatedSeries to_plain() const;

    /* "q^{r} * (a0 + a1*q + ...)". */
    std::string to_string() const;

private:
    void normalize();

    Rational exp_;
    TruncatedSeries body_;
};

/* D = q d/dq on the prefixed value: q^r f -> q^r (r f + D f). */
PrefixedSeries q_derive(const PrefixedSeries& a);

/* D(y)/y as a plain series: r + D(f)/f. The body must be a unit. */
TruncatedSeries log_derivative(const PrefixedSeries& a);

PrefixedSeries pow_int(const PrefixedSeries& a, long e);

} // namespace etaq
