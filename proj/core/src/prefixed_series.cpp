#include "etaq/prefixed_series.hpp"

#include <algorithm>

namespace etaq {

PrefixedSeries::PrefixedSeries(Rational exponent, TruncatedSeries body)
    : exp_(std::move(exponent)), body_(std::move(body)) {
    normalize();
}

void PrefixedSeries::normalize() {
    const int v = body_.valuation();
    if (v < 0) {
        exp_ = Rational(0);
    } else if (v > 0) {
        exp_ += Rational(static_cast<long>(v));
        body_ = body_.shifted_down(v);
    }
}

PrefixedSeries PrefixedSeries::plain(TruncatedSeries body) {
    return PrefixedSeries(Rational(0), std::move(body));
}

PrefixedSeries PrefixedSeries::zero(int order) {
    return PrefixedSeries(Rational(0), TruncatedSeries(order));
}

PrefixedSeries operator*(const PrefixedSeries& a, const PrefixedSeries& b) {
    return PrefixedSeries(a.exp_ + b.exp_, a.body_ * b.body_);
}

PrefixedSeries operator+(const PrefixedSeries& a, const PrefixedSeries& b) {
    const int N = std::min(a.order(), b.order());
    if (a.is_zero()) return PrefixedSeries(b.exp_, b.body_.truncated(N));
    if (b.is_zero()) return PrefixedSeries(a.exp_, a.body_.truncated(N));
    if (a.exp_ != b.exp_)
        throw ExponentMismatch("sum of prefixed series with exponents " +
                               a.exp_.to_string() + " and " + b.exp_.to_string());
    return PrefixedSeries(a.exp_, a.body_ + b.body_);
}

PrefixedSeries operator-(const PrefixedSeries& a, const PrefixedSeries& b) {
    return a + (Rational(-1) * b);
}

PrefixedSeries operator/(const PrefixedSeries& a, const PrefixedSeries& b) {
    if (b.is_zero()) throw ZeroConstantTerm("division by the zero series");
    return PrefixedSeries(a.exp_ - b.exp_, a.body_ * invert(b.body_));
}

PrefixedSeries operator*(const Rational& s, const PrefixedSeries& a) {
    return PrefixedSeries(a.exp_, s * a.body_);
}

TruncatedSeries PrefixedSeries::to_plain() const {
    if (is_zero()) return body_;
    if (!exp_.is_integer() || exp_.is_negative())
        throw PrefixMismatch("exponent " + exp_.to_string() +
                             " is not a non-negative integer");
    const mpz_class& num = exp_.numerator();
    if (!num.fits_sint_p())
        throw PrefixMismatch("exponent too large: " + exp_.to_string());
    return body_.shifted_up(static_cast<int>(num.get_si()));
}

std::string PrefixedSeries::to_string() const {
    return "q^{" + exp_.to_string() + "} * (" + body_.to_string() + ")";
}

PrefixedSeries q_derive(const PrefixedSeries& a) {
    return PrefixedSeries(a.exponent(), a.exponent() * a.body() + q_derive(a.body()));
}

TruncatedSeries log_derivative(const PrefixedSeries& a) {
    if (a.is_zero()) throw ZeroConstantTerm("log_derivative of the zero series");
    TruncatedSeries ratio = q_derive(a.body()) * invert(a.body());
    ratio.set_coeff(0, ratio.coeff(0) + a.exponent());
    return ratio;
}

PrefixedSeries pow_int(const PrefixedSeries& a, long e) {
    if (e == 0) return PrefixedSeries::plain(TruncatedSeries::one(a.order()));
    if (e < 0) {
        PrefixedSeries inv = PrefixedSeries::plain(TruncatedSeries::one(a.order())) / a;
        return pow_int(inv, -e);
    }
    return PrefixedSeries(Rational(static_cast<long>(e)) * a.exponent(),
                          pow_int(a.body(), e));
}

} // namespace etaq
