#include "etaq/series.hpp"

#include <algorithm>

namespace etaq {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw OutOfRange("TruncatedSeries: negative order");
    c_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw OutOfRange("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = Rational(1);
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coeff, int power, int order) {
    if (power < 0) throw OutOfRange("monomial: negative power");
    TruncatedSeries s(order);
    if (power <= order) s.c_[static_cast<size_t>(power)] = coeff;
    return s;
}

const Rational& TruncatedSeries::coeff(int n) const {
    if (n < 0 || n > order()) throw OutOfRange("coeff: index outside truncation order");
    return c_[static_cast<size_t>(n)];
}

void TruncatedSeries::set_coeff(int n, Rational value) {
    if (n < 0 || n > order()) throw OutOfRange("set_coeff: index outside truncation order");
    c_[static_cast<size_t>(n)] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int TruncatedSeries::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw OutOfRange("truncated: order must shrink, coefficients past the order are unknown");
    TruncatedSeries s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::shifted_up(int m) const {
    if (m < 0) throw OutOfRange("shifted_up: negative shift");
    TruncatedSeries s(order() + m);
    std::copy(c_.begin(), c_.end(), s.c_.begin() + m);
    return s;
}

TruncatedSeries TruncatedSeries::shifted_down(int m) const {
    if (m < 0 || m > order()) throw OutOfRange("shifted_down: shift exceeds order");
    for (int i = 0; i < m; ++i)
        if (!c_[static_cast<size_t>(i)].is_zero())
            throw OutOfRange("shifted_down: nonzero coefficient below the shift");
    TruncatedSeries s(order() - m);
    std::copy(c_.begin() + m, c_.end(), s.c_.begin());
    return s;
}

void TruncatedSeries::mul_one_minus_qn_pow(int n, int e) {
    if (n <= 0) throw OutOfRange("mul_one_minus_qn_pow: n must be positive");
    const int N = order();
    if (n > N || e == 0) return;
    if (e > 0) {
        for (int pass = 0; pass < e; ++pass)
            for (int i = N; i >= n; --i)
                if (!c_[static_cast<size_t>(i - n)].is_zero())
                    c_[static_cast<size_t>(i)].sub_assign(c_[static_cast<size_t>(i - n)]);
    } else {
        for (int pass = 0; pass < -e; ++pass)
            for (int i = n; i <= N; ++i)
                if (!c_[static_cast<size_t>(i - n)].is_zero())
                    c_[static_cast<size_t>(i)].add_assign(c_[static_cast<size_t>(i - n)]);
    }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    for (int i = 0; i <= N; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    for (int i = 0; i <= N; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int N = std::min(a.order(), b.order());
    TruncatedSeries s(N);
    Rational t;
    for (int i = 0; i <= N; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.c_[j].is_zero()) continue;
            t.assign_mul(a.c_[i], b.c_[j]);
            s.c_[i + j].add_assign(t);
        }
    }
    return s;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.c_[i] = s * a.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    return Rational(-1) * *this;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    auto power_str = [](int n) {
        if (n == 0) return std::string();
        if (n == 1) return std::string("q");
        return "q^" + std::to_string(n);
    };
    for (int n = 0; n <= order(); ++n) {
        const Rational& a = c_[static_cast<size_t>(n)];
        if (a.is_zero()) continue;
        Rational mag = a.is_negative() ? -a : a;
        std::string term;
        if (n == 0) {
            term = mag.to_string();
        } else if (mag == Rational(1)) {
            term = power_str(n);
        } else {
            term = mag.to_string() + "*" + power_str(n);
        }
        if (out.empty()) {
            out = (a.is_negative() ? "-" : "") + term;
        } else {
            out += (a.is_negative() ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries invert(const TruncatedSeries& a) {
    if (a.coeff(0).is_zero())
        throw ZeroConstantTerm("invert: constant term is zero");
    const int N = a.order();
    std::vector<int> support;
    for (int k = 1; k <= N; ++k)
        if (!a.coeff(k).is_zero()) support.push_back(k);

    TruncatedSeries b(N);
    const Rational inv0 = a.coeff(0).reciprocal();
    b.set_coeff(0, inv0);
    Rational acc, t;
    for (int n = 1; n <= N; ++n) {
        acc = Rational(0);
        for (int k : support) {
            if (k > n) break;
            t.assign_mul(a.coeff(k), b.coeff(n - k));
            acc.add_assign(t);
        }
        b.set_coeff(n, -(inv0 * acc));
    }
    return b;
}

TruncatedSeries q_derive(const TruncatedSeries& a) {
    TruncatedSeries s(a.order());
    for (int n = 1; n <= a.order(); ++n)
        s.set_coeff(n, Rational(static_cast<long>(n)) * a.coeff(n));
    return s;
}

TruncatedSeries pow_int(const TruncatedSeries& a, long e) {
    if (e == 0) return TruncatedSeries::one(a.order());
    if (e < 0) return pow_int(invert(a), -e);
    TruncatedSeries acc = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

} // namespace etaq
