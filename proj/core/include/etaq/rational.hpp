#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq {

/* Arbitrary-precision rational number, always in lowest terms with a
 * positive denominator. Zero is 0/1. Every coefficient in the kernel is
 * one of these; floating point is never used. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_ = mpq_class(mpz_class(num), mpz_class(den));
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& n) : v_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /* Remainder of an integer value modulo m, in [0, m). */
    unsigned long mod_ui(unsigned long m) const {
        if (!is_integer()) throw NonIntegerValue("mod_ui on non-integer " + to_string());
        return mpz_fdiv_ui(v_.get_num().get_mpz_t(), m);
    }

    /* GMP's canonical text form: "num/den", or just "num" when den is 1. */
    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw Error("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /* In-place kernels for the convolution loops; they reuse allocated
     * limb storage across iterations instead of churning temporaries. */
    void assign_mul(const Rational& a, const Rational& b) {
        mpq_mul(v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    }
    void add_assign(const Rational& a) {
        mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), a.v_.get_mpq_t());
    }
    void sub_assign(const Rational& a) {
        mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), a.v_.get_mpq_t());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

} // namespace etaq
