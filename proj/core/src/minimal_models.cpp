#include "etaq/minimal_models.hpp"

#include <cassert>
#include <numeric>

#include "etaq/number_theory.hpp"
#include "etaq/special_series.hpp"

namespace etaq {

namespace {

void check_family(unsigned k, unsigned i) {
    if (k < 2) throw OutOfRange("family parameter k must be at least 2");
    if (i < 1 || i > k)
        throw OutOfRange("module index i=" + std::to_string(i) + " outside 1.." +
                         std::to_string(k));
}

} // namespace

Rational central_charge(unsigned p, unsigned q) {
    if (p < 2 || q < 2) throw BadLabel("central_charge: p and q must be at least 2");
    if (std::gcd(p, q) != 1)
        throw NotCoprime("central_charge: gcd(" + std::to_string(p) + ", " +
                         std::to_string(q) + ") != 1");
    const long diff = static_cast<long>(p) - static_cast<long>(q);
    return Rational(1) - Rational(6 * diff * diff, static_cast<long>(p) * q);
}

Rational conformal_weight(const MinimalModelLabel& label) {
    if (label.p < 2 || label.q < 2) throw BadLabel("conformal_weight: p, q >= 2 required");
    if (std::gcd(label.p, label.q) != 1)
        throw NotCoprime("conformal_weight: p and q must be coprime");
    if (label.m < 1 || label.m >= label.p || label.n < 1 || label.n >= label.q)
        throw BadLabel("conformal_weight: (m, n) outside the Kac table");
    const long np = static_cast<long>(label.n) * label.p;
    const long mq = static_cast<long>(label.m) * label.q;
    const long diff = static_cast<long>(label.p) - static_cast<long>(label.q);
    return Rational((np - mq) * (np - mq) - diff * diff,
                    4L * label.p * label.q);
}

Rational shifted_weight(unsigned k, unsigned i) {
    check_family(k, i);
    const long kk = static_cast<long>(k), ii = static_cast<long>(i);
    return Rational(6 * ii * ii - 6 * ii + 1 + 6 * kk * kk - 12 * kk * ii + 5 * kk,
                    12 * (2 * kk + 1));
}

Rational shifted_weight_sum(unsigned k) {
    check_family(k, 1);
    Rational acc;
    for (unsigned i = 1; i <= k; ++i) acc += shifted_weight(k, i);
    return acc;
}

Rational vandermonde_constant(unsigned k) {
    check_family(k, 1);
    mpz_class num = 1;
    for (unsigned i = 1; i < k; ++i) num *= factorial(2 * i);
    mpz_class base = -4L * static_cast<long>(k) - 2L;
    mpz_class den;
    mpz_pow_ui(den.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(k) * (k - 1) / 2);
    return Rational(num, den);
}

PrefixedSeries modified_character(unsigned k, unsigned i, int order) {
    check_family(k, i);
    const unsigned modulus = 2 * k + 1;
    /* 2i = 2k+1 has no integer solution, so i and its mirror never meet. */
    assert(i != modulus - i);
    std::vector<ProgressionFactor> factors;
    for (unsigned r = 1; r < modulus; ++r)
        if (r != i && r != modulus - i) factors.push_back({r, -1});
    return PrefixedSeries(
        shifted_weight(k, i),
        progression_product(ProgressionProductSpec(modulus, std::move(factors)), order));
}

TruncatedSeries character_log_derivative(unsigned k, unsigned i, int order) {
    check_family(k, i);
    const unsigned modulus = 2 * k + 1;
    TruncatedSeries result(order);
    result.set_coeff(0, shifted_weight(k, i));
    for (int n = 1; n <= order; ++n) {
        const unsigned r = static_cast<unsigned>(n) % modulus;
        if (r == 0 || r == i || r == modulus - i) continue;
        for (int m = n; m <= order; m += n)
            result.set_coeff(m, result.coeff(m) + Rational(static_cast<long>(n)));
    }
    return result;
}

} // namespace etaq
