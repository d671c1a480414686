#include "etaq/special_series.hpp"

#include <set>

#include "etaq/number_theory.hpp"

namespace etaq {

ProgressionProductSpec::ProgressionProductSpec(unsigned modulus,
                                               std::vector<ProgressionFactor> factors)
    : modulus_(modulus), factors_(std::move(factors)) {
    if (modulus_ == 0) throw BadResidue("progression product: modulus must be positive");
    std::set<unsigned> seen;
    for (const auto& f : factors_) {
        if (f.residue >= modulus_)
            throw BadResidue("progression product: residue " + std::to_string(f.residue) +
                             " not below modulus " + std::to_string(modulus_));
        if (!seen.insert(f.residue).second)
            throw BadResidue("progression product: duplicate residue " +
                             std::to_string(f.residue));
    }
}

TruncatedSeries progression_product(const ProgressionProductSpec& spec, int order) {
    TruncatedSeries result = TruncatedSeries::one(order);
    const int m = static_cast<int>(spec.modulus());
    for (const auto& factor : spec.factors()) {
        int start = static_cast<int>(factor.residue);
        if (start == 0) start = m;
        for (int n = start; n <= order; n += m)
            result.mul_one_minus_qn_pow(n, factor.exponent);
    }
    return result;
}

TruncatedSeries euler_product(int order) {
    return progression_product(ProgressionProductSpec(1, {{0, 1}}), order);
}

TruncatedSeries euler_product_scaled(unsigned m, int order) {
    if (m == 0) throw BadResidue("euler_product_scaled: zero scale");
    return progression_product(ProgressionProductSpec(m, {{0, 1}}), order);
}

CharacterWeighting CharacterWeighting::trivial(unsigned n_power, unsigned m_power) {
    return CharacterWeighting(0, n_power, m_power);
}

CharacterWeighting CharacterWeighting::legendre(unsigned long prime, unsigned n_power,
                                                unsigned m_power) {
    legendre_symbol(1L, prime); // validates the modulus
    return CharacterWeighting(prime, n_power, m_power);
}

int CharacterWeighting::chi(unsigned long n) const {
    if (legendre_prime_ == 0) return 1;
    return legendre_symbol(static_cast<long>(n % legendre_prime_), legendre_prime_);
}

TruncatedSeries lambert(const CharacterWeighting& weighting, int order) {
    TruncatedSeries result(order);
    mpz_class npow, mpow, term;
    for (unsigned long n = 1; n <= static_cast<unsigned long>(order); ++n) {
        const int sign = weighting.chi(n);
        if (sign == 0) continue;
        mpz_ui_pow_ui(npow.get_mpz_t(), n, weighting.n_power());
        if (sign < 0) npow = -npow;
        for (unsigned long m = 1; n * m <= static_cast<unsigned long>(order); ++m) {
            mpz_ui_pow_ui(mpow.get_mpz_t(), m, weighting.m_power());
            term = npow * mpow;
            const int idx = static_cast<int>(n * m);
            result.set_coeff(idx, result.coeff(idx) + Rational(term));
        }
    }
    return result;
}

TruncatedSeries eisenstein(unsigned weight, int order) {
    if (weight < 2 || weight % 2 != 0)
        throw BadWeight("eisenstein: weight must be even and at least 2");
    TruncatedSeries result(order);
    result.set_coeff(0, -bernoulli(weight) / Rational(factorial(weight)));
    const Rational scale = Rational(2) / Rational(factorial(weight - 1));
    for (int n = 1; n <= order; ++n)
        result.set_coeff(n, scale * Rational(sigma(weight - 1,
                                                   static_cast<unsigned long>(n))));
    return result;
}

PrefixedSeries eta_quotient(const std::vector<std::pair<unsigned, int>>& scales,
                            int order) {
    Rational exponent;
    TruncatedSeries body = TruncatedSeries::one(order);
    for (const auto& [m, e] : scales) {
        if (m == 0) throw BadResidue("eta_quotient: zero scale");
        exponent += Rational(static_cast<long>(e) * static_cast<long>(m), 24);
        for (int n = static_cast<int>(m); n <= order; n += static_cast<int>(m))
            body.mul_one_minus_qn_pow(n, e);
    }
    return PrefixedSeries(exponent, std::move(body));
}

TruncatedSeries partition_series(int order) {
    return invert(euler_product(order));
}

TruncatedSeries extract_progression(const TruncatedSeries& f, unsigned modulus,
                                    unsigned residue) {
    if (modulus == 0 || residue >= modulus)
        throw BadResidue("extract_progression: residue " + std::to_string(residue) +
                         " mod " + std::to_string(modulus));
    const int r = static_cast<int>(residue);
    const int m = static_cast<int>(modulus);
    if (f.order() < r)
        throw OutOfRange("extract_progression: series order below the residue");
    TruncatedSeries result((f.order() - r) / m);
    for (int n = 0; n <= result.order(); ++n)
        result.set_coeff(n, f.coeff(m * n + r));
    return result;
}

TruncatedSeries rr_sum_side(int variant, int order) {
    if (variant != 1 && variant != 2)
        throw OutOfRange("rr_sum_side: variant must be 1 or 2");
    TruncatedSeries acc(order);
    for (long n = 0;; ++n) {
        const long lead = variant == 1 ? n * n + n : n * n;
        if (lead > order) break;
        /* q^{lead} / (q;q)_n needs the Pochhammer only through order-lead. */
        TruncatedSeries poch = TruncatedSeries::one(order - static_cast<int>(lead));
        for (long j = 1; j <= n; ++j)
            poch.mul_one_minus_qn_pow(static_cast<int>(j), 1);
        acc = acc + invert(poch).shifted_up(static_cast<int>(lead));
    }
    return acc;
}

} // namespace etaq
