#pragma once

#include <utility>
#include <vector>

#include "etaq/prefixed_series.hpp"
#include "etaq/series.hpp"

namespace etaq {

/* One factor family of an arithmetic-progression product: every n >= 1
 * with n = residue (mod modulus) contributes (1 - q^n)^exponent. */
struct ProgressionFactor {
    unsigned residue;
    int exponent;
};

/* Product over arithmetic progressions of (1 - q^n)^e. Residues must lie
 * below the modulus and may appear at most once. */
class ProgressionProductSpec {
public:
    ProgressionProductSpec(unsigned modulus, std::vector<ProgressionFactor> factors);

    unsigned modulus() const { return modulus_; }
    const std::vector<ProgressionFactor>& factors() const { return factors_; }

private:
    unsigned modulus_;
    std::vector<ProgressionFactor> factors_;
};

TruncatedSeries progression_product(const ProgressionProductSpec& spec, int order);

/* (q;q)_inf, Euler's product, truncated. */
TruncatedSeries euler_product(int order);
/* (q^m; q^m)_inf truncated. */
TruncatedSeries euler_product_scaled(unsigned m, int order);

/* Weighting of the double sum over n, m >= 1 of chi(n) n^s m^t q^{nm}.
 * chi is either trivial or a Legendre symbol mod an odd prime. */
class CharacterWeighting {
public:
    static CharacterWeighting trivial(unsigned n_power, unsigned m_power);
    static CharacterWeighting legendre(unsigned long prime, unsigned n_power,
                                       unsigned m_power);

    int chi(unsigned long n) const;
    unsigned n_power() const { return n_power_; }
    unsigned m_power() const { return m_power_; }
    bool is_legendre() const { return legendre_prime_ != 0; }
    unsigned long prime() const { return legendre_prime_; }

private:
    CharacterWeighting(unsigned long prime, unsigned n_power, unsigned m_power)
        : legendre_prime_(prime), n_power_(n_power), m_power_(m_power) {}

    unsigned long legendre_prime_; // 0 means the trivial character
    unsigned n_power_, m_power_;
};

/* Lambert-type series: coefficient of q^M is sum over divisors d of M of
 * chi(d) d^s (M/d)^t, accumulated by the double loop over n and m. */
TruncatedSeries lambert(const CharacterWeighting& weighting, int order);

/* Normalized Eisenstein series of even weight 2k >= 2:
 * -B_{2k}/(2k)! + (2/(2k-1)!) sum_{n>=1} sigma_{2k-1}(n) q^n. */
TruncatedSeries eisenstein(unsigned weight, int order);

/* Product of eta(m tau)^e factors, eta(m tau) = q^{m/24} (q^m; q^m)_inf,
 * as a prefixed series with exponent sum(e m)/24. */
PrefixedSeries eta_quotient(const std::vector<std::pair<unsigned, int>>& scales,
                            int order);

/* 1/(q;q)_inf: coefficient of q^n is the partition number p(n). */
TruncatedSeries partition_series(int order);

/* Subseries on an arithmetic progression: coefficient of q^n in the
 * result is the coefficient of q^{modulus*n + residue} in f. */
TruncatedSeries extract_progression(const TruncatedSeries& f, unsigned modulus,
                                    unsigned residue);

/* Rogers-Ramanujan sum sides: sum over n >= 0 of q^{n^2+n}/(q;q)_n
 * (variant 1) or q^{n^2}/(q;q)_n (variant 2). */
TruncatedSeries rr_sum_side(int variant, int order);

} // namespace etaq
