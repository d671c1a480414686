#pragma once

#include "etaq/prefixed_series.hpp"
#include "etaq/rational.hpp"
#include "etaq/series.hpp"

namespace etaq {

/* Cap on the family parameter k for the character-level operations; the
 * determinant identities built on top of them grow factorially in k. */
inline constexpr unsigned kFamilyCap = 12;

/* Highest-weight label (p, q, m, n) with p, q >= 2 coprime, 1 <= m < p,
 * 1 <= n < q. */
struct MinimalModelLabel {
    unsigned p, q, m, n;
};

/* c_{p,q} = 1 - 6(p-q)^2 / (pq). BadLabel for ranges, NotCoprime when
 * gcd(p, q) != 1. */
Rational central_charge(unsigned p, unsigned q);

/* h^{m,n}_{p,q} = ((np - mq)^2 - (p - q)^2) / (4pq). */
Rational conformal_weight(const MinimalModelLabel& label);

/* Leading exponent of the i-th modified character in the (2, 2k+1)
 * family: h^{1,i} - c/24 = (6i^2 - 6i + 1 + 6k^2 - 12ki + 5k)/(12(2k+1)).
 * Valid for k >= 2, 1 <= i <= k (OutOfRange otherwise). */
Rational shifted_weight(unsigned k, unsigned i);

/* Sum of the k shifted weights; equals k(k-1)/12, which the identity
 * suite checks. */
Rational shifted_weight_sum(unsigned k);

/* Closed form prod_{i=1}^{k-1} (2i)! / (-4k-2)^{k(k-1)/2}; this is the
 * Vandermonde determinant in the shifted weights. */
Rational vandermonde_constant(unsigned k);

/* Modified character of the (2, 2k+1) family as a prefixed series:
 * q^{shifted_weight(k,i)} times the product over n not congruent to
 * 0, i, or -i mod 2k+1 of 1/(1 - q^n). */
PrefixedSeries modified_character(unsigned k, unsigned i, int order);

/* D(y)/y for the i-th modified character, built directly from divisor
 * sums restricted to the allowed residue classes:
 * shifted_weight(k,i) + sum over allowed n of n q^n/(1-q^n). */
TruncatedSeries character_log_derivative(unsigned k, unsigned i, int order);

} // namespace etaq
