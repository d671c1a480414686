#pragma once

#include <span>
#include <utility>
#include <vector>

#include "etaq/prefixed_series.hpp"
#include "etaq/series.hpp"

namespace etaq {

/* Monic linear differential operator of degree k in D = q d/dq:
 * D^k F + A_1 D^{k-1} F + ... + A_k F. The leading 1 is implicit; the
 * stored coefficients A_1..A_k share one truncation order. */
class LinearODE {
public:
    explicit LinearODE(std::vector<TruncatedSeries> coefficients);

    int degree() const { return static_cast<int>(a_.size()); }
    int order() const { return a_.front().order(); }
    /* A_j for j = 1..degree. */
    const TruncatedSeries& coefficient(int j) const;

private:
    std::vector<TruncatedSeries> a_;
};

/* Residual D^k y + sum_j A_j D^{k-j} y. The zero series exactly when y
 * solves the equation through the truncation order. */
PrefixedSeries ode_apply(const LinearODE& ode, const PrefixedSeries& y);

/* The three explicit second-order operators used by the modulus-5
 * identities: `modified` annihilates both modified characters of the
 * k = 2 family, `L1` and `L2` annihilate the two Rogers-Ramanujan sum
 * sides. */
enum class ExplicitK2 { modified, L1, L2 };
LinearODE ode_k2_explicit(ExplicitK2 which, int order);

/* Wronskian of a solution family: determinant of the matrix whose row j
 * holds the j-th D-derivatives. Each column factors as q^{r_i} f_i times
 * a Faa di Bruno column in the log derivative, so the result is a single
 * prefixed series with exponent sum(r_i). */
PrefixedSeries wronskian(std::span<const PrefixedSeries> solutions);

/* Both sides of the odd-modulus determinant identity for the family
 * parameter k: the determinant of shifted Faa di Bruno rows in the
 * character log derivatives, and the closed form
 * vandermonde_constant(k) ((q;q)^{2k+1}/(q^{2k+1};q^{2k+1}))^{k-1}. */
TruncatedSeries wronskian_identity_lhs(unsigned k, int order);
TruncatedSeries wronskian_identity_rhs(unsigned k, int order);

/* The unique monic degree-k operator annihilating the given fundamental
 * system, by Cramer's rule over the series ring: A_j = (-1)^j W_j / W
 * with W_j the Wronskian-style determinant using derivative rows
 * {0..k} minus {k-j}. Prefix exponents must cancel in each ratio
 * (PrefixMismatch otherwise); SingularWronskian when the Wronskian body
 * is not a unit. */
LinearODE ode_reconstruct(std::span<const PrefixedSeries> solutions, int order);

/* Coefficient tables a(n) / b(n) for the two Rogers-Ramanujan series,
 * generated by the divisor-sum recursions with denominators 15n^2 +- 3n.
 * Every value is asserted integral (NonIntegerValue otherwise). */
enum class RecursionKind { a, b };

struct RecursionTable {
    RecursionKind kind;
    std::vector<Rational> values; // indices 0..upto
};

RecursionTable recursion_table(RecursionKind kind, int upto);

/* Numerator and denominator of one recursion step before division, for
 * inspection: value(n) = numerator / denominator. */
std::pair<Rational, Rational> recursion_step(RecursionKind kind, unsigned n,
                                             std::span<const Rational> prior);

} // namespace etaq
