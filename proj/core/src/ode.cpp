#include "etaq/ode.hpp"

#include <algorithm>

#include "etaq/faa_di_bruno.hpp"
#include "etaq/minimal_models.hpp"
#include "etaq/number_theory.hpp"
#include "etaq/series_matrix.hpp"
#include "etaq/special_series.hpp"

namespace etaq {

LinearODE::LinearODE(std::vector<TruncatedSeries> coefficients) : a_(std::move(coefficients)) {
    if (a_.empty()) throw EmptyList("LinearODE: no coefficients");
    int common = a_.front().order();
    for (const auto& c : a_) common = std::min(common, c.order());
    for (auto& c : a_)
        if (c.order() > common) c = c.truncated(common);
}

const TruncatedSeries& LinearODE::coefficient(int j) const {
    if (j < 1 || j > degree()) throw OutOfRange("LinearODE: coefficient index");
    return a_[static_cast<size_t>(j) - 1];
}

PrefixedSeries ode_apply(const LinearODE& ode, const PrefixedSeries& y) {
    const int k = ode.degree();
    /* Work on raw bodies with a fixed prefix so intermediate derivatives
     * never get renormalized: D(q^r f) = q^r (r f + D f). */
    std::vector<TruncatedSeries> deriv;
    deriv.reserve(static_cast<size_t>(k) + 1);
    deriv.push_back(y.body());
    for (int j = 0; j < k; ++j)
        deriv.push_back(y.exponent() * deriv.back() + q_derive(deriv.back()));

    TruncatedSeries residual = deriv.back();
    for (int j = 1; j <= k; ++j)
        residual = residual + ode.coefficient(j) * deriv[static_cast<size_t>(k - j)];
    return PrefixedSeries(y.exponent(), std::move(residual));
}

LinearODE ode_k2_explicit(ExplicitK2 which, int order) {
    switch (which) {
    case ExplicitK2::modified:
        return LinearODE({Rational(2) * eisenstein(2, order),
                          Rational(-11, 5) * eisenstein(4, order)});
    case ExplicitK2::L1: {
        TruncatedSeries a1(order), a2(order);
        a1.set_coeff(0, Rational(1, 5));
        for (int n = 1; n <= order; ++n) {
            const Rational s1(sigma(1, static_cast<unsigned long>(n)));
            const Rational s3(sigma(3, static_cast<unsigned long>(n)));
            a1.set_coeff(n, Rational(4) * s1);
            a2.set_coeff(n, Rational(11, 15) * (s1 - s3));
        }
        return LinearODE({std::move(a1), std::move(a2)});
    }
    case ExplicitK2::L2: {
        TruncatedSeries a1(order), a2(order);
        a1.set_coeff(0, Rational(-1, 5));
        for (int n = 1; n <= order; ++n) {
            const Rational s1(sigma(1, static_cast<unsigned long>(n)));
            const Rational s3(sigma(3, static_cast<unsigned long>(n)));
            a1.set_coeff(n, Rational(4) * s1);
            a2.set_coeff(n, Rational(-1, 15) * (s1 + Rational(11) * s3));
        }
        return LinearODE({std::move(a1), std::move(a2)});
    }
    }
    throw OutOfRange("ode_k2_explicit: unknown selector");
}

namespace {

/* Determinant of the matrix whose rows are the requested shifted Faa di
 * Bruno levels of the given log derivatives. */
TruncatedSeries faa_row_determinant(const std::vector<std::vector<TruncatedSeries>>& towers,
                                    const std::vector<int>& rows, int order) {
    const int k = static_cast<int>(towers.size());
    SeriesMatrix m(k, k, order);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            m.set(r, c, towers[static_cast<size_t>(c)][static_cast<size_t>(rows[r])]);
    return determinant(m);
}

} // namespace

PrefixedSeries wronskian(std::span<const PrefixedSeries> solutions) {
    if (solutions.empty()) throw EmptyList("wronskian: no solutions");
    const int k = static_cast<int>(solutions.size());
    int order = solutions[0].order();
    for (const auto& y : solutions) order = std::min(order, y.order());

    for (const auto& y : solutions)
        if (y.is_zero()) return PrefixedSeries::zero(order);

    std::vector<std::vector<TruncatedSeries>> towers;
    PrefixedSeries prefix = PrefixedSeries::plain(TruncatedSeries::one(order));
    for (const auto& y : solutions) {
        towers.push_back(
            faa_di_bruno_tower(static_cast<unsigned>(k) - 1, log_derivative(y).truncated(order)));
        prefix = prefix * y;
    }
    std::vector<int> rows(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) rows[static_cast<size_t>(r)] = r;
    return prefix * PrefixedSeries::plain(faa_row_determinant(towers, rows, order));
}

TruncatedSeries wronskian_identity_lhs(unsigned k, int order) {
    if (k < 2 || k > kFamilyCap) throw OutOfRange("identity family parameter k");
    std::vector<std::vector<TruncatedSeries>> towers;
    for (unsigned i = 1; i <= k; ++i)
        towers.push_back(faa_di_bruno_tower(k - 1, character_log_derivative(k, i, order)));
    std::vector<int> rows(k);
    for (unsigned r = 0; r < k; ++r) rows[r] = static_cast<int>(r);
    return faa_row_determinant(towers, rows, order);
}

TruncatedSeries wronskian_identity_rhs(unsigned k, int order) {
    if (k < 2 || k > kFamilyCap) throw OutOfRange("identity family parameter k");
    const TruncatedSeries ratio =
        pow_int(euler_product(order), 2 * static_cast<long>(k) + 1) *
        invert(euler_product_scaled(2 * k + 1, order));
    return vandermonde_constant(k) * pow_int(ratio, static_cast<long>(k) - 1);
}

LinearODE ode_reconstruct(std::span<const PrefixedSeries> solutions, int order) {
    if (solutions.empty()) throw EmptyList("ode_reconstruct: no solutions");
    const int k = static_cast<int>(solutions.size());
    for (const auto& y : solutions) order = std::min(order, y.order());
    for (const auto& y : solutions)
        if (y.is_zero()) throw SingularWronskian("ode_reconstruct: zero solution");

    std::vector<std::vector<TruncatedSeries>> towers;
    PrefixedSeries prefix = PrefixedSeries::plain(TruncatedSeries::one(order));
    for (const auto& y : solutions) {
        towers.push_back(faa_di_bruno_tower(static_cast<unsigned>(k),
                                            log_derivative(y).truncated(order)));
        prefix = prefix * y;
    }

    std::vector<int> wronskian_rows(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) wronskian_rows[static_cast<size_t>(r)] = r;
    const TruncatedSeries det_w = faa_row_determinant(towers, wronskian_rows, order);
    if (det_w.coeff(0).is_zero())
        throw SingularWronskian("ode_reconstruct: Wronskian body is not a unit");

    const PrefixedSeries w = prefix * PrefixedSeries::plain(det_w);
    const TruncatedSeries w_body_inverse = invert(w.body());

    std::vector<TruncatedSeries> coeffs;
    for (int j = 1; j <= k; ++j) {
        std::vector<int> rows;
        for (int r = 0; r <= k; ++r)
            if (r != k - j) rows.push_back(r);
        const PrefixedSeries numerator =
            prefix * PrefixedSeries::plain(faa_row_determinant(towers, rows, order));
        /* Explicit prefix bookkeeping: the exponent of W_j / W must come
         * out a non-negative integer or the input was inconsistent. */
        PrefixedSeries ratio(numerator.exponent() - w.exponent(),
                             numerator.body() * w_body_inverse);
        TruncatedSeries a_j = ratio.to_plain().truncated(order);
        if (j % 2 == 1) a_j = -a_j;
        coeffs.push_back(std::move(a_j));
    }
    return LinearODE(std::move(coeffs));
}

std::pair<Rational, Rational> recursion_step(RecursionKind kind, unsigned n,
                                             std::span<const Rational> prior) {
    if (n == 0 || prior.size() < n)
        throw OutOfRange("recursion_step: need values 0..n-1");
    const long ln = static_cast<long>(n);
    Rational numerator;
    for (unsigned j = 0; j < n; ++j) {
        const Rational s1(sigma(1, n - j));
        const Rational s3(sigma(3, n - j));
        const Rational weight = kind == RecursionKind::a
                                    ? Rational(11) * (s3 - s1)
                                    : Rational(11) * s3 + s1;
        numerator += weight * prior[j];
        numerator -= Rational(60) * Rational(static_cast<long>(j)) * prior[j] * s1;
    }
    const Rational denominator = kind == RecursionKind::a
                                     ? Rational(15 * ln * ln + 3 * ln)
                                     : Rational(15 * ln * ln - 3 * ln);
    return {numerator, denominator};
}

RecursionTable recursion_table(RecursionKind kind, int upto) {
    if (upto < 0) throw OutOfRange("recursion_table: negative bound");
    RecursionTable table{kind, {Rational(1)}};
    for (unsigned n = 1; n <= static_cast<unsigned>(upto); ++n) {
        auto [numerator, denominator] = recursion_step(kind, n, table.values);
        const Rational value = numerator / denominator;
        if (!value.is_integer())
            throw NonIntegerValue("recursion value at n=" + std::to_string(n) + ": " +
                                  value.to_string());
        table.values.push_back(value);
    }
    return table;
}

} // namespace etaq
