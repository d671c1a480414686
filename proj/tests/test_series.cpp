#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etaq/prefixed_series.hpp"
#include "etaq/series.hpp"
#include "etaq/series_matrix.hpp"
#include "etaq/special_series.hpp"
#include "oracles.hpp"

using namespace etaq;

namespace {

TruncatedSeries series_of(std::vector<long> ints) {
    std::vector<Rational> coeffs;
    for (long v : ints) coeffs.emplace_back(v);
    return TruncatedSeries(std::move(coeffs));
}

} // namespace

TEST_CASE("rationals stay in lowest terms with positive denominators") {
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(-22, 5).to_string() == "-22/5");
    CHECK(Rational().is_zero());
    CHECK(Rational().denominator() == 1);
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK(Rational(-1, 3) < Rational(1, 4));
    CHECK(Rational(14, 1).mod_ui(5) == 4);
    CHECK(Rational(-1, 1).mod_ui(5) == 4);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 2).mod_ui(5), NonIntegerValue);
}

TEST_CASE("addition and subtraction are coefficient-wise") {
    const TruncatedSeries a = series_of({1, 1});
    const TruncatedSeries b = series_of({1, -1});
    CHECK(a + b == series_of({2, 0}));
    CHECK(a - b == series_of({0, 2}));
}

TEST_CASE("truncated product telescopes") {
    const TruncatedSeries lhs = series_of({1, -1, 0, 0});
    const TruncatedSeries geo = series_of({1, 1, 1, 1});
    CHECK(lhs * geo == series_of({1, 0, 0, 0}));
}

TEST_CASE("binary operations take the minimum order") {
    const TruncatedSeries a(5);
    const TruncatedSeries b(3);
    CHECK((a + b).order() == 3);
    CHECK((a - b).order() == 3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("product against the schoolbook oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncatedSeries a = oracles::random_series(rng, 9);
        const TruncatedSeries b = oracles::random_series(rng, 9);
        const auto expected = oracles::naive_mul(a.coeffs(), b.coeffs(), 9);
        CHECK((a * b).coeffs() == expected);
    }
}

TEST_CASE("Euler product times its inverse is one") {
    const TruncatedSeries e = euler_product(7);
    CHECK(e * invert(e) == TruncatedSeries::one(7));
    CHECK(invert(e) * e == TruncatedSeries::one(7));
}

TEST_CASE("inverse of 1-q is the geometric series") {
    TruncatedSeries a(6);
    a.set_coeff(0, Rational(1));
    a.set_coeff(1, Rational(-1));
    CHECK(invert(a) == series_of({1, 1, 1, 1, 1, 1, 1}));
    CHECK(invert(TruncatedSeries::one(4)) == TruncatedSeries::one(4));
}

TEST_CASE("inverse of the Euler product counts partitions") {
    CHECK(invert(euler_product(6)) == series_of({1, 1, 2, 3, 5, 7, 11}));
}

TEST_CASE("invert rejects a zero constant term") {
    CHECK_THROWS_AS(invert(TruncatedSeries::monomial(Rational(1), 1, 3)),
                    ZeroConstantTerm);
}

TEST_CASE("q d/dq acts on monomials") {
    CHECK(q_derive(series_of({1, 1, 1})) == series_of({0, 1, 2}));
}

TEST_CASE("q d/dq on prefixed values follows the product rule") {
    const PrefixedSeries a(Rational(11, 60), TruncatedSeries::one(0));
    const PrefixedSeries da = q_derive(a);
    CHECK(da.exponent() == Rational(11, 60));
    CHECK(da.body().coeff(0) == Rational(11, 60));

    TruncatedSeries body(1);
    body.set_coeff(0, Rational(1));
    body.set_coeff(1, Rational(-4));
    const PrefixedSeries b(Rational(1, 6), body);
    const PrefixedSeries db = q_derive(b);
    CHECK(db.exponent() == Rational(1, 6));
    CHECK(db.body().coeff(0) == Rational(1, 6));
    CHECK(db.body().coeff(1) == Rational(-14, 3));
}

TEST_CASE("integer powers") {
    const TruncatedSeries one_plus_q = series_of({1, 1, 0});
    CHECK(pow_int(one_plus_q, 2) == series_of({1, 2, 1}));

    TruncatedSeries one_minus_q(3);
    one_minus_q.set_coeff(0, Rational(1));
    one_minus_q.set_coeff(1, Rational(-1));
    CHECK(pow_int(one_minus_q, -2) == series_of({1, 2, 3, 4}));

    CHECK(pow_int(series_of({0, 3}), 0) == TruncatedSeries::one(1));
    CHECK_THROWS_AS(pow_int(series_of({0, 3}), -1), ZeroConstantTerm);
}

TEST_CASE("fifth power of the Euler product, against the multinomial oracle") {
    const TruncatedSeries e5 = pow_int(euler_product(4), 5);
    const auto expected = oracles::naive_pow(euler_product(4).coeffs(), 5, 4);
    CHECK(e5.coeffs() == expected);
    CHECK(e5 == series_of({1, -5, 5, 10, -15}));
}

TEST_CASE("mul_one_minus_qn_pow agrees with the generic product") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries s = oracles::random_series(rng, 12);
        std::uniform_int_distribution<int> pick_n(1, 5), pick_e(-3, 3);
        const int n = pick_n(rng), e = pick_e(rng);
        TruncatedSeries binom(12);
        binom.set_coeff(0, Rational(1));
        binom.set_coeff(n, Rational(-1));
        const TruncatedSeries expected = s * pow_int(binom, e);
        s.mul_one_minus_qn_pow(n, e);
        CHECK(s == expected);
    }
}

TEST_CASE("determinants of small matrices") {
    SeriesMatrix identity(3, 3, 0);
    for (int i = 0; i < 3; ++i) identity.set(i, i, TruncatedSeries::one(0));
    CHECK(determinant(identity) == TruncatedSeries::one(0));

    SeriesMatrix weights(2, 2, 0);
    weights.set(0, 0, TruncatedSeries::one(0));
    weights.set(0, 1, TruncatedSeries::one(0));
    weights.set(1, 0, TruncatedSeries::constant(Rational(11, 60), 0));
    weights.set(1, 1, TruncatedSeries::constant(Rational(-1, 60), 0));
    CHECK(determinant(weights) == TruncatedSeries::constant(Rational(-1, 5), 0));

    SeriesMatrix shifted(2, 2, 2);
    shifted.set(0, 0, TruncatedSeries::one(2));
    shifted.set(0, 1, TruncatedSeries::one(2));
    shifted.set(1, 0, TruncatedSeries::monomial(Rational(1), 1, 2));
    shifted.set(1, 1, TruncatedSeries::monomial(Rational(2), 1, 2));
    CHECK(determinant(shifted) == TruncatedSeries::monomial(Rational(1), 1, 2));
}

TEST_CASE("determinant input validation") {
    CHECK_THROWS_AS(determinant(SeriesMatrix(2, 3, 0)), NotSquare);
    CHECK_THROWS_AS(determinant(SeriesMatrix(11, 11, 0)), OutOfRange);
}

TEST_CASE("prefixed normalization moves the valuation into the exponent") {
    const PrefixedSeries p = PrefixedSeries::plain(series_of({0, 0, 3, 4}));
    CHECK(p.exponent() == Rational(2));
    CHECK(p.body() == series_of({3, 4}));

    const PrefixedSeries z = PrefixedSeries(Rational(1, 3), TruncatedSeries(5));
    CHECK(z.is_zero());
    CHECK(z.exponent() == Rational(0));
}

TEST_CASE("prefixed arithmetic") {
    const PrefixedSeries a(Rational(1, 6), series_of({1, 2}));
    const PrefixedSeries b(Rational(1, 3), series_of({1, -1}));
    const PrefixedSeries ab = a * b;
    CHECK(ab.exponent() == Rational(1, 2));
    CHECK(ab.body() == series_of({1, 1}));

    CHECK_THROWS_AS(a + b, ExponentMismatch);
    CHECK((a + PrefixedSeries::zero(1)).body() == a.body());

    const PrefixedSeries quotient = ab / a;
    CHECK(quotient.exponent() == Rational(1, 3));
    CHECK(quotient.body() == series_of({1, -1}));
}

TEST_CASE("to_plain embeds integer exponents and rejects the rest") {
    const PrefixedSeries p(Rational(2), series_of({5, 6}));
    CHECK(p.to_plain() == series_of({0, 0, 5, 6}));
    CHECK_THROWS_AS(PrefixedSeries(Rational(1, 2), series_of({1})).to_plain(),
                    PrefixMismatch);
    CHECK_THROWS_AS(PrefixedSeries(Rational(-1), series_of({1})).to_plain(),
                    PrefixMismatch);
}

TEST_CASE("text serialization") {
    CHECK(TruncatedSeries(3).to_string() == "0");
    CHECK(series_of({1, 0, 1, 1}).to_string() == "1 + q^2 + q^3");
    CHECK(eisenstein(2, 3).to_string() == "-1/12 + 2*q + 6*q^2 + 8*q^3");
    CHECK(series_of({1, -4, 2}).to_string() == "1 - 4*q + 2*q^2");
    const PrefixedSeries p(Rational(11, 60), series_of({1, 0, 1, 1}));
    CHECK(p.to_string() == "q^{11/60} * (1 + q^2 + q^3)");
}

TEST_CASE("shifts and truncation") {
    const TruncatedSeries s = series_of({1, 2, 3});
    CHECK(s.shifted_up(2) == series_of({0, 0, 1, 2, 3}));
    CHECK(s.shifted_up(2).order() == 4);
    CHECK(s.truncated(1) == series_of({1, 2}));
    CHECK_THROWS_AS(s.truncated(5), OutOfRange);
    CHECK(series_of({0, 0, 7}).shifted_down(2) == series_of({7}));
    CHECK_THROWS_AS(series_of({1, 2}).shifted_down(1), OutOfRange);
    CHECK(series_of({0, 0, 7}).valuation() == 2);
    CHECK(TruncatedSeries(4).valuation() == -1);
}
