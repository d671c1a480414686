#include "oracles.hpp"

#include "etaq/number_theory.hpp"

namespace oracles {

std::vector<Rational> naive_mul(const std::vector<Rational>& a,
                                const std::vector<Rational>& b, int order) {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (i + j <= static_cast<size_t>(order)) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Rational> naive_pow(const std::vector<Rational>& a, unsigned e, int order) {
    std::vector<Rational> out{Rational(1)};
    out.resize(static_cast<size_t>(order) + 1);
    for (unsigned i = 0; i < e; ++i) out = naive_mul(out, a, order);
    return out;
}

mpz_class count_partitions_with_parts(unsigned n, const std::vector<unsigned>& parts) {
    std::vector<mpz_class> ways(n + 1);
    ways[0] = 1;
    for (unsigned part : parts) {
        if (part == 0 || part > n) continue;
        for (unsigned v = part; v <= n; ++v) ways[v] += ways[v - part];
    }
    return ways[n];
}

mpz_class count_partitions(unsigned n) {
    std::vector<unsigned> parts;
    for (unsigned p = 1; p <= n; ++p) parts.push_back(p);
    return count_partitions_with_parts(n, parts);
}

std::vector<unsigned> parts_in_classes(unsigned modulus,
                                       const std::vector<unsigned>& residues,
                                       unsigned upto) {
    std::vector<unsigned> parts;
    for (unsigned p = 1; p <= upto; ++p)
        for (unsigned r : residues)
            if (p % modulus == r) parts.push_back(p);
    return parts;
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> out;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

Rational bernoulli_akiyama_tanigawa(unsigned n) {
    std::vector<Rational> row(n + 1);
    for (unsigned j = 0; j <= n; ++j) row[j] = Rational(1, static_cast<long>(j) + 1);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 0; j <= n - i; ++j)
            row[j] = Rational(static_cast<long>(j) + 1) * (row[j] - row[j + 1]);
    return row[0]; // the B_1 = +1/2 convention; equal to the kernel's for even n
}

TruncatedSeries pentagonal_series(int order) {
    TruncatedSeries s(order);
    s.set_coeff(0, Rational(1));
    for (long k = 1;; ++k) {
        const long g1 = k * (3 * k - 1) / 2;
        const long g2 = k * (3 * k + 1) / 2;
        if (g1 > order) break;
        const Rational sign(k % 2 == 0 ? 1L : -1L);
        s.set_coeff(static_cast<int>(g1), sign);
        if (g2 <= order) s.set_coeff(static_cast<int>(g2), sign);
    }
    return s;
}

namespace {

void enumerate_tuples(unsigned j, unsigned remaining, std::vector<unsigned>& tuple,
                      const std::vector<TruncatedSeries>& derivatives,
                      const TruncatedSeries& f, unsigned n, TruncatedSeries& acc) {
    if (j > n) {
        if (remaining != 0) return;
        mpz_class multinomial = etaq::factorial(n);
        for (unsigned idx = 1; idx <= n; ++idx)
            multinomial /= etaq::factorial(tuple[idx]);
        TruncatedSeries term =
            etaq::TruncatedSeries::constant(Rational(multinomial), f.order());
        for (unsigned idx = 1; idx <= n; ++idx) {
            if (tuple[idx] == 0) continue;
            const Rational scale =
                Rational(1) / Rational(etaq::factorial(idx));
            term = term * etaq::pow_int(scale * derivatives[idx - 1],
                                        static_cast<long>(tuple[idx]));
        }
        acc = acc + term;
        return;
    }
    for (unsigned count = 0; count * j <= remaining; ++count) {
        tuple[j] = count;
        enumerate_tuples(j + 1, remaining - count * j, tuple, derivatives, f, n, acc);
    }
    tuple[j] = 0;
}

} // namespace

TruncatedSeries faa_closed_form(unsigned n, const TruncatedSeries& f) {
    if (n == 0) return TruncatedSeries::one(f.order());
    /* derivatives[m] = D^m f; slot j uses D^{j-1} f. */
    std::vector<TruncatedSeries> derivatives{f};
    for (unsigned m = 1; m < n; ++m) derivatives.push_back(q_derive(derivatives.back()));

    TruncatedSeries acc(f.order());
    std::vector<unsigned> tuple(n + 1, 0);
    enumerate_tuples(1, n, tuple, derivatives, f, n, acc);
    return acc;
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit) {
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i) s.set_coeff(i, random_rational(rng));
    if (unit && s.coeff(0).is_zero()) {
        std::uniform_int_distribution<long> nonzero(1, 9);
        s.set_coeff(0, Rational(nonzero(rng)));
    }
    return s;
}

} // namespace oracles
