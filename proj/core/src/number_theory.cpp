#include "etaq/number_theory.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace etaq {

Rational bernoulli(unsigned n) {
    if (n % 2 == 1) throw OddIndex("bernoulli: odd index " + std::to_string(n));
    std::vector<Rational> b;
    b.reserve(n + 1);
    b.emplace_back(1);
    if (n >= 1) b.emplace_back(-1, 2);
    for (unsigned m = 2; m <= n; ++m) {
        Rational acc;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * b[j];
        b.push_back(-(acc / Rational(static_cast<long>(m) + 1)));
    }
    return b[n];
}

mpz_class sigma(unsigned s, unsigned long n) {
    if (n == 0) throw OutOfRange("sigma: n must be positive");

    static std::mutex lock;
    static std::map<std::pair<unsigned, unsigned long>, mpz_class> memo;
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = memo.find({s, n});
        if (it != memo.end()) return it->second;
    }

    mpz_class acc = 0, power;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(power.get_mpz_t(), d, s);
        acc += power;
        const unsigned long paired = n / d;
        if (paired != d) {
            mpz_ui_pow_ui(power.get_mpz_t(), paired, s);
            acc += power;
        }
    }

    std::lock_guard<std::mutex> guard(lock);
    memo.emplace(std::make_pair(s, n), acc);
    return acc;
}

namespace {

bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

unsigned long pow_mod(unsigned long base, unsigned long exp, unsigned long mod) {
    unsigned long result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = static_cast<unsigned long>(
                (static_cast<unsigned __int128>(result) * base) % mod);
        base = static_cast<unsigned long>(
            (static_cast<unsigned __int128>(base) * base) % mod);
        exp >>= 1;
    }
    return result;
}

} // namespace

int legendre_symbol(const mpz_class& n, unsigned long p) {
    if (!is_odd_prime(p))
        throw NotOddPrime("legendre_symbol: modulus " + std::to_string(p));
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), p);
    if (r == 0) return 0;
    const unsigned long t = pow_mod(r, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

int legendre_symbol(long n, unsigned long p) {
    return legendre_symbol(mpz_class(n), p);
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace etaq
