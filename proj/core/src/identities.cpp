#include "etaq/identities.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "json.hpp"

#include "etaq/faa_di_bruno.hpp"
#include "etaq/minimal_models.hpp"
#include "etaq/number_theory.hpp"
#include "etaq/ode.hpp"
#include "etaq/series_matrix.hpp"
#include "etaq/special_series.hpp"

namespace etaq {

namespace {

using Sides = std::pair<PrefixedSeries, PrefixedSeries>;

struct Entry {
    IdentityInfo info;
    bool scalar = false; // order-independent; always checked at order 0
    std::function<Sides(int order, int k)> build;
};

Sides plain_sides(TruncatedSeries lhs, TruncatedSeries rhs) {
    return {PrefixedSeries::plain(std::move(lhs)), PrefixedSeries::plain(std::move(rhs))};
}

TruncatedSeries from_values(const std::vector<Rational>& values) {
    return TruncatedSeries(values);
}

/* Product side shared by the modulus-5 identities: (q;q)^5 / (q^5;q^5). */
TruncatedSeries euler_fifth_quotient(int order) {
    return pow_int(euler_product(order), 5) * invert(euler_product_scaled(5, order));
}

Sides build_mod5(int order) {
    TruncatedSeries lhs = extract_progression(partition_series(5 * order + 4), 5, 4);
    TruncatedSeries rhs = Rational(5) * (pow_int(euler_product_scaled(5, order), 5) *
                                         pow_int(euler_product(order), -6));
    return plain_sides(std::move(lhs), std::move(rhs));
}

Sides build_mod5_congruence(int order) {
    const TruncatedSeries extracted =
        extract_progression(partition_series(5 * order + 4), 5, 4);
    TruncatedSeries residues(order);
    for (int n = 0; n <= order; ++n)
        residues.set_coeff(n, Rational(static_cast<long>(extracted.coeff(n).mod_ui(5))));
    return plain_sides(std::move(residues), TruncatedSeries(order));
}

Sides build_rr1(int order) {
    const CharacterWeighting chi = CharacterWeighting::legendre(5, 1, 0);
    TruncatedSeries lhs =
        TruncatedSeries::one(order) - Rational(5) * lambert(chi, order);
    return plain_sides(std::move(lhs), euler_fifth_quotient(order));
}

Sides build_rr2(int order) {
    const CharacterWeighting chi = CharacterWeighting::legendre(5, 0, 1);
    TruncatedSeries lhs = lambert(chi, order);
    if (order == 0) return plain_sides(std::move(lhs), TruncatedSeries(0));
    TruncatedSeries rhs = (pow_int(euler_product_scaled(5, order - 1), 5) *
                           invert(euler_product(order - 1)))
                              .shifted_up(1);
    return plain_sides(std::move(lhs), std::move(rhs));
}

ProgressionProductSpec rr_product_spec(int variant) {
    if (variant == 1) return ProgressionProductSpec(5, {{2, -1}, {3, -1}});
    return ProgressionProductSpec(5, {{1, -1}, {4, -1}});
}

Sides build_rr_prodsum(int variant, int order) {
    return plain_sides(progression_product(rr_product_spec(variant), order),
                       rr_sum_side(variant, order));
}

Sides build_recursion(RecursionKind kind, int order) {
    const int variant = kind == RecursionKind::a ? 1 : 2;
    return plain_sides(from_values(recursion_table(kind, order).values),
                       progression_product(rr_product_spec(variant), order));
}

Sides build_diffmain_sol(unsigned i, int order) {
    const LinearODE ode = ode_k2_explicit(ExplicitK2::modified, order);
    const PrefixedSeries residual = ode_apply(ode, modified_character(2, i, order));
    return {residual, PrefixedSeries::zero(residual.order())};
}

Sides build_ode_residual(ExplicitK2 which, int variant, int order) {
    const LinearODE ode = ode_k2_explicit(which, order);
    const PrefixedSeries residual =
        ode_apply(ode, PrefixedSeries::plain(rr_sum_side(variant, order)));
    return {residual, PrefixedSeries::zero(residual.order())};
}

Sides build_eta4_logderiv(int order) {
    const PrefixedSeries eta4 = eta_quotient({{1, 4}}, order);
    PrefixedSeries lhs = q_derive(eta4);
    PrefixedSeries rhs =
        PrefixedSeries::plain(Rational(-2) * eisenstein(2, order)) * eta4;
    return {std::move(lhs), std::move(rhs)};
}

Sides build_char_eta_product(int k, int order) {
    PrefixedSeries lhs = modified_character(static_cast<unsigned>(k), 1, order);
    for (unsigned i = 2; i <= static_cast<unsigned>(k); ++i)
        lhs = lhs * modified_character(static_cast<unsigned>(k), i, order);
    const PrefixedSeries base =
        eta_quotient({{2 * static_cast<unsigned>(k) + 1, 1}, {1, -1}}, order);
    return {std::move(lhs), pow_int(base, k - 1)};
}

Sides build_etak(int k) {
    const unsigned ku = static_cast<unsigned>(k);
    return plain_sides(
        TruncatedSeries::constant(shifted_weight_sum(ku), 0),
        TruncatedSeries::constant(Rational(static_cast<long>(k) * (k - 1), 12), 0));
}

Sides build_constk(int k) {
    SeriesMatrix m(k, k, 0);
    for (int c = 0; c < k; ++c) {
        const Rational h = shifted_weight(static_cast<unsigned>(k),
                                          static_cast<unsigned>(c) + 1);
        Rational power(1);
        for (int r = 0; r < k; ++r) {
            m.set(r, c, TruncatedSeries::constant(power, 0));
            power *= h;
        }
    }
    return plain_sides(determinant(m),
                       TruncatedSeries::constant(
                           vandermonde_constant(static_cast<unsigned>(k)), 0));
}

Sides build_genk(int k, int order) {
    return plain_sides(wronskian_identity_lhs(static_cast<unsigned>(k), order),
                       wronskian_identity_rhs(static_cast<unsigned>(k), order));
}

Sides build_moduli7(int order) {
    /* Modulus 7 form with the second-degree row split into its two
     * pieces: det[1; A; DA] + det[1; A; A^2]. */
    std::vector<TruncatedSeries> log_derivs;
    for (unsigned i = 1; i <= 3; ++i)
        log_derivs.push_back(character_log_derivative(3, i, order));

    SeriesMatrix with_derivative(3, 3, order);
    SeriesMatrix with_square(3, 3, order);
    for (int c = 0; c < 3; ++c) {
        const TruncatedSeries& a = log_derivs[static_cast<size_t>(c)];
        with_derivative.set(0, c, TruncatedSeries::one(order));
        with_square.set(0, c, TruncatedSeries::one(order));
        with_derivative.set(1, c, a);
        with_square.set(1, c, a);
        with_derivative.set(2, c, q_derive(a));
        with_square.set(2, c, a * a);
    }
    return plain_sides(determinant(with_derivative) + determinant(with_square),
                       wronskian_identity_rhs(3, order));
}

Sides build_kk1(int k, int order) {
    std::vector<PrefixedSeries> family;
    for (unsigned i = 1; i <= static_cast<unsigned>(k); ++i)
        family.push_back(modified_character(static_cast<unsigned>(k), i, order));
    const LinearODE ode = ode_reconstruct(family, order);
    const TruncatedSeries& a1 = ode.coefficient(1);
    return plain_sides(a1, Rational(static_cast<long>(k) * (k - 1)) *
                               eisenstein(2, a1.order()));
}

std::vector<Entry> make_registry() {
    std::vector<Entry> entries;
    auto add = [&entries](IdentityInfo info, bool scalar,
                          std::function<Sides(int, int)> build) {
        entries.push_back({std::move(info), scalar, std::move(build)});
    };

    add({"mod5", "partition subseries p(5n+4): 5 (q^5;q^5)^5 / (q;q)^6", false, 200},
        false, [](int n, int) { return build_mod5(n); });
    add({"mod5_congruence", "p(5n+4) = 0 mod 5", false, 200}, false,
        [](int n, int) { return build_mod5_congruence(n); });
    add({"rr1", "1 - 5 sum (n/5) n q^n/(1-q^n) = (q;q)^5/(q^5;q^5)", false, 200},
        false, [](int n, int) { return build_rr1(n); });
    add({"rr2", "sum (n/5) q^n/(1-q^n)^2 = q (q^5;q^5)^5/(q;q)", false, 200}, false,
        [](int n, int) { return build_rr2(n); });
    add({"rr_prodsum_1", "parts = 2,3 mod 5 product equals sum q^{n^2+n}/(q;q)_n",
         false, 200},
        false, [](int n, int) { return build_rr_prodsum(1, n); });
    add({"rr_prodsum_2", "parts = 1,4 mod 5 product equals sum q^{n^2}/(q;q)_n",
         false, 200},
        false, [](int n, int) { return build_rr_prodsum(2, n); });
    add({"recursion_a", "divisor-sum recursion reproduces the 2,3 mod 5 counts",
         false, 200},
        false, [](int n, int) { return build_recursion(RecursionKind::a, n); });
    add({"recursion_b", "divisor-sum recursion reproduces the 1,4 mod 5 counts",
         false, 200},
        false, [](int n, int) { return build_recursion(RecursionKind::b, n); });
    add({"diffmain_sol1", "first k=2 character solves the Eisenstein ODE", false, 200},
        false, [](int n, int) { return build_diffmain_sol(1, n); });
    add({"diffmain_sol2", "second k=2 character solves the Eisenstein ODE", false, 200},
        false, [](int n, int) { return build_diffmain_sol(2, n); });
    add({"ode_L1", "first sum side solves its explicit second-order ODE", false, 200},
        false, [](int n, int) { return build_ode_residual(ExplicitK2::L1, 1, n); });
    add({"ode_L2", "second sum side solves its explicit second-order ODE", false, 200},
        false, [](int n, int) { return build_ode_residual(ExplicitK2::L2, 2, n); });
    add({"eta4_logderiv", "D(eta^4) = -2 G2 eta^4", false, 200}, false,
        [](int n, int) { return build_eta4_logderiv(n); });
    add({"char_eta_product", "product of the k modified characters is "
                             "(eta((2k+1)t)/eta(t))^{k-1}",
         true, 200, 2, 8},
        false, [](int n, int k) { return build_char_eta_product(k, n); });
    add({"etak", "shifted weights of the k family sum to k(k-1)/12", true, 0, 2, 1000},
        true, [](int, int k) { return build_etak(k); });
    add({"constk", "Vandermonde determinant in the shifted weights equals its "
                   "closed form",
         true, 0, 2, kMaxDeterminantRows},
        true, [](int, int k) { return build_constk(k); });
    add({"genk", "Faa di Bruno determinant equals the scaled Euler quotient "
                 "power (odd modulus 2k+1)",
         true, 100, 2, kMaxDeterminantRows},
        false, [](int n, int k) { return build_genk(k, n); });
    add({"moduli7", "modulus 7 determinant identity in split two-determinant form",
         false, 100},
        false, [](int n, int) { return build_moduli7(n); });
    add({"kk1", "reconstructed leading ODE coefficient equals k(k-1) G2", true, 100,
         2, 8},
        false, [](int n, int k) { return build_kk1(k, n); });
    return entries;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = make_registry();
    return entries;
}

const Entry& find_entry(const std::string& name) {
    for (const Entry& e : registry())
        if (e.info.name == name) return e;
    throw UnknownIdentity("no identity named '" + name + "'");
}

} // namespace

std::string IdentityId::to_string() const {
    return k ? name + "(" + std::to_string(*k) + ")" : name;
}

std::vector<IdentityInfo> list_identities() {
    std::vector<IdentityInfo> out;
    out.reserve(registry().size());
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
}

std::optional<Mismatch> compare_sides(const PrefixedSeries& lhs,
                                      const PrefixedSeries& rhs) {
    if (lhs.exponent() != rhs.exponent())
        return Mismatch{true, 0, Rational(lhs.exponent()), Rational(rhs.exponent())};
    const int common = std::min(lhs.order(), rhs.order());
    long base = 0;
    if (lhs.exponent().is_integer()) {
        const mpz_class& num = lhs.exponent().numerator();
        if (num.fits_slong_p()) base = num.get_si();
    }
    for (int n = 0; n <= common; ++n) {
        if (lhs.body().coeff(n) != rhs.body().coeff(n))
            return Mismatch{false, base + n, lhs.body().coeff(n), rhs.body().coeff(n)};
    }
    return std::nullopt;
}

VerificationReport verify(const IdentityId& id, std::optional<int> order) {
    const Entry& entry = find_entry(id.name);
    if (entry.info.parameterized && !id.k)
        throw BadParams(id.name + " needs the family parameter k");
    if (!entry.info.parameterized && id.k)
        throw BadParams(id.name + " takes no parameter");
    int k = 0;
    if (id.k) {
        k = *id.k;
        if (k < entry.info.k_min || k > entry.info.k_max)
            throw BadParams(id.name + ": k=" + std::to_string(k) + " outside " +
                            std::to_string(entry.info.k_min) + ".." +
                            std::to_string(entry.info.k_max));
    }
    int n = order.value_or(entry.info.default_order);
    if (n < 0) throw BadParams("order must be non-negative");
    if (entry.scalar) n = 0;

    const auto start = std::chrono::steady_clock::now();
    const Sides sides = entry.build(n, k);
    std::optional<Mismatch> mismatch = compare_sides(sides.first, sides.second);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    VerificationReport report;
    report.id = id;
    report.order = n;
    report.status = mismatch ? VerifyStatus::mismatch : VerifyStatus::verified;
    report.first_mismatch = std::move(mismatch);
    report.elapsed = elapsed;
    return report;
}

std::vector<VerificationReport> verify_all(
    std::optional<int> order, int k_max, unsigned jobs,
    const std::function<void(const VerificationReport&)>& on_done) {
    if (k_max < 2 || k_max > 50) throw BadParams("k_max must lie in 2..50");

    std::vector<IdentityId> tasks;
    for (const Entry& e : registry()) {
        if (!e.info.parameterized) {
            tasks.push_back({e.info.name, std::nullopt});
            continue;
        }
        const int cap = std::min(k_max, e.info.k_max);
        for (int k = e.info.k_min; k <= cap; ++k)
            tasks.push_back({e.info.name, k});
    }

    std::vector<VerificationReport> reports(tasks.size());
    std::mutex done_lock;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = verify(tasks[i], order);
            if (on_done) {
                std::lock_guard<std::mutex> guard(done_lock);
                on_done(reports[i]);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }
    return reports;
}

std::string to_json_string(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.id.name;
    j["params"] = report.id.k ? nlohmann::ordered_json::array({*report.id.k})
                              : nlohmann::ordered_json::array();
    j["order"] = report.order;
    j["status"] = report.status == VerifyStatus::verified ? "verified" : "mismatch";
    if (report.first_mismatch) {
        nlohmann::ordered_json m;
        if (report.first_mismatch->at_prefix)
            m["power"] = "prefix";
        else
            m["power"] = report.first_mismatch->power;
        m["lhs"] = report.first_mismatch->lhs.to_string();
        m["rhs"] = report.first_mismatch->rhs.to_string();
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed.count();
    return j.dump();
}

std::string to_text_line(const VerificationReport& report) {
    const std::string head = report.id.to_string();
    if (report.status == VerifyStatus::verified)
        return head + ": verified to order " + std::to_string(report.order);
    const Mismatch& m = *report.first_mismatch;
    const std::string where =
        m.at_prefix ? "prefix exponent" : "power " + std::to_string(m.power);
    return head + ": mismatch at " + where + ": lhs = " + m.lhs.to_string() +
           ", rhs = " + m.rhs.to_string() + " (order " + std::to_string(report.order) +
           ")";
}

} // namespace etaq
