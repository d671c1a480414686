/* Acceptance suite. Runs every release criterion against the installed
 * surfaces (the CLI binary for the command-level checks, the library for
 * the value-level ones) and prints one PASS/FAIL line per criterion.
 *
 * usage: acceptance <path-to-cli> <path-to-property-test-binary>
 */

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "etaq/identities.hpp"
#include "etaq/minimal_models.hpp"
#include "etaq/ode.hpp"
#include "etaq/series_matrix.hpp"
#include "etaq/special_series.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
    double seconds = 0.0;
};

RunResult run_command(const std::string& command) {
    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

int failures = 0;
int criterion_index = 0;

void report(bool pass, const std::string& text, double seconds) {
    ++criterion_index;
    if (!pass) ++failures;
    std::printf("[%2d/12] %s %s (%.2f s)\n", criterion_index, pass ? "PASS" : "FAIL",
                text.c_str(), seconds);
    std::fflush(stdout);
}

std::string quoted(const std::string& path) { return "'" + path + "'"; }

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <property-test-binary>\n", argv[0]);
        return 2;
    }
    const std::string cli = quoted(argv[1]);
    const std::string props = quoted(argv[2]);

    using namespace etaq;

    { /* 1: rr1 to order 1000, under 10 s */
        const RunResult r = run_command(cli + " verify --id rr1 --order 1000");
        report(r.exit_code == 0 && r.seconds < 10.0,
               "verify rr1 --order 1000 exits 0 within 10 s", r.seconds);
    }

    { /* 2: rr2 to order 1000 */
        const RunResult r = run_command(cli + " verify --id rr2 --order 1000");
        report(r.exit_code == 0, "verify rr2 --order 1000 exits 0", r.seconds);
    }

    { /* 3: mod5 to order 500 plus the p(5n+4) congruence to n = 2000 */
        const RunResult a = run_command(cli + " verify --id mod5 --order 500");
        const RunResult b = run_command(cli + " verify --id mod5_congruence --order 2000");
        report(a.exit_code == 0 && b.exit_code == 0,
               "verify mod5 --order 500 and mod5_congruence --order 2000 exit 0",
               a.seconds + b.seconds);
    }

    { /* 4: genk for k = 2..6 at order 200, combined under 60 s, and the
         k = 2 sides are -1/5 of the rr1 sides */
        double total = 0.0;
        bool all_ok = true;
        for (int k = 2; k <= 6; ++k) {
            const RunResult r = run_command(cli + " verify --id genk --k " +
                                            std::to_string(k) + " --order 200");
            total += r.seconds;
            all_ok = all_ok && r.exit_code == 0;
        }
        const int order = 200;
        const TruncatedSeries rr1_lhs =
            TruncatedSeries::one(order) -
            Rational(5) * lambert(CharacterWeighting::legendre(5, 1, 0), order);
        const TruncatedSeries rr1_rhs = pow_int(euler_product(order), 5) *
                                        invert(euler_product_scaled(5, order));
        const bool scaled =
            wronskian_identity_lhs(2, order) == Rational(-1, 5) * rr1_lhs &&
            wronskian_identity_rhs(2, order) == Rational(-1, 5) * rr1_rhs;
        report(all_ok && scaled && total < 60.0,
               "verify genk --k 2..6 --order 200 exit 0 in < 60 s; k=2 sides are "
               "-1/5 of rr1",
               total);
    }

    { /* 5: moduli7 to order 500 with constant -6/343 */
        const RunResult r = run_command(cli + " verify --id moduli7 --order 500");
        const bool constant_ok =
            wronskian_identity_rhs(3, 0).coeff(0) == Rational(-6, 343);
        report(r.exit_code == 0 && constant_ok,
               "verify moduli7 --order 500 exits 0 with RHS constant -6/343",
               r.seconds);
    }

    { /* 6: ODE residuals vanish through order 300 */
        double total = 0.0;
        bool all_ok = true;
        for (const char* id : {"diffmain_sol1", "diffmain_sol2", "ode_L1", "ode_L2"}) {
            const RunResult r =
                run_command(cli + " verify --id " + id + " --order 300");
            total += r.seconds;
            all_ok = all_ok && r.exit_code == 0;
        }
        report(all_ok, "diffmain_sol1/2 and ode_L1/L2 residuals vanish to order 300",
               total);
    }

    { /* 7: reconstructed leading coefficients at order 100 */
        double total = 0.0;
        bool all_ok = true;
        for (int k = 2; k <= 4; ++k) {
            const RunResult r = run_command(cli + " ode-reconstruct --k " +
                                            std::to_string(k) + " --order 100");
            total += r.seconds;
            bool ok = r.exit_code == 0 &&
                      r.output.find("A1 matches k(k-1)*G2: yes") != std::string::npos;
            if (k == 2)
                ok = ok &&
                     r.output.find("A2 matches -(11/5)*G4: yes") != std::string::npos;
            all_ok = all_ok && ok;
        }
        report(all_ok,
               "ode-reconstruct --k 2..4 --order 100 reports A1 = k(k-1)*G2 "
               "(and A2 = -(11/5)*G4 for k=2)",
               total);
    }

    { /* 8: recursion tables match products to n = 500, b(4) = 456/228 */
        const RunResult a = run_command(cli + " verify --id recursion_a --order 500");
        const RunResult b = run_command(cli + " verify --id recursion_b --order 500");
        const RecursionTable table = recursion_table(RecursionKind::b, 4);
        const auto [num, den] = recursion_step(RecursionKind::b, 4, table.values);
        const bool step_ok = num == Rational(456) && den == Rational(228) &&
                             table.values[4] == Rational(2);
        bool integral = true;
        for (const auto& kind : {RecursionKind::a, RecursionKind::b})
            for (const Rational& v : recursion_table(kind, 500).values)
                integral = integral && v.is_integer();
        report(a.exit_code == 0 && b.exit_code == 0 && step_ok && integral,
               "recursion_a/b match products to n = 500; b(4) = 456/228 = 2; all "
               "values integral",
               a.seconds + b.seconds);
    }

    { /* 9: eta^4 logarithmic derivative to order 500 */
        const RunResult r = run_command(cli + " verify --id eta4_logderiv --order 500");
        report(r.exit_code == 0, "verify eta4_logderiv --order 500 exits 0", r.seconds);
    }

    { /* 10: weight sums for k <= 50 and Vandermonde constants for k <= 8 */
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (unsigned k = 2; k <= 50; ++k)
            ok = ok && shifted_weight_sum(k) ==
                           Rational(static_cast<long>(k) * (k - 1), 12);
        for (unsigned k = 2; k <= 8; ++k) {
            SeriesMatrix m(static_cast<int>(k), static_cast<int>(k), 0);
            for (unsigned c = 0; c < k; ++c) {
                Rational power(1);
                const Rational h = shifted_weight(k, c + 1);
                for (unsigned r = 0; r < k; ++r) {
                    m.set(static_cast<int>(r), static_cast<int>(c),
                          TruncatedSeries::constant(power, 0));
                    power *= h;
                }
            }
            ok = ok && determinant(m).coeff(0) == vandermonde_constant(k);
        }
        ok = ok && vandermonde_constant(3) == Rational(-6, 343);
        ok = ok && vandermonde_constant(4) == Rational(20, 19683);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        report(ok,
               "etak exact for k <= 50; constk exact for k <= 8 including -6/343 "
               "and 20/19683",
               seconds);
    }

    { /* 11: character products against eta quotients, k <= 5, order 100 */
        double total = 0.0;
        bool all_ok = true;
        for (int k = 2; k <= 5; ++k) {
            const RunResult r = run_command(cli + " verify --id char_eta_product --k " +
                                            std::to_string(k) + " --order 100");
            total += r.seconds;
            all_ok = all_ok && r.exit_code == 0;
        }
        report(all_ok, "char_eta_product --k 2..5 --order 100 exits 0", total);
    }

    { /* 12: randomized property suites */
        const RunResult r = run_command(props);
        report(r.exit_code == 0, "property suites pass (>= 1000 cases each)",
               r.seconds);
    }

    if (failures == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
