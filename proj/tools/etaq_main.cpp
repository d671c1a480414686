#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "etaq/identities.hpp"
#include "etaq/minimal_models.hpp"
#include "etaq/ode.hpp"
#include "etaq/special_series.hpp"

namespace {

using namespace etaq;

int run_list() {
    for (const IdentityInfo& info : list_identities()) {
        std::string name = info.name;
        if (info.parameterized) name += "(k)";
        std::printf("%-22s %s\n", name.c_str(), info.description.c_str());
    }
    return 0;
}

int run_verify(const std::string& name, std::optional<int> k, std::optional<int> order,
               bool json) {
    IdentityId id{name, k};
    const VerificationReport report = verify(id, order);
    std::cout << (json ? to_json_string(report) : to_text_line(report)) << "\n";
    return report.status == VerifyStatus::verified ? 0 : 1;
}

int run_verify_all(std::optional<int> order, int k_max, unsigned jobs, bool json) {
    auto progress = [](const VerificationReport& r) {
        std::cerr << "[etaq] " << r.id.to_string() << ": "
                  << (r.status == VerifyStatus::verified ? "verified" : "MISMATCH")
                  << " (" << r.elapsed.count() << " ms)\n";
    };
    const std::vector<VerificationReport> reports =
        verify_all(order, k_max, jobs, progress);

    bool any_mismatch = false;
    if (json) {
        std::string out = "[";
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) out += ",";
            out += to_json_string(reports[i]);
        }
        out += "]";
        std::cout << out << "\n";
    }
    for (const VerificationReport& r : reports) {
        if (!json) std::cout << to_text_line(r) << "\n";
        any_mismatch = any_mismatch || r.status == VerifyStatus::mismatch;
    }
    return any_mismatch ? 1 : 0;
}

int run_char(int k, int i, int order) {
    std::cout << modified_character(static_cast<unsigned>(k), static_cast<unsigned>(i),
                                    order)
                     .to_string()
              << "\n";
    return 0;
}

int run_series(const std::string& name, int order) {
    if (name == "eisenstein2") {
        std::cout << eisenstein(2, order).to_string() << "\n";
    } else if (name == "eisenstein4") {
        std::cout << eisenstein(4, order).to_string() << "\n";
    } else if (name == "partition") {
        std::cout << partition_series(order).to_string() << "\n";
    } else if (name == "eta4") {
        std::cout << eta_quotient({{1, 4}}, order).to_string() << "\n";
    } else if (name == "rr-sum-1") {
        std::cout << rr_sum_side(1, order).to_string() << "\n";
    } else if (name == "rr-sum-2") {
        std::cout << rr_sum_side(2, order).to_string() << "\n";
    } else {
        throw BadParams("unknown series name '" + name + "'");
    }
    return 0;
}

int run_ode_reconstruct(int k, int order) {
    std::vector<PrefixedSeries> family;
    for (unsigned i = 1; i <= static_cast<unsigned>(k); ++i)
        family.push_back(modified_character(static_cast<unsigned>(k), i, order));
    const LinearODE ode = ode_reconstruct(family, order);

    for (int j = 1; j <= ode.degree(); ++j)
        std::cout << "A" << j << " = " << ode.coefficient(j).to_string() << "\n";

    const TruncatedSeries g2 = Rational(static_cast<long>(k) * (k - 1)) *
                               eisenstein(2, ode.order());
    const bool a1_ok = ode.coefficient(1) == g2;
    std::cout << "A1 matches k(k-1)*G2: " << (a1_ok ? "yes" : "no") << "\n";

    bool a2_ok = true;
    if (k == 2) {
        const TruncatedSeries g4 = Rational(-11, 5) * eisenstein(4, ode.order());
        a2_ok = ode.coefficient(2) == g4;
        std::cout << "A2 matches -(11/5)*G4: " << (a2_ok ? "yes" : "no") << "\n";
    }
    return a1_ok && a2_ok ? 0 : 1;
}

int run_coeffs(const std::string& progression, int order) {
    const auto comma = progression.find(',');
    if (comma == std::string::npos)
        throw BadParams("--progression expects M,R");
    int modulus = 0, residue = 0;
    try {
        modulus = std::stoi(progression.substr(0, comma));
        residue = std::stoi(progression.substr(comma + 1));
    } catch (const std::exception&) {
        throw BadParams("--progression expects integers M,R");
    }
    if (modulus < 1 || residue < 0)
        throw BadParams("--progression expects M >= 1 and R >= 0");
    const TruncatedSeries p = partition_series(modulus * order + residue);
    std::cout << extract_progression(p, static_cast<unsigned>(modulus),
                                     static_cast<unsigned>(residue))
                     .to_string()
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series kernel and identity verifier"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the identity registry");

    std::string verify_id;
    std::optional<int> verify_k;
    std::optional<int> verify_order;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity exactly");
    verify_cmd->add_option("--id", verify_id, "identity name")->required();
    verify_cmd->add_option("--k", verify_k, "family parameter for parameterized identities");
    verify_cmd->add_option("--order", verify_order, "truncation order (identity default when omitted)");
    verify_cmd->add_flag("--json", verify_json, "emit a JSON report");

    std::optional<int> all_order;
    int all_kmax = 4;
    unsigned all_jobs = 1;
    bool all_json = false;
    auto* all_cmd = app.add_subcommand("verify-all", "run the whole registry");
    all_cmd->add_option("--order", all_order, "truncation order (per-identity defaults when omitted)");
    all_cmd->add_option("--k-max", all_kmax, "instantiate parameterized identities for k = 2..k-max");
    all_cmd->add_option("--jobs", all_jobs, "worker threads");
    all_cmd->add_flag("--json", all_json, "emit a JSON array of reports");

    int char_k = 0, char_i = 0, char_order = 0;
    auto* char_cmd = app.add_subcommand("char", "print a modified character");
    char_cmd->add_option("--k", char_k, "family parameter")->required();
    char_cmd->add_option("--i", char_i, "module index 1..k")->required();
    char_cmd->add_option("--order", char_order, "truncation order")->required();

    std::string series_name;
    int series_order = 0;
    auto* series_cmd = app.add_subcommand("series", "print a named series");
    series_cmd
        ->add_option("--name", series_name,
                     "one of eisenstein2, eisenstein4, partition, eta4, rr-sum-1, rr-sum-2")
        ->required();
    series_cmd->add_option("--order", series_order, "truncation order")->required();

    int rec_k = 0, rec_order = 0;
    auto* rec_cmd = app.add_subcommand(
        "ode-reconstruct", "reconstruct the monic ODE annihilating the k-family characters");
    rec_cmd->add_option("--k", rec_k, "family parameter")->required();
    rec_cmd->add_option("--order", rec_order, "truncation order")->required();

    std::string coeffs_progression;
    int coeffs_order = 0;
    auto* coeffs_cmd =
        app.add_subcommand("coeffs", "extract a progression from the partition series");
    coeffs_cmd->add_option("--progression", coeffs_progression, "modulus,residue")
        ->required();
    coeffs_cmd->add_option("--order", coeffs_order, "truncation order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list_cmd->parsed()) return run_list();
        if (verify_cmd->parsed())
            return run_verify(verify_id, verify_k, verify_order, verify_json);
        if (all_cmd->parsed()) return run_verify_all(all_order, all_kmax, all_jobs, all_json);
        if (char_cmd->parsed()) return run_char(char_k, char_i, char_order);
        if (series_cmd->parsed()) return run_series(series_name, series_order);
        if (rec_cmd->parsed()) return run_ode_reconstruct(rec_k, rec_order);
        if (coeffs_cmd->parsed()) return run_coeffs(coeffs_progression, coeffs_order);
    } catch (const etaq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
