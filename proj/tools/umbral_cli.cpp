#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "umbral/euler.hpp"
#include "umbral/fermionic.hpp"
#include "umbral/padic.hpp"
#include "umbral/serialize.hpp"
#include "umbral/suite.hpp"

namespace {

using namespace umbral;

std::string coeff_json(const Poly& p) { return poly_to_json(p); }

std::uint64_t sum_budget() {
    if (const char* env = std::getenv("UMBRAL_SUM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed UMBRAL_SUM_BUDGET\n";
    }
    return kDefaultSumBudget;
}

int cmd_euler(unsigned nmax, unsigned r, const std::string& format, bool with_polys) {
    std::vector<OrderRValue> values;
    for (unsigned n = 0; n <= nmax; ++n) values.push_back(euler_order_r_checked(n, r));
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (unsigned n = 0; n <= nmax; ++n) {
            nlohmann::json row;
            row["n"] = n;
            row["value"] = rat_to_string(values[n].value);
            row["single_route"] = !values[n].dual_route;
            if (with_polys) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& c : euler_poly_order_r(n, r).coeffs())
                    arr.push_back(rat_to_string(c));
                row["poly"] = arr;
            }
            rows.push_back(std::move(row));
        }
        nlohmann::json out;
        out["r"] = r;
        out["rows"] = rows;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << (with_polys ? "n,value,poly\n" : "n,value\n");
        for (unsigned n = 0; n <= nmax; ++n) {
            std::cout << n << "," << rat_to_string(values[n].value);
            if (with_polys) std::cout << ",\"" << coeff_json(euler_poly_order_r(n, r)) << "\"";
            std::cout << "\n";
        }
    } else {
        for (unsigned n = 0; n <= nmax; ++n) {
            std::cout << "E_" << n;
            if (r != 1) std::cout << "^(" << r << ")";
            std::cout << " = " << rat_to_string(values[n].value);
            if (!values[n].dual_route) std::cout << "  (single-route)";
            if (with_polys) std::cout << "   " << euler_poly_order_r(n, r).to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_integrate(const std::string& poly_literal, unsigned r, const std::string& x0_str,
                  unsigned long p, unsigned nmax, unsigned M, bool convergence,
                  const std::string& format) {
    Poly pol = poly_from_json(poly_literal);
    BigRat x0 = rat_from_string(x0_str);
    BigRat exact = integral_order_r(pol, r, x0);
    if (convergence) {
        if (r != 1) {
            std::cerr << "convergence reports are defined for r = 1 only\n";
            return 2;
        }
        if (x0 != 0) pol = pol.shift(x0);
        IntegralReport rep = convergence_report(pol, p, nmax, M, sum_budget());
        std::cout << rep.to_json() << "\n";
        return 0;
    }
    if (format == "json") {
        nlohmann::json out;
        out["integrand"] = nlohmann::json::parse(coeff_json(pol));
        out["r"] = r;
        out["x0"] = rat_to_string(x0);
        out["value"] = rat_to_string(exact);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rat_to_string(exact) << "\n";
    }
    return 0;
}

int cmd_verify(const SuiteConfig& config, const std::string& format) {
    std::vector<SuiteResult> results = run_suite(config);
    bool all_passed = true;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& res : results) {
            nlohmann::json row;
            row["id"] = res.id;
            row["params"] = res.params;
            row["passed"] = res.passed;
            if (!res.passed) row["counterexample"] = res.counterexample;
            row["millis"] = res.millis;
            rows.push_back(std::move(row));
            all_passed = all_passed && res.passed;
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& res : results) {
            std::cout << (res.passed ? "PASS " : "FAIL ") << res.id;
            if (!res.passed) std::cout << "  counterexample: " << res.counterexample;
            std::cout << "\n";
            all_passed = all_passed && res.passed;
        }
        std::cout << (all_passed ? "all identities verified" : "identity failures detected") << "\n";
    }
    if (results.empty()) {
        std::cerr << "no suite item matches filter '" << config.filter << "'\n";
        return 2;
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact umbral-calculus and fermionic p-adic integral toolkit"};
    app.require_subcommand(1);

    // euler
    unsigned nmax = 10, order = 1;
    std::string format = "plain";
    bool with_polys = false;
    auto* euler_cmd = app.add_subcommand("euler", "tabulate Euler numbers/polynomials of order r");
    euler_cmd->add_option("--nmax", nmax, "highest index n");
    euler_cmd->add_option("--r", order, "order r >= 1")->check(CLI::PositiveNumber);
    euler_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));
    euler_cmd->add_flag("--polys", with_polys, "include polynomial coefficients");

    // integrate
    std::string poly_literal, x0_str = "0";
    unsigned long prime = 3;
    unsigned conv_nmax = 4, precision = 16;
    bool convergence = false;
    std::string int_format = "plain";
    unsigned int_r = 1;
    auto* int_cmd = app.add_subcommand("integrate", "fermionic integral of a polynomial");
    int_cmd->add_option("--poly", poly_literal, "JSON array of rational strings, constant first")
        ->required();
    int_cmd->add_option("--r", int_r, "number of iterated integrals")->check(CLI::PositiveNumber);
    int_cmd->add_option("--x0", x0_str, "evaluation point (rational)");
    int_cmd->add_option("--p", prime, "odd prime for convergence reports");
    int_cmd->add_option("--nmax", conv_nmax, "partial sums up to N = nmax");
    int_cmd->add_option("--M", precision, "p-adic working precision");
    int_cmd->add_flag("--convergence", convergence, "emit a partial-sum convergence report");
    int_cmd->add_option("--format", int_format)->check(CLI::IsMember({"plain", "json"}));

    // verify
    umbral::SuiteConfig config;
    std::string verify_format = "plain";
    int perturb = -1;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity-verification suite");
    verify_cmd->add_option("--filter", config.filter, "run only ids containing this substring");
    verify_cmd->add_option("--nmax", config.nmax, "degree/index sweep bound");
    verify_cmd->add_option("--rmax", config.rmax, "order sweep bound")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--p", config.primes, "primes to sweep");
    verify_cmd->add_option("--seed", config.seed, "seed for randomized sweeps");
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"plain", "json"}));
    verify_cmd
        ->add_option("--perturb-euler", perturb,
                     "test hook: corrupt E_n before running, to prove the suite can fail")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (euler_cmd->parsed()) return cmd_euler(nmax, order, format, with_polys);
        if (int_cmd->parsed())
            return cmd_integrate(poly_literal, int_r, x0_str, prime, conv_nmax, precision,
                                 convergence, int_format);
        if (verify_cmd->parsed()) {
            if (perturb >= 0) config.perturb_euler = static_cast<unsigned>(perturb);
            return cmd_verify(config, verify_format);
        }
    } catch (const umbral::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const umbral::BudgetExceeded& e) {
        std::cerr << e.what() << "\n"
                  << "raise UMBRAL_SUM_BUDGET or lower --nmax; the closed form is still exact\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
