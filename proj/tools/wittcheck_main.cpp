// wittcheck: command-line front end for the verification sweeps.
//
//   wittcheck verify --theorem t4 --prime 5 [--modulus xp|xp1] [--json] [--seed N] [--allow-large]
//   wittcheck expand --word DFDDF [--json]
//   wittcheck dtable --n 4 [--prime 5] [--json]
//   wittcheck cvalue --prime 5 --poly 1,2,0,1,3 [--modulus xp]
//
// Shared flags may also come from a key = value config file named by
// WITTCHECK_CONFIG (or --config); command-line values take precedence.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wittcheck/error.hpp"
#include "wittcheck/harness.hpp"

namespace {

struct SharedFlags {
    bool json = false;
    std::uint64_t seed = 0;
    bool allow_large = false;
    std::uint32_t samples = 0;
    std::string modulus;
    std::string jacobson = "g";
    bool no_timing = false;
};

int run_verify_command(const std::string& theorem, const std::vector<std::uint32_t>& primes, const SharedFlags& flags) {
    using namespace wittcheck;
    VerifyOptions options;
    if (!flags.modulus.empty()) options.variant = parse_variant(flags.modulus);
    options.seed = flags.seed;
    options.allow_large = flags.allow_large;
    options.samples = flags.samples;
    options.convention = parse_convention(flags.jacobson);
    options.record_timing = !flags.no_timing;

    std::vector<TheoremId> ids;
    if (theorem == "all") {
        ids = all_theorems();
    } else {
        ids.push_back(parse_theorem(theorem));
    }

    bool all_passed = true;
    nlohmann::json reports = nlohmann::json::array();
    for (auto id : ids) {
        const auto sweep = primes.empty() ? default_primes(id) : primes;
        for (auto p : sweep) {
            if (id == TheoremId::Exercise && p < 3 && theorem == "all") continue;
            const VerificationReport report = run_verify(id, p, options);
            all_passed = all_passed && report.passed;
            if (flags.json) {
                reports.push_back(report.to_json());
            } else {
                std::cout << report.to_text() << '\n';
            }
        }
    }
    if (flags.json) std::cout << reports.dump(2) << '\n';
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the restricted structure of the Witt algebra in characteristic p"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value file with default flag values")->envname("WITTCHECK_CONFIG");

    SharedFlags flags;
    app.add_flag("--json", flags.json, "Emit JSON instead of text");
    app.add_option("--seed", flags.seed, "Seed for randomized sweeps");
    app.add_flag("--allow-large", flags.allow_large, "Raise the per-theorem prime bounds");
    app.add_option("--samples", flags.samples, "Sample count for randomized sweeps (0 = default)");
    app.add_option("--modulus", flags.modulus, "Quotient ring: xp (x^p) or xp1 (x^p - 1)")
        ->check(CLI::IsMember({"xp", "xp1"}, CLI::ignore_case));
    app.add_option("--jacobson", flags.jacobson, "s_i convention: g (apply ad^{p-1} to g) or h")
        ->check(CLI::IsMember({"g", "h", "apply-to-g", "apply-to-h"}));
    app.add_flag("--no-timing", flags.no_timing, "Report elapsed_ms = 0 so output is byte-reproducible");

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    std::string theorem;
    std::vector<std::uint32_t> primes;
    verify->add_option("--theorem", theorem, "t1 t2 t3 t4 exercise restricted-axioms normal-form gprime | all")
        ->required();
    verify->add_option("--prime", primes, "Prime(s) to check (default: per-theorem set)");

    auto* expand = app.add_subcommand("expand", "Expand a D/F word into differential monomials");
    std::string word;
    expand->add_option("--word", word, "Word over {D, F} ending in F, e.g. DFDDF")->required();

    auto* dtable = app.add_subcommand("dtable", "Tabulate d(J) over the partitions of n");
    std::uint32_t n = 0;
    std::optional<std::uint32_t> dtable_prime;
    dtable->add_option("--n", n, "Partition size")->required();
    dtable->add_option("--prime", dtable_prime, "Also print d(J) mod p");

    auto* cvalue = app.add_subcommand("cvalue", "Compute C(f) three ways");
    std::uint32_t cvalue_prime = 0;
    std::string poly;
    cvalue->add_option("--prime", cvalue_prime, "Prime p")->required();
    cvalue->add_option("--poly", poly, "Coefficients, low degree first, e.g. 1,2,0,1,3")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify_command(theorem, primes, flags);
        if (*expand) {
            std::cout << wittcheck::run_expand(word, flags.json) << '\n';
            return 0;
        }
        if (*dtable) {
            std::cout << wittcheck::run_dtable(n, dtable_prime, flags.json);
            if (flags.json) std::cout << '\n';
            return 0;
        }
        if (*cvalue) {
            const auto variant = flags.modulus.empty() ? wittcheck::ModulusVariant::XP
                                                       : wittcheck::parse_variant(flags.modulus);
            const auto report = wittcheck::run_cvalue(cvalue_prime, poly, variant);
            if (flags.json) {
                std::cout << report.to_json().dump(2) << '\n';
            } else {
                std::cout << report.to_text() << '\n';
                std::cout << "C(f): p-th power = "
                          << (report.details.contains("c_a") ? report.details["c_a"].dump() : std::string("n/a"))
                          << ", chain = " << report.details.value("c_b", nlohmann::json()).dump()
                          << ", -d^{p-1}(f^{p-1}) = " << report.details.value("c_c", nlohmann::json()).dump() << '\n';
            }
            return report.passed ? 0 : 1;
        }
    } catch (const wittcheck::BoundsError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
