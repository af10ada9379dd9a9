#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittcheck/ring.hpp"
#include "wittcheck/witt.hpp"

namespace wittcheck {

enum class TheoremId { T1, T2, T3, T4, Exercise, RestrictedAxioms, NormalForm, GPrime };

std::string_view to_string(TheoremId id) noexcept;
TheoremId parse_theorem(std::string_view text);
const std::vector<TheoremId>& all_theorems();

/// Primes swept when the caller does not name one.
std::vector<std::uint32_t> default_primes(TheoremId id);
/// Largest prime accepted for a theorem, with or without --allow-large.
std::uint32_t max_prime(TheoremId id, bool allow_large);

struct VerifyOptions {
    std::optional<ModulusVariant> variant;  // unset: check both quotient rings
    std::uint64_t seed = 0;
    bool allow_large = false;
    std::uint32_t samples = 0;  // 0: per-theorem default
    JacobsonConvention convention = JacobsonConvention::ApplyToG;
    bool record_timing = true;
};

struct VerificationReport {
    std::string theorem;
    std::uint32_t prime = 0;
    std::optional<ModulusVariant> variant;
    bool passed = false;
    std::uint64_t cases_checked = 0;
    std::optional<nlohmann::json> counterexample;
    std::int64_t elapsed_ms = 0;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
    /// One line: "[PASS] t4 p=5 cases=5 ...".
    std::string to_text() const;
};

/// Runs one verification sweep. Throws BoundsError for a prime outside the
/// theorem's bounds; identity failures come back as failed reports carrying
/// the offending input.
VerificationReport run_verify(TheoremId id, std::uint32_t p, const VerifyOptions& options = {});

/// Expansion of a D/F word, as text or as JSON.
std::string run_expand(std::string_view word, bool json);

/// C(f) by the three routes: the p-th power itself, the derivation chain,
/// and -∂^{p-1}(f^{p-1}).
VerificationReport run_cvalue(std::uint32_t p, std::string_view poly, ModulusVariant variant);

/// d(J) for every partition of n, optionally reduced mod p.
std::string run_dtable(std::uint32_t n, std::optional<std::uint32_t> p, bool json);

}  // namespace wittcheck
