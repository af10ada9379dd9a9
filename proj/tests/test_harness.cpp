#include <doctest.h>

#include "wittcheck/error.hpp"
#include "wittcheck/harness.hpp"

using namespace wittcheck;

namespace {

VerifyOptions untimed() {
    VerifyOptions options;
    options.record_timing = false;
    return options;
}

}  // namespace

TEST_CASE("theorem names") {
    for (auto id : all_theorems()) CHECK(parse_theorem(to_string(id)) == id);
    CHECK(parse_theorem("restricted-axioms") == TheoremId::RestrictedAxioms);
    CHECK_THROWS_AS(parse_theorem("t5"), std::invalid_argument);
    CHECK(default_primes(TheoremId::T1) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(max_prime(TheoremId::T3, false) == 7);
    CHECK(max_prime(TheoremId::T3, true) == 11);
}

TEST_CASE("run_verify reports") {
    const auto t4 = run_verify(TheoremId::T4, 5, untimed());
    CHECK(t4.passed);
    CHECK(t4.cases_checked == 5);
    CHECK(t4.to_text() == "[PASS] t4 p=5 cases=5 (0 ms)");
    CHECK(t4.details["d_values"].size() == 5);

    const auto t3 = run_verify(TheoremId::T3, 7, untimed());
    CHECK(t3.passed);
    CHECK(t3.cases_checked == 720);
    CHECK(t3.details["precancel"] == true);
    CHECK(t3.details["via_cancellation"] == true);
    CHECK(t3.details["exact_over_Z"] == false);
    CHECK(run_verify(TheoremId::T3, 3, untimed()).details["exact_over_Z"] == true);

    CHECK(run_verify(TheoremId::T2, 2, untimed()).passed);
    CHECK(run_verify(TheoremId::Exercise, 7, untimed()).cases_checked == 7);

    VerifyOptions xp = untimed();
    xp.variant = ModulusVariant::XP;
    const auto t1 = run_verify(TheoremId::T1, 3, xp);
    CHECK(t1.passed);
    CHECK(t1.cases_checked == 27);
    CHECK(t1.to_json()["variant"] == "xp");
}

TEST_CASE("bounds are refused") {
    CHECK_THROWS_AS(run_verify(TheoremId::T3, 11), BoundsError);
    CHECK_THROWS_AS(run_verify(TheoremId::T1, 11), BoundsError);
    CHECK_THROWS_AS(run_verify(TheoremId::Exercise, 2), BoundsError);
    VerifyOptions large;
    large.allow_large = true;
    CHECK_THROWS_AS(run_verify(TheoremId::T3, 13, large), BoundsError);
    CHECK_THROWS_AS(run_verify(TheoremId::T4, 4), std::invalid_argument);
}

TEST_CASE("reports are deterministic without timing") {
    VerifyOptions options = untimed();
    options.seed = 17;
    for (auto id : {TheoremId::T1, TheoremId::RestrictedAxioms, TheoremId::NormalForm}) {
        CHECK(run_verify(id, 7, options).to_json().dump() == run_verify(id, 7, options).to_json().dump());
    }
}

TEST_CASE("restricted axioms under both conventions") {
    VerifyOptions options = untimed();
    options.samples = 30;
    const auto g = run_verify(TheoremId::RestrictedAxioms, 3, options);
    CHECK(g.passed);
    CHECK(g.details["convention_results"]["apply-to-g"] == true);
    CHECK(g.details["convention_results"]["apply-to-h"] == false);

    options.convention = JacobsonConvention::ApplyToH;
    const auto h = run_verify(TheoremId::RestrictedAxioms, 3, options);
    CHECK_FALSE(h.passed);
    REQUIRE(h.counterexample.has_value());
    CHECK((*h.counterexample)["sum"] == false);
    CHECK(h.to_text().rfind("[FAIL] restricted-axioms p=3", 0) == 0);
    // At p = 2 apply-to-h makes s_1 vanish while [g, h] does not.
    CHECK_FALSE(run_verify(TheoremId::RestrictedAxioms, 2, options).passed);
}

TEST_CASE("run_cvalue") {
    const auto xp = run_cvalue(5, "1,2,0,1,3", ModulusVariant::XP);
    CHECK(xp.passed);
    CHECK(xp.details["c_a"] == 2);
    CHECK(xp.details["c_b"] == 2);
    CHECK(xp.details["c_c"] == 2);
    const auto xp1 = run_cvalue(5, "1,2,0,1,3", ModulusVariant::XP1);
    CHECK(xp1.passed);
    CHECK(xp1.details["c_b"] == 0);
    const auto zero = run_cvalue(3, "0", ModulusVariant::XP);
    CHECK(zero.passed);
    CHECK(zero.details["c_a"].is_null());
    CHECK(zero.details["c_b"] == 0);
    CHECK_THROWS_AS(run_cvalue(3, "1,1,1,1", ModulusVariant::XP), std::invalid_argument);
    CHECK_THROWS_AS(run_cvalue(3, "1,x", ModulusVariant::XP), ParseError);
}

TEST_CASE("run_expand and run_dtable") {
    CHECK(run_expand("DFDFDFDFDF", false).empty() == false);
    CHECK(run_expand("DFDFDFDF", false) == "(f')^4 + 11f(f')^2f'' + 4f^2(f'')^2 + 7f^2f'f''' + f^3f^(4)");
    CHECK(run_expand("DDDDFFFF", false) ==
          "24(f')^4 + 144f(f')^2f'' + 36f^2(f'')^2 + 48f^2f'f''' + 4f^3f^(4)");
    const auto j = nlohmann::json::parse(run_expand("DF", true));
    CHECK(j["word"] == "DF");
    CHECK(j["terms"].size() == 1);
    CHECK_THROWS_AS(run_expand("DFD", false), ParseError);

    CHECK(run_dtable(2, 3, false) == "J = (1,1)  d(J) = 4  d(J) mod 3 = 1\nJ = (2)  d(J) = 1  d(J) mod 3 = 1\n");
    const auto rows = nlohmann::json::parse(run_dtable(4, std::nullopt, true));
    CHECK(rows.size() == 5);
    CHECK(rows[1]["d"] == "196");
    CHECK_FALSE(rows[1].contains("mod"));
}
