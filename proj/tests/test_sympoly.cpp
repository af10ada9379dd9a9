#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "wittcheck/diffword.hpp"
#include "wittcheck/error.hpp"
#include "wittcheck/sympoly.hpp"

using namespace wittcheck;

namespace {

MVPoly from_terms(std::size_t arity, std::initializer_list<std::pair<ExponentVector, int>> terms) {
    MVPoly out(arity);
    for (const auto& [e, c] : terms) out.add_term(e, c);
    return out;
}

MVPoly from_oracle(const oracle::Multi& m, std::size_t arity) {
    MVPoly out(arity);
    for (const auto& [e, c] : m) out.add_term(e, c);
    return out;
}

}  // namespace

TEST_CASE("graded-lex key order") {
    GradedLexLess less;
    CHECK(less({1, 0}, {0, 2}));
    CHECK(less({0, 2}, {1, 1}));
    CHECK(less({1, 1}, {2, 0}));
    const MVPoly f = from_terms(2, {{{0, 2}, 1}, {{2, 0}, 3}, {{1, 0}, 1}});
    CHECK(f.leading_term().first == ExponentVector{2, 0});
    CHECK(to_json(f)[0]["exponents"] == nlohmann::json::array({2, 0}));
    CHECK(to_json(f)[0]["coeff"] == "3");
}

TEST_CASE("product_chain") {
    const std::vector<std::uint32_t> id1{0};
    CHECK(product_chain(id1) == MVPoly::variable(1, 0));
    const std::vector<std::uint32_t> id2{0, 1};
    CHECK(product_chain(id2) == from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}}));
    const std::vector<std::uint32_t> bad{0, 0};
    CHECK_THROWS_AS(product_chain(bad), std::invalid_argument);
    const std::vector<std::uint32_t> out_of_range{0, 2};
    CHECK_THROWS_AS(product_chain(out_of_range), std::invalid_argument);
}

TEST_CASE("product_chain coefficients match the distinguishable-symbol word expansion") {
    for (std::uint32_t m = 1; m <= 4; ++m) {
        std::vector<std::uint32_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0U);
        const MultiDiffPoly word = expand_multi(m);
        do {
            const MVPoly chain = product_chain(perm);
            REQUIRE(chain == from_oracle(oracle::product_chain(perm), m));
            // σ relabels the symbols of ∂f_m ... ∂f_1 the same way it relabels t_i.
            const MultiDiffPoly permuted = word.permute_symbols(perm);
            REQUIRE(chain.size() == permuted.size());
            for (const auto& [e, c] : chain.terms()) REQUIRE(permuted.coeff(MultiDiffMonomial(e)) == c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("lhs_sum and rhs_power") {
    CHECK(lhs_sum(Prime(2)) == MVPoly::variable(1, 0));
    CHECK(rhs_power(Prime(2)) == MVPoly::variable(1, 0));
    const MVPoly square = from_terms(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    CHECK(lhs_sum(Prime(3)) == square);
    CHECK(rhs_power(Prime(3)) == square);
    CHECK(rhs_power(Prime(5)).coeff({1, 1, 1, 1}) == 24);

    for (std::uint32_t q : {3U, 5U, 7U}) {
        const MVPoly lhs = lhs_sum(Prime(q));
        CHECK(lhs.is_symmetric());
        CHECK(lhs.is_homogeneous(q - 1));
        CHECK(rhs_power(Prime(q)).is_homogeneous(q - 1));
        CHECK(lhs == lhs_sum_by_prefix_sets(Prime(q)));
        CHECK(lhs == lhs_sum(Prime(q), false, 3));
    }
    // Brute force over S_4 straight from the oracle chain expansion.
    oracle::Multi brute;
    std::vector<std::uint32_t> perm{0, 1, 2, 3};
    do {
        for (const auto& [e, c] : oracle::product_chain(perm)) brute[e] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(lhs_sum(Prime(5)) == from_oracle(brute, 4));
}

TEST_CASE("permutation-sum bound") {
    CHECK_THROWS_AS(lhs_sum(Prime(11)), BoundsError);
    CHECK_THROWS_AS(lhs_sum(Prime(13), true), BoundsError);
    CHECK_THROWS_AS(theorem3_check(Prime(11)), BoundsError);
}

TEST_CASE("theorem3_check") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) CHECK(theorem3_check(Prime(q)));
    CHECK(lhs_sum(Prime(3)) == rhs_power(Prime(3)));
    CHECK_FALSE(lhs_sum(Prime(5)) == rhs_power(Prime(5)));
}

TEST_CASE("precancel_check") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) CHECK(precancel_check(Prime(q)));
    // p = 3 by hand: (t1^2 + 2 t1 t2 + t2^2)(t1 + t2) = t1^3 + 3t1^2t2 + 3t1t2^2 + t2^3.
    const MVPoly product = lhs_sum(Prime(3)) * MVPoly::sum_of_variables(2);
    CHECK(product == from_terms(2, {{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 3}, {{0, 3}, 1}}));
    CHECK(product.congruent_mod(MVPoly::power_sum(2, 3), Prime(3)));
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) CHECK(theorem3_via_cancellation(Prime(q)));
}

TEST_CASE("cancel_divide") {
    const MVPoly s = MVPoly::sum_of_variables(2);
    CHECK(cancel_divide(from_terms(2, {{{2, 0}, 1}, {{1, 1}, 1}}), s) == MVPoly::variable(2, 0));
    CHECK(cancel_divide(MVPoly::power_sum(2, 3), s) == from_terms(2, {{{2, 0}, 1}, {{1, 1}, -1}, {{0, 2}, 1}}));
    for (std::uint32_t q : {3U, 5U, 7U}) {
        const MVPoly sum = MVPoly::sum_of_variables(q - 1);
        CHECK(cancel_divide(rhs_power(Prime(q)) * sum, sum) == rhs_power(Prime(q)));
    }
    CHECK_THROWS_AS(cancel_divide(MVPoly::power_sum(2, 2), s), std::domain_error);
    CHECK_THROWS_AS(cancel_divide(from_terms(2, {{{1, 0}, 1}, {{0, 1}, 1}}), s * BigInt(2)), std::domain_error);
    try {
        cancel_divide(MVPoly::power_sum(2, 2), s);
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("t2^2") != std::string::npos);
    }
}
