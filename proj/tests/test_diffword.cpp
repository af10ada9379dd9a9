#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wittcheck/diffword.hpp"
#include "wittcheck/error.hpp"
#include "wittcheck/sympoly.hpp"
#include "wittcheck/witt.hpp"

using namespace wittcheck;

namespace {

DiffMonomial M(std::vector<std::uint32_t> o) { return DiffMonomial(std::move(o)); }

DiffPoly make(std::initializer_list<std::pair<std::vector<std::uint32_t>, int>> terms) {
    DiffPoly out;
    for (const auto& [o, c] : terms) out.add_term(M(o), c);
    return out;
}

}  // namespace

TEST_CASE("DiffMonomial is canonically sorted") {
    CHECK(M({3, 0, 1}) == M({0, 1, 3}));
    CHECK(M({0, 1, 1}).raise(1) == M({0, 1, 2}));
    CHECK(M({2}).times_f() == M({0, 2}));
    CHECK_THROWS_AS(M({0, 2}).raise(1), std::invalid_argument);
}

TEST_CASE("expand_word") {
    CHECK(expand_word("F") == make({{{0}, 1}}));
    CHECK(expand_word("DF") == make({{{1}, 1}}));
    CHECK(expand_word("DFDDF") == make({{{1, 2}, 1}, {{0, 3}, 1}}));
    CHECK(format_expansion(expand_word("DFDDF")) == "f'f'' + ff'''");
    CHECK(format_expansion(expand_word("F")) == "f");
}

TEST_CASE("malformed words report a position") {
    CHECK_THROWS_AS(expand_word(""), ParseError);
    CHECK_THROWS_AS(expand_word("FD"), ParseError);
    try {
        expand_word("DFxF");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("power_word and leibniz_power") {
    CHECK(power_word(1) == make({{{1}, 1}}));
    CHECK(power_word(2) == make({{{1, 1}, 1}, {{0, 2}, 1}}));
    CHECK(power_word(4) ==
          make({{{1, 1, 1, 1}, 1}, {{0, 1, 1, 2}, 11}, {{0, 0, 2, 2}, 4}, {{0, 0, 1, 3}, 7}, {{0, 0, 0, 4}, 1}}));
    CHECK(leibniz_power(1) == make({{{1}, 1}}));
    CHECK(leibniz_power(4) ==
          make({{{1, 1, 1, 1}, 24}, {{0, 1, 1, 2}, 144}, {{0, 0, 2, 2}, 36}, {{0, 0, 1, 3}, 48}, {{0, 0, 0, 4}, 4}}));
    CHECK(format_expansion(power_word(4)) == "(f')^4 + 11f(f')^2f'' + 4f^2(f'')^2 + 7f^2f'f''' + f^3f^(4)");

    for (std::uint32_t n = 1; n <= 12; ++n) {
        std::vector<std::uint32_t> top(n, 0);
        top.back() = n;
        CHECK(leibniz_power(n).coeff(M(top)) == n);
    }
}

TEST_CASE("monomials of (df)^n and d^n f^n have n factors and total order n") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
        for (const DiffPoly& dp : {power_word(n), leibniz_power(n)}) {
            for (const auto& [m, c] : dp.terms()) {
                REQUIRE(m.degree() == n);
                REQUIRE(m.total_order() == n);
                REQUIRE(c > 0);
            }
        }
    }
}

TEST_CASE("theorem2_check") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U}) CHECK(theorem2_check(Prime(q)));
    // Symmetrised form: (p-1)!·(df)^{p-1} ≡ d^{p-1} f^{p-1}.
    for (std::uint32_t q : {2U, 3U, 5U, 7U, 11U, 13U}) {
        const DiffPoly lhs = power_word(q - 1) * factorial(q - 1);
        CHECK((lhs - leibniz_power(q - 1)).vanishes_mod(Prime(q)));
    }
    // Not a congruence modulo a composite stand-in.
    CHECK_FALSE((power_word(5) + leibniz_power(5)).vanishes_mod(Prime(7)));
}

TEST_CASE("evaluate matches direct word application") {
    std::mt19937_64 rng(101);
    const char letters[] = {'D', 'F'};
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (int i = 0; i < 200; ++i) {
            std::string word;
            const auto len = 1 + rng() % 9;
            for (std::size_t k = 0; k + 1 < len; ++k) word += letters[rng() % 2];
            word += 'F';
            oracle::Coeffs f(1 + rng() % 6);
            for (auto& c : f) c = static_cast<std::int64_t>(rng() % q);
            const FpPoly value = evaluate(expand_word(word), FpPoly(p, f));
            REQUIRE(oracle::Coeffs(value.raw().begin(), value.raw().end()) == oracle::apply_word(word, f, q));
        }
    }
    const Prime five(5);
    CHECK(evaluate(expand_word("DFDDF"), FpPoly::monomial(five, 1, 2)) == FpPoly::monomial(five, 4, 1));
    const FpPoly f(five, {2, 0, 1, 4, 3});
    CHECK(evaluate(make({{{1}, 1}}), f) == derive(f));
    CHECK(evaluate(power_word(4), f) == g_series(f));
}

TEST_CASE("expand_multi") {
    MultiDiffPoly one;
    one.add_term(MultiDiffMonomial({1}), 1);
    CHECK(expand_multi(1) == one);

    MultiDiffPoly two;
    two.add_term(MultiDiffMonomial({1, 1}), 1);
    two.add_term(MultiDiffMonomial({2, 0}), 1);
    CHECK(expand_multi(2) == two);

    // Coefficients of t_1 (t_1 + t_2)(t_1 + t_2 + t_3).
    const auto chain = oracle::product_chain({0, 1, 2});
    const MultiDiffPoly three = expand_multi(3);
    CHECK(three.size() == chain.size());
    for (const auto& [e, c] : chain) CHECK(three.coeff(MultiDiffMonomial(e)) == c);
}

TEST_CASE("merging symbols recovers (df)^m") {
    for (std::uint32_t m = 1; m <= 6; ++m) {
        const MultiDiffPoly multi = expand_multi(m);
        CHECK(multi.merge_symbols() == power_word(m));

        std::vector<std::uint32_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0U);
        DiffPoly summed;
        do {
            summed = summed + multi.permute_symbols(perm).merge_symbols();
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(summed == power_word(m) * factorial(m));
    }
}

TEST_CASE("JSON rendering") {
    const auto j = to_json(expand_word("DFDDF"));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["orders"] == nlohmann::json::array({0, 3}));
    CHECK(j[0]["coeff"] == "1");
    CHECK(j[1]["orders"] == nlohmann::json::array({1, 2}));
}
