#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wittcheck/witt.hpp"

using namespace wittcheck;

namespace {

constexpr ModulusVariant kVariants[] = {ModulusVariant::XP, ModulusVariant::XP1};

TruncPoly mono(Prime p, ModulusVariant v, std::size_t k, std::int64_t c = 1) { return TruncPoly::monomial(p, v, k, c); }

// g |-> f·g' composed `times` times, evaluated directly.
TruncPoly iterate_action(const TruncPoly& f, TruncPoly g, std::uint32_t times) {
    for (std::uint32_t i = 0; i < times; ++i) g = f * derive(g);
    return g;
}

std::vector<TruncPoly> all_elements(Prime p, ModulusVariant v) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < p.value(); ++i) count *= p.value();
    std::vector<TruncPoly> out;
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(TruncPoly::from_index(p, v, i));
    return out;
}

}  // namespace

TEST_CASE("bracket examples match composed actions") {
    const Prime p(5);
    for (auto v : kVariants) {
        const Derivation d(mono(p, v, 0));
        const Derivation xd(mono(p, v, 1));
        const Derivation x2d(mono(p, v, 2));
        CHECK(bracket(xd, xd).is_zero());
        CHECK(bracket(d, xd) == d);
        CHECK(bracket(x2d, xd) == Derivation(mono(p, v, 2, 4)));

        for (const auto& [a, b] : {std::pair{d, xd}, std::pair{x2d, xd}}) {
            const Derivation br = bracket(a, b);
            for (std::uint32_t k = 0; k < p.value(); ++k) {
                const TruncPoly g = mono(p, v, k);
                REQUIRE(br.apply(g) == a.apply(b.apply(g)) - b.apply(a.apply(g)));
            }
        }
    }
    CHECK_THROWS_AS(bracket(Derivation(mono(p, ModulusVariant::XP, 1)), Derivation(FpPoly::x(p))),
                    std::invalid_argument);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
    std::mt19937_64 rng(5);
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (auto v : kVariants) {
            for (int i = 0; i < 50; ++i) {
                const Derivation a(TruncPoly::random(p, v, rng));
                const Derivation b(TruncPoly::random(p, v, rng));
                const Derivation c(TruncPoly::random(p, v, rng));
                REQUIRE((bracket(a, b) + bracket(b, a)).is_zero());
                REQUIRE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
            }
        }
    }
}

TEST_CASE("p_power on the monomial basis") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (auto v : kVariants) {
            CAPTURE(q);
            CHECK(p_power(Derivation(mono(p, v, 1))) == Derivation(mono(p, v, 1)));
            for (std::uint32_t k = 0; k < q; ++k) {
                if (k != 1) CHECK(p_power(Derivation(mono(p, v, k))).is_zero());
            }
        }
    }
    CHECK_THROWS_AS(p_power(Derivation(FpPoly::x(Prime(3)))), std::logic_error);
}

TEST_CASE("p_power of (x + x^2)d in p = 5 against 5-fold composition") {
    const Prime p(5);
    for (auto v : kVariants) {
        const TruncPoly f(p, v, {0, 1, 1});
        const Derivation pp = p_power(Derivation(f));
        const FpScalar c = c_b(f);
        CHECK(c.value() == 1);
        for (std::uint32_t k = 0; k < p.value(); ++k) {
            const TruncPoly g = mono(p, v, k);
            REQUIRE(iterate_action(f, g, 5) == pp.apply(g));
            REQUIRE(pp.apply(g) == (f * c) * derive(g));
        }
    }
}

TEST_CASE("c_b and c_c") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (auto v : kVariants) {
            CHECK(c_b(mono(p, v, 1)).value() == 1);
            CHECK(c_b(mono(p, v, 0)).value() == 0);
            CHECK(c_c(mono(p, v, 1)).value() == 1);
            CHECK(c_c(mono(p, v, 0)).value() == 0);
        }
    }
    CHECK(c_b(mono(Prime(3), ModulusVariant::XP, 2)).value() == 0);
    CHECK(c_b(mono(Prime(3), ModulusVariant::XP1, 2)).value() == 0);

    // Reference values for 1 + 2x + x^3 + 3x^4 from an external CAS.
    const Prime five(5);
    CHECK(c_b(TruncPoly(five, ModulusVariant::XP, {1, 2, 0, 1, 3})).value() == 2);
    CHECK(c_c(TruncPoly(five, ModulusVariant::XP, {1, 2, 0, 1, 3})).value() == 2);
    CHECK(c_b(TruncPoly(five, ModulusVariant::XP1, {1, 2, 0, 1, 3})).value() == 0);

    std::mt19937_64 rng(17);
    for (auto v : kVariants) {
        for (int i = 0; i < 200; ++i) {
            const auto f = TruncPoly::random(five, v, rng);
            REQUIRE(c_b(f) == c_c(f));
        }
    }
}

TEST_CASE("Theorem 1 exhaustively for p = 2, 3") {
    for (std::uint32_t q : {2U, 3U}) {
        for (auto v : kVariants) {
            for (const auto& f : all_elements(Prime(q), v)) {
                const Derivation d(f);
                REQUIRE(p_power(d) == d * c_b(f));
                REQUIRE(c_b(f) == c_c(f));
            }
        }
    }
}

TEST_CASE("C(f) is transported by the isomorphism x <-> x - 1") {
    for (std::uint32_t q : {2U, 3U, 5U}) {
        for (const auto& f : all_elements(Prime(q), ModulusVariant::XP)) REQUIRE(c_b(iso_shift(f)) == c_b(f));
    }
}

TEST_CASE("restricted axioms: scaling and centralizer") {
    std::mt19937_64 rng(23);
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (auto v : kVariants) {
            for (int i = 0; i < 40; ++i) {
                const Derivation g(TruncPoly::random(p, v, rng));
                for (std::uint32_t lambda = 0; lambda < q; ++lambda) REQUIRE(check_scaling(g, FpScalar(lambda, p)));
                REQUIRE(check_centralizer(g));
            }
        }
    }
}

TEST_CASE("jacobson_s") {
    const Prime two(2);
    const Derivation g(mono(two, ModulusVariant::XP, 0));
    const Derivation h(mono(two, ModulusVariant::XP, 1));

    SUBCASE("zero second argument") {
        const Prime p(5);
        const Derivation a(TruncPoly(p, ModulusVariant::XP, {1, 2, 3}));
        for (const auto& s : jacobson_s(a, Derivation::zero_like(a))) CHECK(s.is_zero());
        CHECK(check_restricted_sum(a, Derivation::zero_like(a)));
    }

    SUBCASE("p = 2, g = d, h = x d") {
        // (g+h)^[2] - g^[2] - h^[2] computed by p_power alone.
        const Derivation target = p_power(g + h) - p_power(g) - p_power(h);
        CHECK(target == g);
        const auto s = jacobson_s(g, h);
        REQUIRE(s.size() == 1);
        CHECK(s[0] == target);
        CHECK(check_restricted_sum(g, h));
    }

    SUBCASE("applying ad^{p-1} to h loses the bracket term") {
        const auto s = jacobson_s(g, h, JacobsonConvention::ApplyToH);
        CHECK(s[0].is_zero());
        CHECK_FALSE(check_restricted_sum(g, h, JacobsonConvention::ApplyToH));
    }

    SUBCASE("random pairs") {
        std::mt19937_64 rng(31);
        for (std::uint32_t q : {3U, 5U}) {
            const Prime p(q);
            for (auto v : kVariants) {
                for (int i = 0; i < 100; ++i) {
                    const Derivation a(TruncPoly::random(p, v, rng));
                    const Derivation b(TruncPoly::random(p, v, rng));
                    REQUIRE(jacobson_s(a, b).size() == q - 1);
                    REQUIRE(check_restricted_sum(a, b));
                }
            }
        }
    }
}

TEST_CASE("check_ad_power") {
    for (std::uint32_t q : {2U, 3U, 5U, 7U}) {
        const Prime p(q);
        for (auto v : kVariants) {
            CHECK(check_ad_power(Derivation(mono(p, v, 1))));
            CHECK(check_ad_power(Derivation(mono(p, v, 0))));
        }
    }
    for (auto v : kVariants) {
        for (const auto& f : all_elements(Prime(3), v)) REQUIRE(check_ad_power(Derivation(f)));
    }
    // ad(d) is nilpotent with (ad d)^p = 0 on W.
    const Prime p(5);
    const FpMatrix ad_d = ad_matrix(Derivation(mono(p, ModulusVariant::XP, 0)));
    CHECK(matrix_power(ad_d, 5) == FpMatrix(p, 5));
}

TEST_CASE("normal_form_p_power") {
    SUBCASE("f = 1 gives a pure d^p") {
        for (std::uint32_t q : {2U, 3U, 5U}) {
            const Prime p(q);
            const DiffOperator op = normal_form_p_power(FpPoly::constant(FpScalar::one(p)));
            CHECK(op.order() == q);
            CHECK(op.coeff(q) == FpPoly::constant(FpScalar::one(p)));
            for (std::uint32_t k = 0; k < q; ++k) CHECK(op.coeff(k).is_zero());
        }
    }
    SUBCASE("f = x, p = 3") {
        const Prime p(3);
        const DiffOperator op = normal_form_p_power(FpPoly::x(p));
        CHECK(op.coeff(1) == FpPoly::x(p));
        CHECK(op.coeff(2).is_zero());
        CHECK(op.coeff(3) == FpPoly::monomial(p, 1, 3));
        // Operator composition oracle on monomials x^n.
        for (std::int64_t n = 0; n < 12; ++n) {
            oracle::Coeffs g(static_cast<std::size_t>(n) + 1, 0);
            g.back() = 1;
            oracle::Coeffs direct = g;
            for (int i = 0; i < 3; ++i) direct = oracle::multiply({0, 1}, oracle::derivative(direct, 3), 3);
            const FpPoly applied = op.apply(FpPoly(p, g));
            REQUIRE(oracle::Coeffs(applied.raw().begin(), applied.raw().end()) == direct);
        }
    }
    SUBCASE("random f, p = 5") {
        const Prime p(5);
        std::mt19937_64 rng(41);
        for (int i = 0; i < 50; ++i) {
            std::vector<std::int64_t> c(7);
            for (auto& x : c) x = static_cast<std::int64_t>(rng() % 5);
            const FpPoly f(p, c);
            const DiffOperator op = normal_form_p_power(f);
            for (std::uint32_t k = 2; k < 5; ++k) REQUIRE(op.coeff(k).is_zero());
            REQUIRE(op.coeff(5) == pow(f, 5));
            if (f.degree() < 5) {
                for (auto v : kVariants) {
                    const TruncPoly fa = TruncPoly::reduce(f, v);
                    REQUIRE(TruncPoly::reduce(op.coeff(1), v) == fa * c_b(fa));
                }
            }
        }
    }
}

TEST_CASE("g_series") {
    const Prime five(5);
    CHECK(g_series(FpPoly::x(five)) == FpPoly::constant(FpScalar::one(five)));
    CHECK(g_series(FpPoly::monomial(Prime(3), 1, 2)).is_zero());
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::int64_t> c(5);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % 5);
        const FpPoly g = g_series(FpPoly(five, c));
        for (std::size_t k = 0; k < g.raw().size(); ++k) {
            if (k % 5 != 0) REQUIRE(g.raw()[k] == 0);
        }
    }
}
