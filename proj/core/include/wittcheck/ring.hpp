#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wittcheck/arith.hpp"

namespace wittcheck {

/// Dense polynomial in F_p[x], low degree first. Trailing zeros are always
/// stripped; the zero polynomial has no coefficients.
class FpPoly {
public:
    explicit FpPoly(Prime p) : prime_(p) {}
    FpPoly(Prime p, std::vector<std::int64_t> coeffs);
    FpPoly(Prime p, std::span<const FpScalar> coeffs);

    static FpPoly constant(FpScalar c);
    static FpPoly monomial(Prime p, std::int64_t coeff, std::size_t degree);
    static FpPoly x(Prime p) { return monomial(p, 1, 1); }

    Prime prime() const noexcept { return prime_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    FpScalar coeff(std::size_t k) const;
    FpScalar leading() const;
    std::span<const std::uint32_t> raw() const noexcept { return coeffs_; }

    FpPoly operator+(const FpPoly& rhs) const;
    FpPoly operator-(const FpPoly& rhs) const;
    FpPoly operator*(const FpPoly& rhs) const;
    FpPoly operator*(FpScalar c) const;
    FpPoly operator-() const;
    FpPoly& operator+=(const FpPoly& rhs) { return *this = *this + rhs; }
    FpPoly& operator-=(const FpPoly& rhs) { return *this = *this - rhs; }
    FpPoly& operator*=(const FpPoly& rhs) { return *this = *this * rhs; }

    FpScalar evaluate(FpScalar at) const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

private:
    void strip();
    void require_same_prime(const FpPoly& rhs) const;

    Prime prime_;
    std::vector<std::uint32_t> coeffs_;
};

FpPoly derive(const FpPoly& a);
FpPoly pow(const FpPoly& a, std::uint32_t exponent);
/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero when both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// f(x + shift)
FpPoly translate(const FpPoly& f, FpScalar shift);

/// Parses "1,2,0,1,3" (low degree first) into 1 + 2x + x^3 + 3x^4.
FpPoly parse_poly(std::string_view text, Prime p);
/// Inverse of parse_poly; the zero polynomial prints as "0".
std::string format_coeffs(const FpPoly& f);
/// Human readable form, e.g. "3x^4 + x^3 + 2x + 1".
std::string to_string(const FpPoly& f);

enum class ModulusVariant { XP, XP1 };

std::string_view to_string(ModulusVariant v) noexcept;
/// Accepts "xp" / "xp1" (case-insensitive).
ModulusVariant parse_variant(std::string_view text);

/// x^p - c for the variant's constant c.
FpPoly modulus_poly(Prime p, ModulusVariant v);

/// Element of A = F_p[x]/(x^p - c), c = 0 (XP) or c = 1 (XP1). Always holds
/// exactly p coefficients.
class TruncPoly {
public:
    TruncPoly(Prime p, ModulusVariant v);
    TruncPoly(Prime p, ModulusVariant v, std::vector<std::int64_t> coeffs);

    /// Reduces an arbitrary polynomial by x^p -> c.
    static TruncPoly reduce(const FpPoly& f, ModulusVariant v);
    static TruncPoly constant(FpScalar c, ModulusVariant v);
    static TruncPoly monomial(Prime p, ModulusVariant v, std::size_t degree, std::int64_t coeff = 1);
    /// The index-th element in base-p digit order; index < p^p.
    static TruncPoly from_index(Prime p, ModulusVariant v, std::uint64_t index);
    static TruncPoly random(Prime p, ModulusVariant v, std::mt19937_64& rng);

    Prime prime() const noexcept { return prime_; }
    ModulusVariant variant() const noexcept { return variant_; }
    FpScalar coeff(std::size_t k) const;
    std::span<const std::uint32_t> raw() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;
    bool is_constant() const noexcept;
    FpPoly lift() const;

    TruncPoly operator+(const TruncPoly& rhs) const;
    TruncPoly operator-(const TruncPoly& rhs) const;
    TruncPoly operator*(const TruncPoly& rhs) const;
    TruncPoly operator*(FpScalar c) const;
    TruncPoly operator-() const;
    TruncPoly& operator+=(const TruncPoly& rhs) { return *this = *this + rhs; }
    TruncPoly& operator-=(const TruncPoly& rhs) { return *this = *this - rhs; }
    TruncPoly& operator*=(const TruncPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

private:
    void require_compatible(const TruncPoly& rhs) const;

    Prime prime_;
    ModulusVariant variant_;
    std::vector<std::uint32_t> coeffs_;
};

TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b);
/// Formal derivative; well defined on A because d/dx(x^p - c) = 0.
TruncPoly derive(const TruncPoly& a);
TruncPoly pow(const TruncPoly& a, std::uint32_t exponent);

/// The ring isomorphism F_p[x]/(x^p) -> F_p[x]/(x^p - 1), f(x) |-> f(x - 1).
TruncPoly iso_shift(const TruncPoly& a);
/// Inverse direction, f(x) |-> f(x + 1).
TruncPoly iso_unshift(const TruncPoly& a);

bool is_zero_divisor(const TruncPoly& a);
/// Variant-specific unit test: nonzero constant term (XP) or a(1) != 0 (XP1).
bool is_unit_shortcut(const TruncPoly& a);

std::string format_coeffs(const TruncPoly& a);

}  // namespace wittcheck
