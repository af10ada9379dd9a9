#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include <boost/multiprecision/cpp_int.hpp>

namespace wittcheck {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n) noexcept;

/// A prime characteristic, checked by trial division on construction.
class Prime {
public:
    static constexpr std::uint32_t kDefaultMax = 101;

    explicit Prime(std::uint32_t p, std::uint32_t max_prime = kDefaultMax);

    std::uint32_t value() const noexcept { return p_; }

    friend bool operator==(Prime, Prime) noexcept = default;

private:
    std::uint32_t p_;
};

/// Residue modulo a runtime prime, always kept in canonical form [0, p).
class FpScalar {
public:
    FpScalar(std::int64_t value, Prime p);

    static FpScalar zero(Prime p) { return FpScalar(0, p); }
    static FpScalar one(Prime p) { return FpScalar(1, p); }
    static FpScalar from_big(const BigInt& value, Prime p);

    std::uint32_t value() const noexcept { return value_; }
    Prime prime() const noexcept { return prime_; }
    std::uint32_t modulus() const noexcept { return prime_.value(); }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar operator+(FpScalar rhs) const;
    FpScalar operator-(FpScalar rhs) const;
    FpScalar operator*(FpScalar rhs) const;
    FpScalar operator-() const;
    FpScalar& operator+=(FpScalar rhs) { return *this = *this + rhs; }
    FpScalar& operator-=(FpScalar rhs) { return *this = *this - rhs; }
    FpScalar& operator*=(FpScalar rhs) { return *this = *this * rhs; }

    FpScalar pow(std::uint64_t exponent) const;

    friend bool operator==(FpScalar, FpScalar) noexcept = default;

private:
    void require_same_modulus(FpScalar rhs) const;

    std::uint32_t value_;
    Prime prime_;
};

std::ostream& operator<<(std::ostream& os, FpScalar a);

/// Multiplicative inverse; throws std::domain_error("not invertible") on zero.
FpScalar inv_mod(FpScalar a);

BigInt factorial(std::uint32_t n);
BigInt binomial(std::uint32_t n, std::uint32_t k);

// n! and C(n, k) reduced mod p. Both go through BigInt so that no case
// (n >= p, p = 2, ...) needs special handling.
FpScalar factorial_mod(std::int64_t n, Prime p);
FpScalar binom_mod(std::int64_t n, std::int64_t k, Prime p);

}  // namespace wittcheck
