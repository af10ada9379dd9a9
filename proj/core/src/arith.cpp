#include "wittcheck/arith.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace wittcheck {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Prime::Prime(std::uint32_t p, std::uint32_t max_prime) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (p > max_prime) {
        throw std::out_of_range("prime " + std::to_string(p) + " exceeds configured maximum " +
                                std::to_string(max_prime));
    }
}

FpScalar::FpScalar(std::int64_t value, Prime p) : value_(0), prime_(p) {
    const auto m = static_cast<std::int64_t>(p.value());
    value %= m;
    if (value < 0) value += m;
    value_ = static_cast<std::uint32_t>(value);
}

FpScalar FpScalar::from_big(const BigInt& value, Prime p) {
    BigInt r = value % p.value();
    if (r < 0) r += p.value();
    return FpScalar(static_cast<std::int64_t>(r), p);
}

void FpScalar::require_same_modulus(FpScalar rhs) const {
    if (prime_ != rhs.prime_) {
        throw std::invalid_argument("modulus mismatch: " + std::to_string(modulus()) + " vs " +
                                    std::to_string(rhs.modulus()));
    }
}

FpScalar FpScalar::operator+(FpScalar rhs) const {
    require_same_modulus(rhs);
    return FpScalar(static_cast<std::int64_t>(value_) + rhs.value_, prime_);
}

FpScalar FpScalar::operator-(FpScalar rhs) const {
    require_same_modulus(rhs);
    return FpScalar(static_cast<std::int64_t>(value_) - rhs.value_, prime_);
}

FpScalar FpScalar::operator*(FpScalar rhs) const {
    require_same_modulus(rhs);
    return FpScalar(static_cast<std::int64_t>(value_) * rhs.value_, prime_);
}

FpScalar FpScalar::operator-() const { return FpScalar(-static_cast<std::int64_t>(value_), prime_); }

FpScalar FpScalar::pow(std::uint64_t exponent) const {
    FpScalar result = one(prime_);
    FpScalar base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, FpScalar a) { return os << a.value() << " mod " << a.modulus(); }

FpScalar inv_mod(FpScalar a) {
    if (a.is_zero()) throw std::domain_error("not invertible");
    // Extended Euclid on (a, p).
    std::int64_t r0 = a.modulus(), r1 = a.value();
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return FpScalar(s0, a.prime());
}

BigInt factorial(std::uint32_t n) {
    BigInt r = 1;
    for (std::uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

FpScalar factorial_mod(std::int64_t n, Prime p) {
    if (n < 0) throw std::invalid_argument("factorial_mod: negative argument");
    return FpScalar::from_big(factorial(static_cast<std::uint32_t>(n)), p);
}

FpScalar binom_mod(std::int64_t n, std::int64_t k, Prime p) {
    if (n < 0 || k < 0 || k > n) {
        throw std::out_of_range("binom_mod: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
    return FpScalar::from_big(binomial(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)), p);
}

}  // namespace wittcheck
