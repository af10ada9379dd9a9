#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wittcheck/arith.hpp"
#include "wittcheck/sympoly.hpp"

namespace wittcheck {

/// Weakly decreasing sequence of positive parts j_1 >= ... >= j_m > 0.
class YoungDiagram {
public:
    YoungDiagram() = default;
    /// Throws std::invalid_argument if parts are not weakly decreasing and positive.
    explicit YoungDiagram(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    /// N(J)
    std::uint32_t size() const noexcept { return size_; }
    /// m(J)
    std::size_t length() const noexcept { return parts_.size(); }
    /// n_k(J)
    std::size_t multiplicity(std::uint32_t k) const noexcept;

    /// Decrements part s, deleting it if it reaches zero. Requires
    /// j_s > j_{s+1} (with j_{m+1} = 0) so that the result stays a diagram.
    YoungDiagram remove_box(std::size_t s) const;

    /// "(2,1,1)"; the empty diagram is "()".
    std::string to_string() const;

    auto operator<=>(const YoungDiagram& rhs) const { return parts_ <=> rhs.parts_; }
    bool operator==(const YoungDiagram& rhs) const { return parts_ == rhs.parts_; }

private:
    std::vector<std::uint32_t> parts_;
    std::uint32_t size_ = 0;
};

/// All partitions of n, in ascending lexicographic order of the part vectors.
std::vector<YoungDiagram> partitions(std::uint32_t n);

/// Memoised evaluation of d; one table per sweep.
class DTable {
public:
    const BigInt& value(const YoungDiagram& j);
    std::size_t cached() const noexcept { return memo_.size(); }

private:
    std::map<std::vector<std::uint32_t>, BigInt> memo_;
};

/// d(J) via a fresh DTable.
BigInt d_value(const YoungDiagram& j);

/// d(J) ≡ 1 mod p for every J with N(J) = p - 1.
bool theorem4_check(Prime p);
/// d(J) ≡ 1 mod p for every J with N(J) = p - 2; requires p >= 3.
bool exercise_check(Prime p);

/// Polynomials in u_1, ..., u_{p-1}.
using UPoly = MVPoly;

inline constexpr std::size_t kDefaultTermLimit = 10'000'000;

/// (∂f)^n for f = u_1 ⋯ u_{p-1}, ∂ = Σ ∂/∂u_i, via P_1 = ∂f and
/// P_k = ∂(f·P_{k-1}). Requires 1 <= n <= p-1; throws BoundsError if an
/// intermediate polynomial exceeds term_limit terms.
UPoly power_word_in_u(std::uint32_t n, Prime p, std::size_t term_limit = kDefaultTermLimit);
/// ∂^n(f^n) for the same f.
UPoly leibniz_power_in_u(std::uint32_t n, Prime p, std::size_t term_limit = kDefaultTermLimit);

/// Exponent vector (n - j_1, ..., n - j_m, n, ..., n) of length p - 1.
ExponentVector designated_exponents(const YoungDiagram& j, std::uint32_t n, Prime p);

/// For every J with N(J) = n and m(J) <= p-1, the designated coefficient of
/// power_word_in_u(n, p) equals d(J) over Z.
bool coeff_correspondence_check(std::uint32_t n, Prime p);

/// n!·C(n, j_1)⋯C(n, j_m); throws std::invalid_argument if j_1 > n.
BigInt multinomial_coeff(const YoungDiagram& j, std::uint32_t n);

}  // namespace wittcheck
