#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittcheck/arith.hpp"

namespace wittcheck {

using ExponentVector = std::vector<std::uint32_t>;

std::uint32_t total_degree(const ExponentVector& e) noexcept;

/// Graded lexicographic order: total degree first, then lexicographic with
/// a larger leading exponent ranking higher.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Sparse polynomial in Z[t_1, ..., t_n] with a fixed arity n.
class MVPoly {
public:
    using Terms = std::map<ExponentVector, BigInt, GradedLexLess>;

    explicit MVPoly(std::size_t arity) : arity_(arity) {}
    static MVPoly constant(std::size_t arity, const BigInt& c);
    static MVPoly variable(std::size_t arity, std::size_t index);
    static MVPoly monomial(ExponentVector e, const BigInt& c = 1);
    /// t_1 + ... + t_n
    static MVPoly sum_of_variables(std::size_t arity);
    /// t_1^k + ... + t_n^k
    static MVPoly power_sum(std::size_t arity, std::uint32_t k);

    std::size_t arity() const noexcept { return arity_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(const ExponentVector& e) const;
    /// Greatest term in graded-lex order; throws on the zero polynomial.
    const Terms::value_type& leading_term() const;

    void add_term(const ExponentVector& e, const BigInt& c);

    MVPoly operator+(const MVPoly& rhs) const;
    MVPoly operator-(const MVPoly& rhs) const;
    MVPoly operator*(const MVPoly& rhs) const;
    MVPoly operator*(const BigInt& c) const;
    MVPoly& operator+=(const MVPoly& rhs);

    /// t_i -> t_{perm[i]} (0-based).
    MVPoly permute_variables(std::span<const std::uint32_t> perm) const;
    /// Σ_i ∂/∂t_i
    MVPoly total_derivative() const;

    bool is_symmetric() const;
    bool is_homogeneous(std::uint32_t degree) const;
    bool vanishes_mod(Prime p) const;
    bool congruent_mod(const MVPoly& rhs, Prime p) const { return (*this - rhs).vanishes_mod(p); }

    friend bool operator==(const MVPoly&, const MVPoly&) = default;

private:
    void require_arity(const MVPoly& rhs) const;

    std::size_t arity_;
    Terms terms_;
};

MVPoly pow(const MVPoly& a, std::uint32_t exponent);

/// t_{σ(1)} (t_{σ(1)} + t_{σ(2)}) ... (t_{σ(1)} + ... + t_{σ(m)}), σ given
/// 0-based. Throws std::invalid_argument if perm is not a permutation.
MVPoly product_chain(std::span<const std::uint32_t> perm);

struct PermutationSumLimits {
    static constexpr std::uint32_t kDefaultMaxPrime = 7;
    static constexpr std::uint32_t kLargeMaxPrime = 11;
};

/// Throws BoundsError when p exceeds the permutation-sum bound.
void require_permutation_bound(Prime p, bool allow_large);

/// Σ over S_{p-1} of product_chain. Work is split over `workers` threads
/// (0 = hardware concurrency); the result does not depend on the split.
/// Above the default bound (p = 11 with allow_large) the sum is evaluated by
/// lhs_sum_by_prefix_sets, since (p-1)! direct products are out of reach.
MVPoly lhs_sum(Prime p, bool allow_large = false, unsigned workers = 0);

/// The same permutation sum regrouped by prefix sets: the k-th factor of
/// product_chain(σ) only depends on {σ(1), ..., σ(k)}, so with
/// G(∅) = 1 and G(B) = S(B)·Σ_{b∈B} G(B∖{b}) the sum equals G({1..p-1}).
MVPoly lhs_sum_by_prefix_sets(Prime p);
/// (t_1 + ... + t_{p-1})^{p-1}
MVPoly rhs_power(Prime p);

bool theorem3_check(Prime p, bool allow_large = false);

/// lhs_sum(p)·(t_1 + ... + t_{p-1}) ≡ t_1^p + ... + t_{p-1}^p and
/// t_1^p + ... + t_{p-1}^p ≡ (t_1 + ... + t_{p-1})^p, both mod p.
bool precancel_check(Prime p, bool allow_large = false);
/// Same, reusing an already computed lhs_sum(p).
bool precancel_check(const MVPoly& lhs, Prime p);

/// Derives the congruence of lhs_sum and rhs_power from the pre-cancellation
/// form: divides lhs·S - S^p exactly by S over Z and checks that the quotient
/// vanishes mod p.
bool theorem3_via_cancellation(Prime p, bool allow_large = false);
bool theorem3_via_cancellation(const MVPoly& lhs, Prime p);

/// Exact quotient a / d over Z by leading-term elimination. Throws
/// std::domain_error naming the first monomial that blocks exact division.
MVPoly cancel_divide(const MVPoly& a, const MVPoly& d);

/// [{"exponents": [...], "coeff": "<decimal>"}, ...], leading term first.
nlohmann::json to_json(const MVPoly& poly);

}  // namespace wittcheck
