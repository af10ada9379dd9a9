#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wittcheck/arith.hpp"
#include "wittcheck/ring.hpp"

namespace wittcheck {

/// Where a derivation lives: W = Der A (finite, dimension p) or Der F_p[x].
enum class Realm { OverA, OverPolyRing };

/// The vector field f∂, acting by g |-> f·g'.
class Derivation {
public:
    explicit Derivation(TruncPoly f) : coeff_(std::move(f)) {}
    explicit Derivation(FpPoly f) : coeff_(std::move(f)) {}

    /// The zero derivation in the same realm (and variant) as `like`.
    static Derivation zero_like(const Derivation& like);
    /// x^k ∂ in W.
    static Derivation basis(Prime p, ModulusVariant v, std::size_t k);

    Realm realm() const noexcept;
    Prime prime() const noexcept;
    bool is_zero() const noexcept;

    /// Coefficient of ∂; throws std::logic_error if the realm does not match.
    const TruncPoly& coeff_a() const;
    const FpPoly& coeff_poly() const;

    TruncPoly apply(const TruncPoly& g) const;
    FpPoly apply(const FpPoly& g) const;

    Derivation operator+(const Derivation& rhs) const;
    Derivation operator-(const Derivation& rhs) const;
    Derivation operator*(FpScalar c) const;
    Derivation& operator+=(const Derivation& rhs) { return *this = *this + rhs; }

    friend bool operator==(const Derivation&, const Derivation&) = default;

    /// "x∂"-style rendering of the coefficient, used in reports.
    std::string to_string() const;

private:
    std::variant<TruncPoly, FpPoly> coeff_;
};

/// [f∂, g∂] = (f g' - g f')∂.
Derivation bracket(const Derivation& a, const Derivation& b);

/// g^[p]: the p-fold composition of the action of g on A, returned as a
/// derivation after checking that the composite really is one (operator
/// identity on the monomial basis plus Leibniz on fixed and random pairs).
/// Throws ViolationError if that check fails.
Derivation p_power(const Derivation& a);

/// ∂(f∂(...(f∂f)...)) with p-1 derivatives and p-1 factors of f.
template <class Elem>
Elem derivation_chain(const Elem& f) {
    const std::uint32_t p = f.prime().value();
    Elem h = derive(f);
    for (std::uint32_t step = 2; step < p; ++step) h = derive(f * h);
    return h;
}

/// C(f) as the constant value of derivation_chain(f) on A. Throws
/// ViolationError if the chain is not an element of F_p·1.
FpScalar c_b(const TruncPoly& f);
/// C(f) as -∂^{p-1}(f^{p-1}); same constancy check.
FpScalar c_c(const TruncPoly& f);

enum class JacobsonConvention {
    ApplyToG,  // coefficients of (ad(λg + h))^{p-1}(g)
    ApplyToH,  // coefficients of (ad(λg + h))^{p-1}(h)
};

std::string_view to_string(JacobsonConvention c) noexcept;
JacobsonConvention parse_convention(std::string_view text);

/// Polynomial in λ with derivation coefficients; entry k multiplies λ^k.
class LambdaDerivPoly {
public:
    explicit LambdaDerivPoly(Derivation constant_term) : coeffs_{std::move(constant_term)} {}

    const std::vector<Derivation>& coeffs() const noexcept { return coeffs_; }
    /// Zero derivation past the stored degree.
    Derivation coeff(std::size_t k) const;

    /// Applies ad(λ·g + h).
    LambdaDerivPoly apply_ad(const Derivation& g, const Derivation& h) const;

private:
    std::vector<Derivation> coeffs_;
};

/// s_1, ..., s_{p-1}: i^{-1} times the coefficient of λ^{i-1}.
std::vector<Derivation> jacobson_s(const Derivation& g, const Derivation& h,
                                   JacobsonConvention convention = JacobsonConvention::ApplyToG);

/// (g+h)^[p] == g^[p] + h^[p] + Σ s_i(g, h).
bool check_restricted_sum(const Derivation& g, const Derivation& h,
                          JacobsonConvention convention = JacobsonConvention::ApplyToG);

/// Square matrix over F_p, row-major.
class FpMatrix {
public:
    FpMatrix(Prime p, std::size_t n);
    static FpMatrix identity(Prime p, std::size_t n);

    Prime prime() const noexcept { return prime_; }
    std::size_t size() const noexcept { return n_; }
    std::uint32_t at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    void set(std::size_t row, std::size_t col, std::uint32_t v) { entries_[row * n_ + col] = v; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Prime prime_;
    std::size_t n_;
    std::vector<std::uint32_t> entries_;
};

FpMatrix matrix_power(const FpMatrix& m, std::uint32_t exponent);

/// Matrix of ad(g) on the basis x^k∂ (k = 0..p-1) of W; column k holds the
/// coordinates of [g, x^k∂].
FpMatrix ad_matrix(const Derivation& g);

/// ad(g^[p]) == (ad g)^p and [g^[p], g] == 0.
bool check_ad_power(const Derivation& g);
/// (λg)^[p] == λ^p g^[p].
bool check_scaling(const Derivation& g, FpScalar lambda);
/// [g^[p], g] == 0.
bool check_centralizer(const Derivation& g);

/// Σ_k F_k ∂^k over F_p[x] with all ∂'s to the right; entry k of the
/// coefficient vector multiplies ∂^k.
class DiffOperator {
public:
    explicit DiffOperator(Prime p) : prime_(p) {}
    DiffOperator(Prime p, std::vector<FpPoly> coeffs);

    Prime prime() const noexcept { return prime_; }
    /// Highest k with F_k != 0 (0 for the zero operator).
    std::size_t order() const noexcept;
    FpPoly coeff(std::size_t k) const;

    FpPoly apply(const FpPoly& g) const;
    /// (f∂) ∘ this, renormalised with the Leibniz rule.
    DiffOperator left_compose(const FpPoly& f) const;

    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

private:
    void strip();

    Prime prime_;
    std::vector<FpPoly> coeffs_;
};

/// (f∂)^p in normal form. Asserts F_2 = ... = F_{p-1} = 0, F_p = f^p and
/// F_1 = f·derivation_chain(f); throws ViolationError otherwise.
DiffOperator normal_form_p_power(const FpPoly& f);

/// The word (∂f)^{p-1} evaluated over F_p[x]; asserts the result has zero
/// derivative.
FpPoly g_series(const FpPoly& f);

}  // namespace wittcheck
