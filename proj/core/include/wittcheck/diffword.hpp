#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wittcheck/arith.hpp"
#include "wittcheck/ring.hpp"

namespace wittcheck {

/// f^{(k_1)} ... f^{(k_m)}, stored as the ascending multiset of orders.
class DiffMonomial {
public:
    DiffMonomial() = default;
    explicit DiffMonomial(std::vector<std::uint32_t> orders);

    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    std::size_t degree() const noexcept { return orders_.size(); }
    std::uint32_t total_order() const noexcept;

    /// Multiplies by one more undifferentiated f.
    DiffMonomial times_f() const;
    /// Replaces one factor of order `from` by order `from + 1`.
    DiffMonomial raise(std::uint32_t from) const;

    auto operator<=>(const DiffMonomial&) const = default;

private:
    std::vector<std::uint32_t> orders_;
};

/// Integer combination of differential monomials; zero coefficients are never stored.
class DiffPoly {
public:
    using Terms = std::map<DiffMonomial, BigInt>;

    DiffPoly() = default;
    static DiffPoly single(DiffMonomial m, BigInt coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(const DiffMonomial& m) const;

    void add_term(const DiffMonomial& m, const BigInt& c);

    DiffPoly operator+(const DiffPoly& rhs) const;
    DiffPoly operator-(const DiffPoly& rhs) const;
    DiffPoly operator*(const BigInt& c) const;

    /// True iff every coefficient is divisible by p.
    bool vanishes_mod(Prime p) const;

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    Terms terms_;
};

/// Formal total derivative (Leibniz over the factors).
DiffPoly derive(const DiffPoly& a);
DiffPoly times_f(const DiffPoly& a);

enum class Letter : char { D = 'D', F = 'F' };

/// A word over {D, F} that ends with F. D stands for ∂, F for
/// multiplication by f; operators act right to left.
class DiffWord {
public:
    /// Throws ParseError on an empty word, a foreign letter, or a word that
    /// does not end with F.
    static DiffWord parse(std::string_view text);
    static DiffWord power(std::uint32_t n);     // (DF)^n
    static DiffWord leibniz(std::uint32_t n);   // D^n F^n

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::string to_string() const;

private:
    explicit DiffWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    std::vector<Letter> letters_;
};

DiffPoly expand_word(const DiffWord& word);
DiffPoly expand_word(std::string_view word);

/// (∂f)^n
DiffPoly power_word(std::uint32_t n);
/// ∂^n(f^n)
DiffPoly leibniz_power(std::uint32_t n);

/// power_word(p-1) + leibniz_power(p-1) ≡ 0 coefficientwise mod p.
bool theorem2_check(Prime p);

/// Orders (k_1, ..., k_m) of distinguishable symbols f_1, ..., f_m.
class MultiDiffMonomial {
public:
    explicit MultiDiffMonomial(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {}
    const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
    auto operator<=>(const MultiDiffMonomial&) const = default;

private:
    std::vector<std::uint32_t> orders_;
};

class MultiDiffPoly {
public:
    using Terms = std::map<MultiDiffMonomial, BigInt>;

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt coeff(const MultiDiffMonomial& m) const;
    void add_term(const MultiDiffMonomial& m, const BigInt& c);

    /// Substitutes f_i -> f_{perm[i]} (0-based).
    MultiDiffPoly permute_symbols(const std::vector<std::uint32_t>& perm) const;
    /// Identifies every f_i with a single f.
    DiffPoly merge_symbols() const;

    friend bool operator==(const MultiDiffPoly&, const MultiDiffPoly&) = default;

private:
    Terms terms_;
};

/// Expansion of ∂f_m ∂f_{m-1} ... ∂f_1.
MultiDiffPoly expand_multi(std::uint32_t m);

/// Substitutes a concrete polynomial for f.
FpPoly evaluate(const DiffPoly& dp, const FpPoly& f);

/// "(f')^4 + 11f(f')^2f'' + ..." with monomials listed from the highest
/// order vector down, as in hand-written expansions.
std::string format_expansion(const DiffPoly& dp);
/// [{"orders": [...], "coeff": "<decimal>"}, ...] in ascending key order.
nlohmann::json to_json(const DiffPoly& dp);

}  // namespace wittcheck
