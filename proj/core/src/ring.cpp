#include "wittcheck/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wittcheck/error.hpp"

namespace wittcheck {

namespace {

std::uint32_t reduce_i64(std::int64_t v, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    v %= m;
    return static_cast<std::uint32_t>(v < 0 ? v + m : v);
}

std::vector<std::int64_t> widen(std::span<const std::uint32_t> c) { return {c.begin(), c.end()}; }

}  // namespace

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(Prime p, std::vector<std::int64_t> coeffs) : prime_(p) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.push_back(reduce_i64(c, p.value()));
    strip();
}

FpPoly::FpPoly(Prime p, std::span<const FpScalar> coeffs) : prime_(p) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) {
        if (c.prime() != p) throw std::invalid_argument("FpPoly: coefficient modulus mismatch");
        coeffs_.push_back(c.value());
    }
    strip();
}

FpPoly FpPoly::constant(FpScalar c) { return FpPoly(c.prime(), std::vector<std::int64_t>{c.value()}); }

FpPoly FpPoly::monomial(Prime p, std::int64_t coeff, std::size_t degree) {
    std::vector<std::int64_t> c(degree + 1, 0);
    c[degree] = coeff;
    return FpPoly(p, std::move(c));
}

void FpPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void FpPoly::require_same_prime(const FpPoly& rhs) const {
    if (prime_ != rhs.prime_) throw std::invalid_argument("FpPoly: prime mismatch");
}

FpScalar FpPoly::coeff(std::size_t k) const {
    return FpScalar(k < coeffs_.size() ? coeffs_[k] : 0, prime_);
}

FpScalar FpPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return FpScalar(coeffs_.back(), prime_);
}

FpPoly FpPoly::operator+(const FpPoly& rhs) const {
    require_same_prime(rhs);
    const std::uint32_t p = prime_.value();
    std::vector<std::int64_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] = (out[i] + rhs.coeffs_[i]) % p;
    return FpPoly(prime_, std::move(out));
}

FpPoly FpPoly::operator-(const FpPoly& rhs) const { return *this + (-rhs); }

FpPoly FpPoly::operator-() const {
    std::vector<std::int64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -static_cast<std::int64_t>(coeffs_[i]);
    return FpPoly(prime_, std::move(out));
}

FpPoly FpPoly::operator*(const FpPoly& rhs) const {
    require_same_prime(rhs);
    if (is_zero() || rhs.is_zero()) return FpPoly(prime_);
    const std::uint64_t p = prime_.value();
    std::vector<std::uint64_t> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * rhs.coeffs_[j]) % p;
        }
    }
    return FpPoly(prime_, std::vector<std::int64_t>(acc.begin(), acc.end()));
}

FpPoly FpPoly::operator*(FpScalar c) const {
    if (c.prime() != prime_) throw std::invalid_argument("FpPoly: scalar modulus mismatch");
    std::vector<std::int64_t> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = static_cast<std::int64_t>(coeffs_[i]) * c.value();
    return FpPoly(prime_, std::move(out));
}

FpScalar FpPoly::evaluate(FpScalar at) const {
    FpScalar acc = FpScalar::zero(prime_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + FpScalar(*it, prime_);
    return acc;
}

FpPoly derive(const FpPoly& a) {
    const auto c = a.raw();
    if (c.size() <= 1) return FpPoly(a.prime());
    std::vector<std::int64_t> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = static_cast<std::int64_t>(k) * c[k];
    return FpPoly(a.prime(), std::move(out));
}

FpPoly pow(const FpPoly& a, std::uint32_t exponent) {
    FpPoly result = FpPoly::constant(FpScalar::one(a.prime()));
    FpPoly base = a;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Prime p = a.prime();
    FpPoly quotient(p);
    FpPoly rest = a;
    const FpScalar lead_inv = inv_mod(b.leading());
    while (!rest.is_zero() && rest.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(rest.degree() - b.degree());
        const FpScalar c = rest.leading() * lead_inv;
        const FpPoly term = FpPoly::monomial(p, c.value(), shift);
        quotient += term;
        rest -= term * b;
    }
    return {quotient, rest};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0 * inv_mod(r0.leading());
}

FpPoly translate(const FpPoly& f, FpScalar shift) {
    // Horner in the substituted variable: f(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) ...) + c_0.
    const Prime p = f.prime();
    const FpPoly lin(p, std::vector<std::int64_t>{shift.value(), 1});
    FpPoly acc(p);
    const auto c = f.raw();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + FpPoly::constant(FpScalar(*it, p));
    }
    return acc;
}

FpPoly parse_poly(std::string_view text, Prime p) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    if (text.empty()) throw ParseError("empty polynomial", 0);
    while (true) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::int64_t v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first) throw ParseError("expected integer coefficient", pos);
        coeffs.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return FpPoly(p, std::move(coeffs));
}

std::string format_coeffs(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < f.raw().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(f.raw()[k]);
    }
    return out;
}

std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto c = f.raw();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c[k] != 1 || k == 0) os << c[k];
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------- variants

std::string_view to_string(ModulusVariant v) noexcept { return v == ModulusVariant::XP ? "xp" : "xp1"; }

ModulusVariant parse_variant(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "xp") return ModulusVariant::XP;
    if (lower == "xp1") return ModulusVariant::XP1;
    throw std::invalid_argument("unknown modulus variant '" + std::string(text) + "' (expected xp or xp1)");
}

FpPoly modulus_poly(Prime p, ModulusVariant v) {
    std::vector<std::int64_t> c(p.value() + 1, 0);
    c[p.value()] = 1;
    if (v == ModulusVariant::XP1) c[0] = -1;
    return FpPoly(p, std::move(c));
}

// ---------------------------------------------------------------- TruncPoly

TruncPoly::TruncPoly(Prime p, ModulusVariant v) : prime_(p), variant_(v), coeffs_(p.value(), 0) {}

TruncPoly::TruncPoly(Prime p, ModulusVariant v, std::vector<std::int64_t> coeffs)
    : TruncPoly(reduce(FpPoly(p, std::move(coeffs)), v)) {}

TruncPoly TruncPoly::reduce(const FpPoly& f, ModulusVariant v) {
    const Prime p = f.prime();
    const std::uint32_t n = p.value();
    const std::uint32_t wrap = v == ModulusVariant::XP1 ? 1 : 0;
    TruncPoly out(p, v);
    const auto c = f.raw();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < n) {
            out.coeffs_[k] = (out.coeffs_[k] + c[k]) % n;
        } else if (wrap) {
            out.coeffs_[k % n] = (out.coeffs_[k % n] + c[k]) % n;
        }
    }
    return out;
}

TruncPoly TruncPoly::constant(FpScalar c, ModulusVariant v) { return reduce(FpPoly::constant(c), v); }

TruncPoly TruncPoly::monomial(Prime p, ModulusVariant v, std::size_t degree, std::int64_t coeff) {
    return reduce(FpPoly::monomial(p, coeff, degree), v);
}

TruncPoly TruncPoly::from_index(Prime p, ModulusVariant v, std::uint64_t index) {
    TruncPoly out(p, v);
    for (auto& c : out.coeffs_) {
        c = static_cast<std::uint32_t>(index % p.value());
        index /= p.value();
    }
    if (index != 0) throw std::out_of_range("TruncPoly::from_index: index >= p^p");
    return out;
}

TruncPoly TruncPoly::random(Prime p, ModulusVariant v, std::mt19937_64& rng) {
    TruncPoly out(p, v);
    for (auto& c : out.coeffs_) c = static_cast<std::uint32_t>(rng() % p.value());
    return out;
}

FpScalar TruncPoly::coeff(std::size_t k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("TruncPoly::coeff: degree >= p");
    return FpScalar(coeffs_[k], prime_);
}

bool TruncPoly::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool TruncPoly::is_constant() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

FpPoly TruncPoly::lift() const { return FpPoly(prime_, widen(coeffs_)); }

void TruncPoly::require_compatible(const TruncPoly& rhs) const {
    if (prime_ != rhs.prime_) throw std::invalid_argument("TruncPoly: prime mismatch");
    if (variant_ != rhs.variant_) throw std::invalid_argument("TruncPoly: modulus variant mismatch");
}

TruncPoly TruncPoly::operator+(const TruncPoly& rhs) const {
    require_compatible(rhs);
    TruncPoly out = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = (coeffs_[k] + rhs.coeffs_[k]) % prime_.value();
    return out;
}

TruncPoly TruncPoly::operator-() const {
    TruncPoly out = *this;
    for (auto& c : out.coeffs_) c = c == 0 ? 0 : prime_.value() - c;
    return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly& rhs) const { return *this + (-rhs); }

TruncPoly TruncPoly::operator*(const TruncPoly& rhs) const {
    require_compatible(rhs);
    return reduce(lift() * rhs.lift(), variant_);
}

TruncPoly TruncPoly::operator*(FpScalar c) const {
    if (c.prime() != prime_) throw std::invalid_argument("TruncPoly: scalar modulus mismatch");
    TruncPoly out = *this;
    for (auto& v : out.coeffs_) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c.value() % prime_.value());
    return out;
}

TruncPoly trunc_mul(const TruncPoly& a, const TruncPoly& b) { return a * b; }

TruncPoly derive(const TruncPoly& a) { return TruncPoly::reduce(derive(a.lift()), a.variant()); }

TruncPoly pow(const TruncPoly& a, std::uint32_t exponent) {
    TruncPoly result = TruncPoly::constant(FpScalar::one(a.prime()), a.variant());
    for (std::uint32_t i = 0; i < exponent; ++i) result *= a;
    return result;
}

TruncPoly iso_shift(const TruncPoly& a) {
    if (a.variant() != ModulusVariant::XP) throw std::invalid_argument("iso_shift expects an element of F_p[x]/(x^p)");
    return TruncPoly::reduce(translate(a.lift(), FpScalar(-1, a.prime())), ModulusVariant::XP1);
}

TruncPoly iso_unshift(const TruncPoly& a) {
    if (a.variant() != ModulusVariant::XP1) {
        throw std::invalid_argument("iso_unshift expects an element of F_p[x]/(x^p - 1)");
    }
    return TruncPoly::reduce(translate(a.lift(), FpScalar(1, a.prime())), ModulusVariant::XP);
}

bool is_zero_divisor(const TruncPoly& a) {
    const FpPoly g = gcd(a.lift(), modulus_poly(a.prime(), a.variant()));
    return g.degree() != 0;
}

bool is_unit_shortcut(const TruncPoly& a) {
    if (a.variant() == ModulusVariant::XP) return !a.coeff(0).is_zero();
    return !a.lift().evaluate(FpScalar::one(a.prime())).is_zero();
}

std::string format_coeffs(const TruncPoly& a) { return format_coeffs(a.lift()); }

}  // namespace wittcheck
