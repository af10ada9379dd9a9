#include "wittcheck/witt.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "wittcheck/error.hpp"

namespace wittcheck {

namespace {

nlohmann::json describe(const TruncPoly& f) {
    return {{"poly", format_coeffs(f)}, {"prime", f.prime().value()}, {"modulus", std::string(to_string(f.variant()))}};
}

nlohmann::json describe(const FpPoly& f) { return {{"poly", format_coeffs(f)}, {"prime", f.prime().value()}}; }

template <class T>
const T& same_realm(const std::variant<TruncPoly, FpPoly>& other) {
    if (!std::holds_alternative<T>(other)) throw std::invalid_argument("derivations live in different realms");
    return std::get<T>(other);
}

// Images of x^0, ..., x^{p-1} under the p-fold composite of a's action on A.
std::vector<TruncPoly> composite_images(const Derivation& a) {
    const TruncPoly& f = a.coeff_a();
    const Prime p = f.prime();
    std::vector<TruncPoly> images;
    images.reserve(p.value());
    for (std::uint32_t k = 0; k < p.value(); ++k) {
        TruncPoly g = TruncPoly::monomial(p, f.variant(), k);
        for (std::uint32_t step = 0; step < p.value(); ++step) g = a.apply(g);
        images.push_back(std::move(g));
    }
    return images;
}

TruncPoly apply_linear(const std::vector<TruncPoly>& images, const TruncPoly& g) {
    TruncPoly out(g.prime(), g.variant());
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (!g.coeff(k).is_zero()) out += images[k] * g.coeff(k);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Derivation

Derivation Derivation::zero_like(const Derivation& like) {
    if (like.realm() == Realm::OverA) {
        const auto& f = like.coeff_a();
        return Derivation(TruncPoly(f.prime(), f.variant()));
    }
    return Derivation(FpPoly(like.prime()));
}

Derivation Derivation::basis(Prime p, ModulusVariant v, std::size_t k) {
    return Derivation(TruncPoly::monomial(p, v, k));
}

Realm Derivation::realm() const noexcept {
    return std::holds_alternative<TruncPoly>(coeff_) ? Realm::OverA : Realm::OverPolyRing;
}

Prime Derivation::prime() const noexcept {
    return std::visit([](const auto& f) { return f.prime(); }, coeff_);
}

bool Derivation::is_zero() const noexcept {
    return std::visit([](const auto& f) { return f.is_zero(); }, coeff_);
}

const TruncPoly& Derivation::coeff_a() const {
    if (realm() != Realm::OverA) throw std::logic_error("derivation is not an element of Der A");
    return std::get<TruncPoly>(coeff_);
}

const FpPoly& Derivation::coeff_poly() const {
    if (realm() != Realm::OverPolyRing) throw std::logic_error("derivation is not an element of Der F_p[x]");
    return std::get<FpPoly>(coeff_);
}

TruncPoly Derivation::apply(const TruncPoly& g) const { return coeff_a() * derive(g); }

FpPoly Derivation::apply(const FpPoly& g) const { return coeff_poly() * derive(g); }

Derivation Derivation::operator+(const Derivation& rhs) const {
    return std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            return Derivation(f + same_realm<T>(rhs.coeff_));
        },
        coeff_);
}

Derivation Derivation::operator-(const Derivation& rhs) const {
    return std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            return Derivation(f - same_realm<T>(rhs.coeff_));
        },
        coeff_);
}

Derivation Derivation::operator*(FpScalar c) const {
    return std::visit([&](const auto& f) { return Derivation(f * c); }, coeff_);
}

std::string Derivation::to_string() const {
    if (realm() == Realm::OverA) {
        const auto& f = coeff_a();
        return "(" + wittcheck::to_string(f.lift()) + ")d in " + std::string(wittcheck::to_string(f.variant()));
    }
    return "(" + wittcheck::to_string(coeff_poly()) + ")d";
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    if (a.realm() != b.realm()) throw std::invalid_argument("bracket: derivations live in different realms");
    if (a.realm() == Realm::OverA) {
        const auto& f = a.coeff_a();
        const auto& g = b.coeff_a();
        return Derivation(f * derive(g) - g * derive(f));
    }
    const auto& f = a.coeff_poly();
    const auto& g = b.coeff_poly();
    return Derivation(f * derive(g) - g * derive(f));
}

// ---------------------------------------------------------------- p-th power

Derivation p_power(const Derivation& a) {
    const TruncPoly& f = a.coeff_a();
    const Prime p = f.prime();
    const ModulusVariant v = f.variant();
    const auto images = composite_images(a);

    // A is generated by x, so the value on x pins the candidate derivation.
    const TruncPoly value_on_x = images.at(1);
    const Derivation candidate(value_on_x);

    for (std::uint32_t k = 0; k < p.value(); ++k) {
        const TruncPoly xk = TruncPoly::monomial(p, v, k);
        if (images[k] != candidate.apply(xk)) {
            throw ViolationError("p-fold composite is not the derivation determined by its value on x",
                                 {{"input", describe(f)}, {"basis_degree", k}});
        }
    }

    auto leibniz_holds = [&](const TruncPoly& u, const TruncPoly& w) {
        return apply_linear(images, u * w) == u * apply_linear(images, w) + apply_linear(images, u) * w;
    };
    const TruncPoly x = TruncPoly::monomial(p, v, 1);
    for (std::uint32_t k = 0; k < p.value(); ++k) {
        if (!leibniz_holds(x, TruncPoly::monomial(p, v, k))) {
            throw ViolationError("p-fold composite violates Leibniz", {{"input", describe(f)}, {"pair", {1, k}}});
        }
    }
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    for (auto c : f.raw()) seed = seed * 1315423911ULL + c;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 32; ++i) {
        const auto u = TruncPoly::random(p, v, rng);
        const auto w = TruncPoly::random(p, v, rng);
        if (!leibniz_holds(u, w)) {
            throw ViolationError("p-fold composite violates Leibniz",
                                 {{"input", describe(f)}, {"u", format_coeffs(u)}, {"w", format_coeffs(w)}});
        }
    }
    return candidate;
}

FpScalar c_b(const TruncPoly& f) {
    const TruncPoly chain = derivation_chain(f);
    if (!chain.is_constant()) {
        throw ViolationError("derivation chain is not constant",
                             {{"input", describe(f)}, {"chain", format_coeffs(chain)}});
    }
    return chain.coeff(0);
}

FpScalar c_c(const TruncPoly& f) {
    const std::uint32_t p = f.prime().value();
    TruncPoly h = pow(f, p - 1);
    for (std::uint32_t i = 0; i + 1 < p; ++i) h = derive(h);
    if (!h.is_constant()) {
        throw ViolationError("d^{p-1}(f^{p-1}) is not constant", {{"input", describe(f)}, {"value", format_coeffs(h)}});
    }
    return -h.coeff(0);
}

// ---------------------------------------------------------------- Jacobson terms

std::string_view to_string(JacobsonConvention c) noexcept {
    return c == JacobsonConvention::ApplyToG ? "apply-to-g" : "apply-to-h";
}

JacobsonConvention parse_convention(std::string_view text) {
    if (text == "g" || text == "apply-to-g") return JacobsonConvention::ApplyToG;
    if (text == "h" || text == "apply-to-h") return JacobsonConvention::ApplyToH;
    throw std::invalid_argument("unknown Jacobson convention '" + std::string(text) + "'");
}

Derivation LambdaDerivPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Derivation::zero_like(coeffs_.front());
}

LambdaDerivPoly LambdaDerivPoly::apply_ad(const Derivation& g, const Derivation& h) const {
    LambdaDerivPoly out(bracket(h, coeffs_.front()));
    out.coeffs_.reserve(coeffs_.size() + 1);
    for (std::size_t k = 1; k <= coeffs_.size(); ++k) {
        Derivation term = bracket(g, coeffs_[k - 1]);
        if (k < coeffs_.size()) term += bracket(h, coeffs_[k]);
        out.coeffs_.push_back(std::move(term));
    }
    return out;
}

std::vector<Derivation> jacobson_s(const Derivation& g, const Derivation& h, JacobsonConvention convention) {
    if (g.realm() != Realm::OverA || h.realm() != Realm::OverA) {
        throw std::invalid_argument("jacobson_s: expects elements of Der A");
    }
    const Prime p = g.prime();
    LambdaDerivPoly acc(convention == JacobsonConvention::ApplyToG ? g : h);
    for (std::uint32_t i = 0; i + 1 < p.value(); ++i) acc = acc.apply_ad(g, h);

    std::vector<Derivation> s;
    s.reserve(p.value() - 1);
    for (std::uint32_t i = 1; i < p.value(); ++i) {
        s.push_back(acc.coeff(i - 1) * inv_mod(FpScalar(i, p)));
    }
    return s;
}

bool check_restricted_sum(const Derivation& g, const Derivation& h, JacobsonConvention convention) {
    Derivation rhs = p_power(g) + p_power(h);
    for (const auto& s : jacobson_s(g, h, convention)) rhs += s;
    return p_power(g + h) == rhs;
}

// ---------------------------------------------------------------- ad matrices

FpMatrix::FpMatrix(Prime p, std::size_t n) : prime_(p), n_(n), entries_(n * n, 0) {}

FpMatrix FpMatrix::identity(Prime p, std::size_t n) {
    FpMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (n_ != rhs.n_ || prime_ != rhs.prime_) throw std::invalid_argument("FpMatrix: shape or prime mismatch");
    const std::uint64_t p = prime_.value();
    FpMatrix out(prime_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const std::uint64_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                out.entries_[i * n_ + j] = static_cast<std::uint32_t>((out.entries_[i * n_ + j] + a * rhs.at(k, j)) % p);
            }
        }
    }
    return out;
}

FpMatrix matrix_power(const FpMatrix& m, std::uint32_t exponent) {
    FpMatrix out = FpMatrix::identity(m.prime(), m.size());
    for (std::uint32_t i = 0; i < exponent; ++i) out = out * m;
    return out;
}

FpMatrix ad_matrix(const Derivation& g) {
    const TruncPoly& f = g.coeff_a();
    const Prime p = f.prime();
    FpMatrix m(p, p.value());
    for (std::uint32_t k = 0; k < p.value(); ++k) {
        const TruncPoly image = bracket(g, Derivation::basis(p, f.variant(), k)).coeff_a();
        for (std::uint32_t j = 0; j < p.value(); ++j) m.set(j, k, image.raw()[j]);
    }
    return m;
}

bool check_centralizer(const Derivation& g) { return bracket(p_power(g), g).is_zero(); }

bool check_ad_power(const Derivation& g) {
    const Derivation gp = p_power(g);
    if (ad_matrix(gp) != matrix_power(ad_matrix(g), g.prime().value())) return false;
    return bracket(gp, g).is_zero();
}

bool check_scaling(const Derivation& g, FpScalar lambda) {
    return p_power(g * lambda) == p_power(g) * lambda.pow(g.prime().value());
}

// ---------------------------------------------------------------- F_p[x] operators

DiffOperator::DiffOperator(Prime p, std::vector<FpPoly> coeffs) : prime_(p), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.prime() != p) throw std::invalid_argument("DiffOperator: coefficient prime mismatch");
    }
    strip();
}

void DiffOperator::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t DiffOperator::order() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

FpPoly DiffOperator::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FpPoly(prime_); }

FpPoly DiffOperator::apply(const FpPoly& g) const {
    FpPoly out(prime_);
    FpPoly dg = g;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out += coeffs_[k] * dg;
        dg = derive(dg);
    }
    return out;
}

DiffOperator DiffOperator::left_compose(const FpPoly& f) const {
    // f∂ ∘ F_k ∂^k = f F_k' ∂^k + f F_k ∂^{k+1}
    std::vector<FpPoly> out(coeffs_.size() + 1, FpPoly(prime_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] += f * derive(coeffs_[k]);
        out[k + 1] += f * coeffs_[k];
    }
    return DiffOperator(prime_, std::move(out));
}

DiffOperator normal_form_p_power(const FpPoly& f) {
    const Prime p = f.prime();
    const std::uint32_t n = p.value();
    DiffOperator op(p, {FpPoly(p), f});
    for (std::uint32_t i = 1; i < n; ++i) op = op.left_compose(f);

    const nlohmann::json input = describe(f);
    if (!op.coeff(0).is_zero()) throw ViolationError("(f d)^p has a zeroth-order term", {{"input", input}});
    for (std::uint32_t k = 2; k < n; ++k) {
        if (!op.coeff(k).is_zero()) {
            throw ViolationError("intermediate coefficient of (f d)^p is nonzero",
                                 {{"input", input}, {"k", k}, {"coeff", format_coeffs(op.coeff(k))}});
        }
    }
    if (op.coeff(n) != pow(f, n)) throw ViolationError("top coefficient of (f d)^p differs from f^p", {{"input", input}});
    if (op.coeff(1) != f * derivation_chain(f)) {
        throw ViolationError("first-order coefficient of (f d)^p differs from f times the chain", {{"input", input}});
    }
    return op;
}

FpPoly g_series(const FpPoly& f) {
    FpPoly g = derivation_chain(f);
    if (!derive(g).is_zero()) {
        throw ViolationError("(d f)^{p-1} has nonzero derivative", {{"input", describe(f)}, {"g", format_coeffs(g)}});
    }
    return g;
}

}  // namespace wittcheck
