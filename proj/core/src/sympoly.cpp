#include "wittcheck/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wittcheck/error.hpp"

namespace wittcheck {

std::uint32_t total_degree(const ExponentVector& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {

std::string monomial_text(const ExponentVector& e) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << (any ? "*" : "") << "t" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

}  // namespace

// ---------------------------------------------------------------- MVPoly

MVPoly MVPoly::constant(std::size_t arity, const BigInt& c) {
    MVPoly out(arity);
    out.add_term(ExponentVector(arity, 0), c);
    return out;
}

MVPoly MVPoly::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw std::out_of_range("MVPoly::variable: index out of range");
    ExponentVector e(arity, 0);
    e[index] = 1;
    return monomial(std::move(e));
}

MVPoly MVPoly::monomial(ExponentVector e, const BigInt& c) {
    MVPoly out(e.size());
    out.add_term(e, c);
    return out;
}

MVPoly MVPoly::sum_of_variables(std::size_t arity) { return power_sum(arity, 1); }

MVPoly MVPoly::power_sum(std::size_t arity, std::uint32_t k) {
    MVPoly out(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        ExponentVector e(arity, 0);
        e[i] = k;
        out.add_term(e, 1);
    }
    return out;
}

BigInt MVPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

const MVPoly::Terms::value_type& MVPoly::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

void MVPoly::add_term(const ExponentVector& e, const BigInt& c) {
    if (e.size() != arity_) throw std::invalid_argument("MVPoly: exponent vector has wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MVPoly::require_arity(const MVPoly& rhs) const {
    if (arity_ != rhs.arity_) throw std::invalid_argument("MVPoly: arity mismatch");
}

MVPoly& MVPoly::operator+=(const MVPoly& rhs) {
    require_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MVPoly MVPoly::operator+(const MVPoly& rhs) const {
    MVPoly out = *this;
    out += rhs;
    return out;
}

MVPoly MVPoly::operator-(const MVPoly& rhs) const { return *this + rhs * BigInt(-1); }

MVPoly MVPoly::operator*(const BigInt& c) const {
    MVPoly out(arity_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

MVPoly MVPoly::operator*(const MVPoly& rhs) const {
    require_arity(rhs);
    MVPoly out(arity_);
    ExponentVector e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MVPoly MVPoly::permute_variables(std::span<const std::uint32_t> perm) const {
    if (perm.size() != arity_) throw std::invalid_argument("permute_variables: arity mismatch");
    MVPoly out(arity_);
    ExponentVector moved(arity_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) moved.at(perm[i]) = e[i];
        out.add_term(moved, c);
    }
    return out;
}

MVPoly MVPoly::total_derivative() const {
    MVPoly out(arity_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            ExponentVector lowered = e;
            --lowered[i];
            out.add_term(lowered, c * e[i]);
        }
    }
    return out;
}

bool MVPoly::is_symmetric() const {
    // Adjacent transpositions generate S_n.
    std::vector<std::uint32_t> perm(arity_);
    std::iota(perm.begin(), perm.end(), 0U);
    for (std::size_t i = 0; i + 1 < arity_; ++i) {
        std::swap(perm[i], perm[i + 1]);
        if (permute_variables(perm) != *this) return false;
        std::swap(perm[i], perm[i + 1]);
    }
    return true;
}

bool MVPoly::is_homogeneous(std::uint32_t degree) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total_degree(t.first) == degree; });
}

bool MVPoly::vanishes_mod(Prime p) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second % p.value() == 0; });
}

MVPoly pow(const MVPoly& a, std::uint32_t exponent) {
    MVPoly out = MVPoly::constant(a.arity(), 1);
    for (std::uint32_t i = 0; i < exponent; ++i) out = out * a;
    return out;
}

// ---------------------------------------------------------------- Theorem 3 sides

MVPoly product_chain(std::span<const std::uint32_t> perm) {
    const std::size_t m = perm.size();
    std::vector<bool> seen(m, false);
    for (auto v : perm) {
        if (v >= m || seen[v]) throw std::invalid_argument("product_chain: not a permutation");
        seen[v] = true;
    }
    MVPoly out = MVPoly::constant(m, 1);
    MVPoly partial(m);
    for (auto v : perm) {
        partial += MVPoly::variable(m, v);
        out = out * partial;
    }
    return out;
}

void require_permutation_bound(Prime p, bool allow_large) {
    const std::uint32_t limit =
        allow_large ? PermutationSumLimits::kLargeMaxPrime : PermutationSumLimits::kDefaultMaxPrime;
    if (p.value() > limit) {
        throw BoundsError("permutation sum over S_" + std::to_string(p.value() - 1) + " refused for p = " +
                          std::to_string(p.value()) + " (limit p <= " + std::to_string(limit) +
                          (allow_large ? ")" : "; pass --allow-large to raise it to 11)"));
    }
}

MVPoly lhs_sum(Prime p, bool allow_large, unsigned workers) {
    require_permutation_bound(p, allow_large);
    if (p.value() > PermutationSumLimits::kDefaultMaxPrime) return lhs_sum_by_prefix_sets(p);
    const std::uint32_t m = p.value() - 1;

    std::vector<std::uint32_t> first(m);
    std::iota(first.begin(), first.end(), 0U);
    // Split by the leading element σ(1): each slice is (m-1)! permutations.
    // Partial sums are merged in slice order, and addition is exact, so the
    // result is independent of the worker count.
    const unsigned slices = m;
    if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = std::min(workers, slices);

    std::vector<MVPoly> partial(slices, MVPoly(m));
    auto run_slice = [&](unsigned lead) {
        std::vector<std::uint32_t> rest;
        for (std::uint32_t v = 0; v < m; ++v) {
            if (v != lead) rest.push_back(v);
        }
        std::vector<std::uint32_t> perm(m);
        MVPoly& acc = partial[lead];
        do {
            perm[0] = lead;
            std::copy(rest.begin(), rest.end(), perm.begin() + 1);
            acc += product_chain(perm);
        } while (std::next_permutation(rest.begin(), rest.end()));
    };

    if (workers <= 1) {
        for (unsigned s = 0; s < slices; ++s) run_slice(s);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (unsigned s = w; s < slices; s += workers) run_slice(s);
            });
        }
    }

    MVPoly total(m);
    for (const auto& part : partial) total += part;
    return total;
}

MVPoly lhs_sum_by_prefix_sets(Prime p) {
    const std::uint32_t m = p.value() - 1;
    if (m > 20) throw BoundsError("lhs_sum_by_prefix_sets: too many variables");
    const std::uint32_t full = (1U << m) - 1;
    std::vector<MVPoly> g(full + 1U, MVPoly(m));
    g[0] = MVPoly::constant(m, 1);
    // Increasing bitmask order visits every subset after all of its subsets.
    for (std::uint32_t set = 1; set <= full; ++set) {
        MVPoly children(m);
        MVPoly partial_sum(m);
        for (std::uint32_t b = 0; b < m; ++b) {
            if (!(set & (1U << b))) continue;
            children += g[set & ~(1U << b)];
            partial_sum += MVPoly::variable(m, b);
        }
        g[set] = partial_sum * children;
    }
    return g[full];
}

MVPoly rhs_power(Prime p) {
    const std::uint32_t m = p.value() - 1;
    return pow(MVPoly::sum_of_variables(m), m);
}

bool theorem3_check(Prime p, bool allow_large) {
    return lhs_sum(p, allow_large).congruent_mod(rhs_power(p), p);
}

bool precancel_check(Prime p, bool allow_large) { return precancel_check(lhs_sum(p, allow_large), p); }

bool precancel_check(const MVPoly& lhs, Prime p) {
    const std::uint32_t m = p.value() - 1;
    if (lhs.arity() != m) throw std::invalid_argument("precancel_check: arity mismatch");
    const MVPoly s = MVPoly::sum_of_variables(m);
    const MVPoly power_sum = MVPoly::power_sum(m, p.value());
    if (!(lhs * s).congruent_mod(power_sum, p)) return false;
    return power_sum.congruent_mod(pow(s, p.value()), p);
}

bool theorem3_via_cancellation(Prime p, bool allow_large) {
    return theorem3_via_cancellation(lhs_sum(p, allow_large), p);
}

bool theorem3_via_cancellation(const MVPoly& lhs, Prime p) {
    const std::uint32_t m = p.value() - 1;
    if (lhs.arity() != m) throw std::invalid_argument("theorem3_via_cancellation: arity mismatch");
    const MVPoly s = MVPoly::sum_of_variables(m);
    const MVPoly difference = lhs * s - pow(s, p.value());
    if (!difference.vanishes_mod(p)) return false;
    const MVPoly quotient = cancel_divide(difference, s);
    // quotient = lhs - S^{p-1} exactly over Z.
    if (quotient != lhs - rhs_power(p)) return false;
    return quotient.vanishes_mod(p);
}

MVPoly cancel_divide(const MVPoly& a, const MVPoly& d) {
    if (a.arity() != d.arity()) throw std::invalid_argument("cancel_divide: arity mismatch");
    if (d.is_zero()) throw std::domain_error("cancel_divide: division by zero");
    const auto& [lead_exp, lead_coeff] = d.leading_term();
    MVPoly quotient(a.arity());
    MVPoly rest = a;
    while (!rest.is_zero()) {
        ExponentVector exp = rest.leading_term().first;
        const BigInt coeff = rest.leading_term().second;
        ExponentVector shift(a.arity());
        bool divisible = coeff % lead_coeff == 0;
        for (std::size_t i = 0; i < a.arity() && divisible; ++i) {
            if (exp[i] < lead_exp[i]) divisible = false;
            else shift[i] = exp[i] - lead_exp[i];
        }
        if (!divisible) {
            throw std::domain_error("cancel_divide: inexact division at monomial " + coeff.str() + "*" +
                                    monomial_text(exp));
        }
        const BigInt factor = coeff / lead_coeff;
        quotient.add_term(shift, factor);
        for (const auto& [e, c] : d.terms()) {
            for (std::size_t i = 0; i < a.arity(); ++i) exp[i] = shift[i] + e[i];
            rest.add_term(exp, -factor * c);
        }
    }
    return quotient;
}

nlohmann::json to_json(const MVPoly& poly) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        out.push_back({{"exponents", it->first}, {"coeff", it->second.str()}});
    }
    return out;
}

}  // namespace wittcheck
