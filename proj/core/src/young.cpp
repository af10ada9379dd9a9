#include "wittcheck/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wittcheck/error.hpp"

namespace wittcheck {

YoungDiagram::YoungDiagram(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("Young diagram parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Young diagram parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

std::size_t YoungDiagram::multiplicity(std::uint32_t k) const noexcept {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), k));
}

YoungDiagram YoungDiagram::remove_box(std::size_t s) const {
    if (s >= parts_.size()) throw std::out_of_range("remove_box: no such part");
    const std::uint32_t next = s + 1 < parts_.size() ? parts_[s + 1] : 0;
    if (parts_[s] <= next) throw std::invalid_argument("remove_box: part is not a corner");
    auto parts = parts_;
    if (--parts[s] == 0) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(s));
    return YoungDiagram(std::move(parts));
}

std::string YoungDiagram::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<YoungDiagram> partitions(std::uint32_t n) {
    std::vector<YoungDiagram> out;
    std::vector<std::uint32_t> current;
    // Parts chosen in ascending order of the first part produce the
    // lexicographic order (1,1,1,1) < (2,1,1) < (2,2) < (3,1) < (4).
    std::function<void(std::uint32_t, std::uint32_t)> extend = [&](std::uint32_t remaining, std::uint32_t cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::uint32_t part = 1; part <= std::min(remaining, cap); ++part) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(n, n);
    return out;
}

const BigInt& DTable::value(const YoungDiagram& j) {
    if (auto it = memo_.find(j.parts()); it != memo_.end()) return it->second;
    BigInt total = j.empty() ? BigInt(1) : BigInt(0);
    const auto& parts = j.parts();
    const std::uint32_t n = j.size();
    for (std::size_t s = 0; s < parts.size(); ++s) {
        const std::uint32_t next = s + 1 < parts.size() ? parts[s + 1] : 0;
        if (parts[s] <= next) continue;
        const BigInt weight = BigInt(n - parts[s] + 1) * j.multiplicity(parts[s]);
        total += weight * value(j.remove_box(s));
    }
    return memo_.emplace(parts, std::move(total)).first->second;
}

BigInt d_value(const YoungDiagram& j) {
    DTable table;
    return table.value(j);
}

namespace {

bool all_d_congruent_one(std::uint32_t n, Prime p) {
    DTable table;
    for (const auto& j : partitions(n)) {
        if (table.value(j) % p.value() != 1 % p.value()) return false;
    }
    return true;
}

UPoly times_f(const UPoly& a) {
    UPoly out(a.arity());
    for (const auto& [e, c] : a.terms()) {
        ExponentVector raised = e;
        for (auto& x : raised) ++x;
        out.add_term(raised, c);
    }
    return out;
}

void guard(const UPoly& a, std::size_t term_limit) {
    if (a.size() > term_limit) {
        throw BoundsError("u-polynomial exceeded the term limit of " + std::to_string(term_limit));
    }
}

void require_range(std::uint32_t n, Prime p) {
    if (n < 1 || n > p.value() - 1) {
        throw std::out_of_range("n = " + std::to_string(n) + " outside 1..p-1 for p = " + std::to_string(p.value()));
    }
}

}  // namespace

bool theorem4_check(Prime p) { return all_d_congruent_one(p.value() - 1, p); }

bool exercise_check(Prime p) {
    if (p.value() < 3) throw std::invalid_argument("exercise_check requires p >= 3");
    return all_d_congruent_one(p.value() - 2, p);
}

UPoly power_word_in_u(std::uint32_t n, Prime p, std::size_t term_limit) {
    require_range(n, p);
    const std::size_t arity = p.value() - 1;
    const UPoly f = UPoly::monomial(ExponentVector(arity, 1));
    UPoly acc = f.total_derivative();
    for (std::uint32_t k = 2; k <= n; ++k) {
        acc = times_f(acc).total_derivative();
        guard(acc, term_limit);
    }
    return acc;
}

UPoly leibniz_power_in_u(std::uint32_t n, Prime p, std::size_t term_limit) {
    require_range(n, p);
    const std::size_t arity = p.value() - 1;
    UPoly acc = UPoly::monomial(ExponentVector(arity, n));
    for (std::uint32_t k = 0; k < n; ++k) {
        acc = acc.total_derivative();
        guard(acc, term_limit);
    }
    return acc;
}

ExponentVector designated_exponents(const YoungDiagram& j, std::uint32_t n, Prime p) {
    const std::size_t arity = p.value() - 1;
    if (j.length() > arity) throw std::invalid_argument("diagram has more parts than variables");
    ExponentVector e(arity, n);
    for (std::size_t i = 0; i < j.length(); ++i) {
        if (j.parts()[i] > n) throw std::invalid_argument("diagram part exceeds n");
        e[i] = n - j.parts()[i];
    }
    return e;
}

bool coeff_correspondence_check(std::uint32_t n, Prime p) {
    const UPoly word = power_word_in_u(n, p);
    DTable table;
    for (const auto& j : partitions(n)) {
        if (j.length() > p.value() - 1) continue;
        if (word.coeff(designated_exponents(j, n, p)) != table.value(j)) return false;
    }
    return true;
}

BigInt multinomial_coeff(const YoungDiagram& j, std::uint32_t n) {
    if (!j.empty() && j.parts().front() > n) throw std::invalid_argument("multinomial_coeff: j_1 > n");
    BigInt out = factorial(n);
    for (auto part : j.parts()) out *= binomial(n, part);
    return out;
}

}  // namespace wittcheck
