#include "wittcheck/diffword.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wittcheck/error.hpp"

namespace wittcheck {

// ---------------------------------------------------------------- DiffMonomial

DiffMonomial::DiffMonomial(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
    std::sort(orders_.begin(), orders_.end());
}

std::uint32_t DiffMonomial::total_order() const noexcept {
    return std::accumulate(orders_.begin(), orders_.end(), std::uint32_t{0});
}

DiffMonomial DiffMonomial::times_f() const {
    DiffMonomial out;
    out.orders_.reserve(orders_.size() + 1);
    out.orders_.push_back(0);
    out.orders_.insert(out.orders_.end(), orders_.begin(), orders_.end());
    return out;
}

DiffMonomial DiffMonomial::raise(std::uint32_t from) const {
    // Bump the last factor of order `from`; the vector stays sorted.
    auto it = std::upper_bound(orders_.begin(), orders_.end(), from);
    if (it == orders_.begin() || *(it - 1) != from) throw std::invalid_argument("DiffMonomial::raise: no such factor");
    DiffMonomial out = *this;
    ++out.orders_[static_cast<std::size_t>(it - orders_.begin()) - 1];
    return out;
}

// ---------------------------------------------------------------- DiffPoly

DiffPoly DiffPoly::single(DiffMonomial m, BigInt coeff) {
    DiffPoly out;
    out.add_term(m, coeff);
    return out;
}

BigInt DiffPoly::coeff(const DiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void DiffPoly::add_term(const DiffMonomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator+(const DiffPoly& rhs) const {
    DiffPoly out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

DiffPoly DiffPoly::operator-(const DiffPoly& rhs) const { return *this + rhs * BigInt(-1); }

DiffPoly DiffPoly::operator*(const BigInt& c) const {
    DiffPoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

bool DiffPoly::vanishes_mod(Prime p) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second % p.value() == 0; });
}

DiffPoly derive(const DiffPoly& a) {
    DiffPoly out;
    for (const auto& [m, c] : a.terms()) {
        const auto& o = m.orders();
        // Each run of equal orders k contributes (run length) * (monomial with one k raised).
        for (std::size_t i = 0; i < o.size();) {
            std::size_t j = i;
            while (j < o.size() && o[j] == o[i]) ++j;
            out.add_term(m.raise(o[i]), c * static_cast<unsigned>(j - i));
            i = j;
        }
    }
    return out;
}

DiffPoly times_f(const DiffPoly& a) {
    DiffPoly out;
    for (const auto& [m, c] : a.terms()) out.add_term(m.times_f(), c);
    return out;
}

// ---------------------------------------------------------------- words

DiffWord DiffWord::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty word", 0);
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'D': letters.push_back(Letter::D); break;
            case 'F': letters.push_back(Letter::F); break;
            default: throw ParseError(std::string("unexpected letter '") + text[i] + "' (expected D or F)", i);
        }
    }
    if (letters.back() != Letter::F) throw ParseError("word must end with F", text.size() - 1);
    return DiffWord(std::move(letters));
}

DiffWord DiffWord::power(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("DiffWord::power: n must be positive");
    std::vector<Letter> letters;
    for (std::uint32_t i = 0; i < n; ++i) {
        letters.push_back(Letter::D);
        letters.push_back(Letter::F);
    }
    return DiffWord(std::move(letters));
}

DiffWord DiffWord::leibniz(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("DiffWord::leibniz: n must be positive");
    std::vector<Letter> letters(n, Letter::D);
    letters.insert(letters.end(), n, Letter::F);
    return DiffWord(std::move(letters));
}

std::string DiffWord::to_string() const {
    std::string out;
    for (auto l : letters_) out += static_cast<char>(l);
    return out;
}

DiffPoly expand_word(const DiffWord& word) {
    const auto& letters = word.letters();
    DiffPoly acc = DiffPoly::single(DiffMonomial({0}));
    for (auto it = letters.rbegin() + 1; it != letters.rend(); ++it) {
        acc = *it == Letter::F ? times_f(acc) : derive(acc);
    }
    return acc;
}

DiffPoly expand_word(std::string_view word) { return expand_word(DiffWord::parse(word)); }

DiffPoly power_word(std::uint32_t n) { return expand_word(DiffWord::power(n)); }

DiffPoly leibniz_power(std::uint32_t n) { return expand_word(DiffWord::leibniz(n)); }

bool theorem2_check(Prime p) {
    const std::uint32_t n = p.value() - 1;
    return (power_word(n) + leibniz_power(n)).vanishes_mod(p);
}

// ---------------------------------------------------------------- distinguishable symbols

BigInt MultiDiffPoly::coeff(const MultiDiffMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiDiffPoly::add_term(const MultiDiffMonomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiDiffPoly MultiDiffPoly::permute_symbols(const std::vector<std::uint32_t>& perm) const {
    MultiDiffPoly out;
    for (const auto& [m, c] : terms_) {
        const auto& o = m.orders();
        if (perm.size() != o.size()) throw std::invalid_argument("permute_symbols: arity mismatch");
        std::vector<std::uint32_t> moved(o.size(), 0);
        for (std::size_t i = 0; i < o.size(); ++i) moved.at(perm[i]) = o[i];
        out.add_term(MultiDiffMonomial(std::move(moved)), c);
    }
    return out;
}

DiffPoly MultiDiffPoly::merge_symbols() const {
    DiffPoly out;
    for (const auto& [m, c] : terms_) out.add_term(DiffMonomial(m.orders()), c);
    return out;
}

MultiDiffPoly expand_multi(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("expand_multi: m must be positive");
    // Right to left: f_1, ∂, f_2, ∂, ..., f_m, ∂. After introducing f_k the
    // live factors are positions 0..k-1.
    std::map<std::vector<std::uint32_t>, BigInt> acc{{std::vector<std::uint32_t>(m, 0), BigInt(1)}};
    for (std::uint32_t live = 1; live <= m; ++live) {
        std::map<std::vector<std::uint32_t>, BigInt> next;
        for (const auto& [orders, c] : acc) {
            for (std::uint32_t i = 0; i < live; ++i) {
                auto raised = orders;
                ++raised[i];
                next[raised] += c;
            }
        }
        acc = std::move(next);
    }
    MultiDiffPoly out;
    for (auto& [orders, c] : acc) out.add_term(MultiDiffMonomial(orders), c);
    return out;
}

FpPoly evaluate(const DiffPoly& dp, const FpPoly& f) {
    const Prime p = f.prime();
    std::uint32_t max_order = 0;
    for (const auto& [m, c] : dp.terms()) {
        if (!m.orders().empty()) max_order = std::max(max_order, m.orders().back());
    }
    std::vector<FpPoly> derivatives{f};
    for (std::uint32_t k = 1; k <= max_order; ++k) derivatives.push_back(derive(derivatives.back()));

    FpPoly out(p);
    for (const auto& [m, c] : dp.terms()) {
        FpPoly term = FpPoly::constant(FpScalar::from_big(c, p));
        for (auto k : m.orders()) term *= derivatives[k];
        out += term;
    }
    return out;
}

namespace {

std::string factor_name(std::uint32_t order) {
    if (order <= 3) return "f" + std::string(order, '\'');
    return "f^(" + std::to_string(order) + ")";
}

std::string format_monomial(const DiffMonomial& m) {
    std::string out;
    const auto& o = m.orders();
    for (std::size_t i = 0; i < o.size();) {
        std::size_t j = i;
        while (j < o.size() && o[j] == o[i]) ++j;
        const auto count = j - i;
        std::string name = factor_name(o[i]);
        if (count == 1) {
            out += name;
        } else {
            out += (o[i] == 0 ? name : "(" + name + ")") + "^" + std::to_string(count);
        }
        i = j;
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string format_expansion(const DiffPoly& dp) {
    if (dp.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = dp.terms().rbegin(); it != dp.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt magnitude = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::string mono = format_monomial(m);
        if (magnitude != 1 || mono == "1") os << magnitude;
        if (mono != "1") os << mono;
    }
    return os.str();
}

nlohmann::json to_json(const DiffPoly& dp) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : dp.terms()) out.push_back({{"orders", m.orders()}, {"coeff", c.str()}});
    return out;
}

}  // namespace wittcheck
