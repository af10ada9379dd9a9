#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace wittcheck {

// Raised when an identity that the library asserts as a theorem fails on a
// concrete input. The payload holds the offending input so the case can be
// reproduced from the command line.
class ViolationError : public std::logic_error {
public:
    explicit ViolationError(const std::string& what, nlohmann::json payload = nlohmann::json::object())
        : std::logic_error(what), payload_(std::move(payload)) {}

    const nlohmann::json& payload() const noexcept { return payload_; }

private:
    nlohmann::json payload_;
};

// Raised when a request exceeds a configured size bound (prime too large for
// an exhaustive sweep, term-count guard, ...).
class BoundsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace wittcheck
