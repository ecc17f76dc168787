#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qent {

/// Malformed textual input (ket expressions, state specs). Carries the offset
/// of the offending character when known.
class ParseError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(position == npos
                                 ? msg
                                 : msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& msg) : ParseError(msg, npos) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Register, dimension, or site-subset violations.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric invariant violations: non-Hermitian inputs, overflow, results that
/// should be real but are not, failed minimizations.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qent
