#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singcomb::algebra {

// Expression-text errors carry the 0-based character position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " +
                             std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class VariableMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace singcomb::algebra
