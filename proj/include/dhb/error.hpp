#pragma once

#include <stdexcept>
#include <string>

namespace dhb {

// Bad input: malformed text, inconsistent degrees, wrong arguments.
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text that could not be parsed; pos is a 0-based offset into the input.
class parse_error : public usage_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : usage_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// A mathematical check failed (relation, hypothesis, conformance).
class check_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dhb
