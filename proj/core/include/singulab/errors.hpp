#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singulab {

/// Mismatched variable counts, bad indices, malformed points.
class DomainMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The standard-basis step cap was exceeded. Never raised as a stand-in
/// for an infinite answer; infiniteness is always certified structurally.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::size_t steps, std::size_t cap)
        : std::runtime_error("reduction step cap exceeded: " + std::to_string(steps) +
                             " steps, cap " + std::to_string(cap)),
          steps_(steps), cap_(cap) {}
    std::size_t steps() const noexcept { return steps_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t steps_;
    std::size_t cap_;
};

/// An operation whose contract requires an algebraically isolated
/// initial part was handed a germ without one.
class NotIsolatedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Floating evaluation left the domain of an expression
/// (division by zero, even root of a negative number, ...).
class EvalDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Positioned syntax error from the expression parser.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position), message_(message) {}
    std::size_t position() const noexcept { return position_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

} // namespace singulab
