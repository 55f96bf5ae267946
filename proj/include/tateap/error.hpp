#pragma once

#include <stdexcept>
#include <string>

namespace tateap {

// Caller passed arguments outside an operation's contract (dimension
// mismatch, malformed input, out-of-range parameters).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically invalid input: off-curve points, b = 0, division by zero.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace tateap
