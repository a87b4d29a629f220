#pragma once

#include <stdexcept>
#include <string>

namespace qwz {

/// Argument outside the declared domain of an operation (q outside (0,1),
/// ln of a nonpositive number, zero denominator, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation landed on a pole of a rational factor.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A series or product failed to converge within the engine's budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Series with a zero constant term has no inverse in the power series ring.
class NotInvertibleError : public std::domain_error {
public:
    explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

/// Caller asked for something the registry or mode does not support.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qwz
