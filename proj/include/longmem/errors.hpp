#pragma once

#include <stdexcept>
#include <string>

namespace longmem {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation requested on a branch cut of a sectionally holomorphic function.
class BranchCutError : public DomainError {
public:
    using DomainError::DomainError;
};

// Iteration, root bracketing or truncation failed to meet its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Levinson recursion lost positive definiteness.
class BreakdownError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear system too ill-conditioned to trust.
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

}  // namespace longmem
