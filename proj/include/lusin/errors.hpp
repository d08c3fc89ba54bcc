#pragma once

#include <stdexcept>
#include <string>

namespace lusin {

// Thrown when an adaptive procedure exhausts its subdivision or term budget
// before reaching the requested tolerance. Carries the best value obtained
// and an estimate of the error actually achieved.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best, double achieved)
        : std::runtime_error(what), best_(best), achieved_(achieved) {}

    double best_estimate() const noexcept { return best_; }
    double achieved_error() const noexcept { return achieved_; }

private:
    double best_;
    double achieved_;
};

// Thrown when arguments are valid individually but outside the regime a
// result is defined for (e.g. non-integer frequency exponent where
// 2-periodicity is required).
class ScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when user-supplied coefficient/frequency rules violate their
// declared growth envelope on the checked range.
class SpecViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an internal cross-check fails (e.g. the imaginary residual of
// a quantity known to be real exceeds its numerical budget).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lusin
