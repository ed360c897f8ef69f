#pragma once

#include <stdexcept>
#include <string>

namespace fracl1 {

/// Violated precondition or inadmissible parameter combination.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested outside a function's domain (e.g. singular derivative at t = 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of depth before reaching the requested tolerance.
/// Carries the best estimate obtained and a bound on its error so callers can
/// degrade gracefully instead of losing the result.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

/// An integral that is provably (or detectably) divergent.
class DivergentIntegralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fracl1
