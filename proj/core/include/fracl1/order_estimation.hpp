#pragma once

#include "fracl1/fractional_order.hpp"
#include "fracl1/test_functions.hpp"
#include "fracl1/weights.hpp"

#include <optional>

namespace fracl1 {

/// Extrapolation-based convergence order of the L1 scheme.
///
/// d1 = max over the coarse nodes n = 1..N of |delta_tau(t_n) - delta_{tau/2}(t_n)|,
/// d2 = max over the 2N-grid nodes of |delta_{tau/2} - delta_{tau/4}|,
/// order = log2(d1/d2). Nested nodes are identified by exact index mapping
/// (fine index = 2 * coarse index); no interpolation.
struct OrderEstimate {
    double base_tau = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    std::optional<double> estimated;    // empty => exactness verdict (d2 == 0)
    std::optional<double> log_adjusted; // set by log_adjusted_order
    double theoretical = 0.0;           // filled by the caller when a weight is in play

    bool exact() const { return !estimated.has_value(); }
};

OrderEstimate estimate_order(FractionalOrder alpha, const TestFunction& f, double horizon,
                             int base_steps);

/// Same extrapolation with the ratio multiplied by
/// [ln(2eT/tau) / ln(eT/tau)]^{mu/p} before taking log2, with tau the step of
/// the coarsest of the three grids.
OrderEstimate log_adjusted_order(FractionalOrder alpha, const TestFunction& f, double horizon,
                                 int base_steps, double mu, const LebesgueExponent& p);

/// Theoretical convergence order per the weight family:
/// Power -> 2-a-(1+mu)/p, Jacobi -> 2-a-(1+max(mu,gamma))/p,
/// LogInverse and ConstantOne -> 2-a-1/p (log factor reported separately).
double theoretical_order(const WeightSpec& w, const LebesgueExponent& p, FractionalOrder alpha);

} // namespace fracl1
