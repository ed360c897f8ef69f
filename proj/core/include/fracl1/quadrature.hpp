#pragma once

#include "fracl1/errors.hpp"

#include <functional>

namespace fracl1 {

struct QuadratureSettings {
    double rel_tol = 1e-10;   // in (0, 1e-4]
    int max_depth = 48;       // per-panel bisection depth
    int nodes_per_panel = 15; // Gauss-Kronrod 7/15 is the only rule provided

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-4) {
            throw ParameterError("quadrature tolerance must lie in (0, 1e-4]");
        }
        if (max_depth < 1) {
            throw ParameterError("quadrature max depth must be at least 1");
        }
        if (nodes_per_panel != 15) {
            throw ParameterError("only the 15-node Gauss-Kronrod panel is available");
        }
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Known algebraic endpoint blow-up of the integrand:
/// f(s) ~ C (s-a)^{-left_exponent} near a, f(s) ~ C (b-s)^{-right_exponent} near b.
/// Exponents must lie in [0, 1); they are removed exactly by the power
/// substitution s = a + v^{1/(1-c)} (and its mirror) before adaptive integration.
struct EndpointSingularity {
    double left_exponent = 0.0;
    double right_exponent = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integration of f over [a, b].
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSettings& settings = {},
                           const EndpointSingularity& singularity = {});

/// As integrate(), but throws ConvergenceError (carrying the best estimate and
/// its error bound) when the tolerance is not reached at max depth.
double integrate_or_throw(const Integrand& f, double a, double b,
                          const QuadratureSettings& settings = {},
                          const EndpointSingularity& singularity = {});

} // namespace fracl1
