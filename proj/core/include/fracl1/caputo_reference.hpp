#pragma once

#include "fracl1/fractional_order.hpp"
#include "fracl1/quadrature.hpp"
#include "fracl1/test_functions.hpp"

namespace fracl1 {

/// Closed-form Caputo derivative of t^kappa:
///   D^alpha t^kappa = Gamma(kappa+1)/Gamma(kappa+1-alpha) * t^{kappa-alpha}.
double caputo_power(FractionalOrder alpha, double kappa, double t);

/// Riemann-Liouville integral I^beta g(t) = (1/Gamma(beta)) int_0^t (t-s)^{beta-1} g(s) ds
/// for beta in (0, 1]. The kernel singularity at s = t is removed exactly by the
/// power substitution; `g_origin_exponent` declares an algebraic blow-up of g at
/// s = 0 (g ~ s^{-c}, c in [0,1)) handled the same way.
double rl_integral(double beta, const Integrand& g, double t,
                   const QuadratureSettings& settings = {}, double g_origin_exponent = 0.0);

/// Caputo derivative by quadrature, D^alpha y(t) = I^{1-alpha} y'(t).
double caputo_quadrature(FractionalOrder alpha, const Integrand& dy, double t,
                         const QuadratureSettings& settings = {},
                         double dy_origin_exponent = 0.0);

/// Convenience overload taking a test function providing y'.
double caputo_quadrature(FractionalOrder alpha, const TestFunction& f, double t,
                         const QuadratureSettings& settings = {});

} // namespace fracl1
