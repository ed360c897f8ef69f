#pragma once

#include "fracl1/grid.hpp"
#include "fracl1/quadrature.hpp"
#include "fracl1/test_functions.hpp"
#include "fracl1/weights.hpp"

#include <span>

namespace fracl1 {

/// W_j = || omega^{-1/p} ||_{L^q(t_j, t_{j+1})}, the per-interval dual factor
/// of the Theorem-1 truncation bound.
struct IntervalFactor {
    int index = 0;
    double value = 0.0;
};

/// Computes W_j = (int_{t_j}^{t_{j+1}} omega(s)^{-q/p} ds)^{1/q}.
/// Closed forms are used for ConstantOne (all j) and PowerWeight (j = 0) when
/// `prefer_closed_form` is set; everything else goes through the singular
/// quadrature path. Throws ParameterError when the weight is inadmissible.
IntervalFactor wj_factor(const WeightSpec& w, const LebesgueExponent& p, const UniformGrid& grid,
                         int j, const QuadratureSettings& settings = {},
                         bool prefer_closed_form = true);

struct LambdaNumeric {
    double value = 0.0;
    int argmax = 0;
};

/// Lambda(omega, tau) = max_{0 <= j <= N-1} tau^{-1/q} W_j.
LambdaNumeric lambda_numeric_detail(const WeightSpec& w, const LebesgueExponent& p,
                                    const UniformGrid& grid, const QuadratureSettings& settings = {},
                                    bool prefer_closed_form = true);

double lambda_numeric(const WeightSpec& w, const LebesgueExponent& p, const UniformGrid& grid,
                      const QuadratureSettings& settings = {}, bool prefer_closed_form = true);

/// Closed-form / bound-shape description of Lambda(omega, tau):
///   Lambda ~ constant * tau^{tau_power} * (ln(eT/tau))^{log_power}.
/// Exact for ConstantOne and PowerWeight; a rate shape with unit constant for
/// Jacobi and LogInverse (their corollaries only bound Lambda up to C).
struct LambdaForm {
    double constant = 1.0;
    double tau_power = 0.0;
    double log_power = 0.0;
    bool exact = true;

    double value(double tau, double horizon) const;
};

LambdaForm lambda_closed_form(const WeightSpec& w, const LebesgueExponent& p);

/// (int_lo^hi |f|^p omega dt)^{1/p} for a raw integrand; endpoint behavior of
/// |f|^p*omega must be declared by the caller when singular.
double weighted_lp_norm(const Integrand& f, const WeightSpec& w, const LebesgueExponent& p,
                        double lo, double hi, const QuadratureSettings& settings = {},
                        const EndpointSingularity& singularity = {});

/// Same norm for a test function; endpoint behavior is derived analytically.
double weighted_lp_norm(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                        double lo, double hi, const QuadratureSettings& settings = {});

/// Discrete surrogate for sampled data: composite trapezoid of |y|^p omega
/// over the sample grid.
double weighted_lp_norm(std::span<const double> samples, const UniformGrid& grid,
                        const WeightSpec& w, const LebesgueExponent& p);

/// || y ||_{W^{s,p}_omega} = (int_0^T sum_{k=0}^s |y^(k)|^p omega dt)^{1/p}, s = 1 or 2.
/// Only analytic variants are accepted. Divergent terms are detected from the
/// profiles' closed-form endpoint exponents; the error names the derivative
/// order that diverged.
double weighted_sobolev_norm(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                             int order, double horizon, const QuadratureSettings& settings = {});

/// Seminorm [y]_{W^{2,p}_omega} = || y'' ||_{L^p_omega(0,T)}.
double weighted_seminorm_2(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                           double horizon, const QuadratureSettings& settings = {});

} // namespace fracl1
