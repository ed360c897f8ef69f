#pragma once

#include "fracl1/fractional_order.hpp"
#include "fracl1/quadrature.hpp"
#include "fracl1/test_functions.hpp"
#include "fracl1/weights.hpp"

#include <span>
#include <vector>

namespace fracl1 {

/// Per-grid truncation diagnostics for the Theorem-1 bound.
struct TruncationBreakdown {
    int steps = 0;
    double tau = 0.0;
    std::vector<double> r;                       // R_n = |D^a y(t_n) - delta(t_n)|, n = 1..N
    double max_r = 0.0;                          // over n = 1..N
    std::vector<double> second_derivative_mass;  // Y_j = int_{t_j}^{t_{j+1}} |y''|
    std::vector<double> w;                       // W_j dual factors
    double lambda = 0.0;                         // Lambda(omega, tau)
    double bound = 0.0;                          // tau^{2-a-1/p} * Lambda * ||y''||_{L^p_omega}
};

struct TruncationStudy {
    std::vector<TruncationBreakdown> runs;
    double slope = 0.0;    // least-squares slope of log(max R) vs log(tau)
    double seminorm = 0.0; // ||y''||_{L^p_omega(0,T)}
};

/// Measures max_n R_n on each grid against the Caputo reference (closed-form
/// power rule when available, singular quadrature otherwise) and assembles the
/// theoretical bound curve.
TruncationStudy truncation_study(FractionalOrder alpha, const TestFunction& f, const WeightSpec& w,
                                 const LebesgueExponent& p, std::span<const int> grid_sizes,
                                 double horizon, const QuadratureSettings& settings = {});

} // namespace fracl1
