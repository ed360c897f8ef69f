#pragma once

#include "fracl1/fractional_order.hpp"
#include "fracl1/grid.hpp"
#include "fracl1/test_functions.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace fracl1 {

/// D^alpha y + lambda y = f on (0, T], y(0) = y0, with lambda >= 0.
struct FodeProblem {
    FodeProblem(FractionalOrder alpha_, double lambda_, std::function<double(double)> source_,
                double y0_, double horizon_)
        : alpha(alpha_), lambda(lambda_), source(std::move(source_)), y0(y0_), horizon(horizon_) {
        if (!(lambda >= 0.0)) {
            throw ParameterError("fode stability requires lambda >= 0");
        }
        if (!(horizon > 0.0)) {
            throw ParameterError("fode horizon must be positive");
        }
        if (!source) {
            throw ParameterError("fode source must be callable");
        }
    }

    FractionalOrder alpha;
    double lambda;
    std::function<double(double)> source;
    double y0;
    double horizon;
};

struct FodeSolution {
    UniformGrid grid;
    std::vector<double> values; // Y_0..Y_N, Y_0 = y0 exactly
    double alpha = 0.5;
};

struct ErrorReport {
    std::vector<double> errors; // e_n = y(t_n) - Y_n for n = 0..N
    double max_error = 0.0;     // max over n = 1..N
    std::optional<double> gronwall_bound;
};

/// L1 time stepping of the discrete scheme delta_tau^alpha Y_n + lambda Y_n = f(t_n).
/// Each step is a closed-form scalar division; the history term reuses the L1 kernel.
FodeSolution solve_fode(const FodeProblem& problem, const UniformGrid& grid);

/// Per-node and max errors against a manufactured exact solution. When the
/// measured maximum truncation error is supplied, the report carries the
/// Gronwall-style bound (T^alpha/Gamma(1+alpha)) * max|R_n|.
ErrorReport global_error(const FodeSolution& solution, const TestFunction& exact,
                         std::optional<double> max_truncation = std::nullopt);

/// T^alpha / Gamma(1+alpha), the discrete fractional Gronwall constant.
double gronwall_constant(FractionalOrder alpha, double horizon);

} // namespace fracl1
