#include "fracl1/fode.hpp"

#include "fracl1/l1_scheme.hpp"

#include <cmath>
#include <string>

namespace fracl1 {

FodeSolution solve_fode(const FodeProblem& problem, const UniformGrid& grid) {
    if (grid.horizon() != problem.horizon) {
        throw ParameterError("grid horizon must match the problem horizon");
    }
    const int n_steps = grid.steps();
    const double tau = grid.step();
    const double a = problem.alpha.value();
    const double scale = std::pow(tau, -a) / std::tgamma(2.0 - a);
    const L1Coefficients coeffs(problem.alpha, n_steps);

    std::vector<double> y(static_cast<std::size_t>(n_steps) + 1);
    y[0] = problem.y0;
    for (int n = 1; n <= n_steps; ++n) {
        const double f_n = problem.source(grid.node(n));
        if (!std::isfinite(f_n)) {
            throw ParameterError("source value not finite at node n = " + std::to_string(n));
        }
        const double history = l1_history_term(coeffs, y, n);
        y[static_cast<std::size_t>(n)] = (f_n + scale * history) / (scale + problem.lambda);
    }
    return FodeSolution{grid, std::move(y), a};
}

ErrorReport global_error(const FodeSolution& solution, const TestFunction& exact,
                         std::optional<double> max_truncation) {
    const int n_steps = solution.grid.steps();
    ErrorReport report;
    report.errors.resize(static_cast<std::size_t>(n_steps) + 1);
    for (int n = 0; n <= n_steps; ++n) {
        report.errors[static_cast<std::size_t>(n)] =
            eval_function(exact, solution.grid.node(n), 0) - solution.values[static_cast<std::size_t>(n)];
    }
    report.max_error = 0.0;
    for (int n = 1; n <= n_steps; ++n) {
        report.max_error = std::max(report.max_error, std::abs(report.errors[static_cast<std::size_t>(n)]));
    }
    if (max_truncation) {
        report.gronwall_bound = gronwall_constant(FractionalOrder(solution.alpha),
                                                  solution.grid.horizon()) *
                                *max_truncation;
    }
    return report;
}

double gronwall_constant(FractionalOrder alpha, double horizon) {
    return std::pow(horizon, alpha.value()) / std::tgamma(1.0 + alpha.value());
}

} // namespace fracl1
