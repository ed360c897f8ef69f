#include "fracl1/truncation.hpp"

#include "fracl1/caputo_reference.hpp"
#include "fracl1/grid.hpp"
#include "fracl1/l1_scheme.hpp"
#include "fracl1/weighted_norms.hpp"

#include <algorithm>
#include <cmath>

namespace fracl1 {

namespace {

// Exact Caputo derivative where a closed form exists, quadrature otherwise.
double reference_derivative(FractionalOrder alpha, const TestFunction& f, double t,
                            const QuadratureSettings& settings) {
    if (const auto* pw = std::get_if<PowerProfile>(&f)) {
        return caputo_power(alpha, pw->kappa, t);
    }
    if (std::holds_alternative<Quadratic>(f)) {
        return caputo_power(alpha, 2.0, t);
    }
    if (const auto* lin = std::get_if<Linear>(&f)) {
        // Constants vanish under the Caputo derivative.
        return lin->slope == 0.0
                   ? 0.0
                   : lin->slope * std::pow(t, 1.0 - alpha.value()) /
                         std::tgamma(2.0 - alpha.value());
    }
    if (std::holds_alternative<Constant>(f)) {
        return 0.0;
    }
    return caputo_quadrature(alpha, f, t, settings);
}

} // namespace

TruncationStudy truncation_study(FractionalOrder alpha, const TestFunction& f, const WeightSpec& w,
                                 const LebesgueExponent& p, std::span<const int> grid_sizes,
                                 double horizon, const QuadratureSettings& settings) {
    if (grid_sizes.empty()) {
        throw ParameterError("truncation study needs at least one grid size");
    }
    check_admissible(w, p);

    TruncationStudy study;
    study.seminorm = weighted_seminorm_2(f, w, p, horizon, settings);
    const double a = alpha.value();
    const double rate = 2.0 - a - 1.0 / p.p();

    for (int n_steps : grid_sizes) {
        const UniformGrid grid(horizon, n_steps);
        const std::vector<double> samples = sample_function(f, grid);
        const DiscreteDerivative discrete = l1_apply(alpha, grid, samples);

        TruncationBreakdown run;
        run.steps = n_steps;
        run.tau = grid.step();
        run.r.resize(static_cast<std::size_t>(n_steps));
        for (int n = 1; n <= n_steps; ++n) {
            const double ref = reference_derivative(alpha, f, grid.node(n), settings);
            const double r_n = std::abs(ref - discrete.at(n));
            run.r[static_cast<std::size_t>(n - 1)] = r_n;
            run.max_r = std::max(run.max_r, r_n);
        }

        run.second_derivative_mass.resize(static_cast<std::size_t>(n_steps));
        run.w.resize(static_cast<std::size_t>(n_steps));
        const EndpointBehavior d2_origin = origin_behavior(f, 2);
        const double d2_hint =
            d2_origin.vanishes ? 0.0 : std::clamp(-d2_origin.exponent, 0.0, 0.999999);
        for (int j = 0; j < n_steps; ++j) {
            EndpointSingularity hint;
            if (j == 0) hint.left_exponent = d2_hint;
            run.second_derivative_mass[static_cast<std::size_t>(j)] = integrate_or_throw(
                [&f](double s) { return std::abs(eval_function(f, s, 2)); }, grid.node(j),
                grid.node(j + 1), settings, hint);
            run.w[static_cast<std::size_t>(j)] = wj_factor(w, p, grid, j, settings).value;
        }
        run.lambda = lambda_numeric(w, p, grid, settings);
        run.bound = std::pow(run.tau, rate) * run.lambda * study.seminorm;
        study.runs.push_back(std::move(run));
    }

    // Least-squares slope of log(max R) against log(tau).
    const std::size_t m = study.runs.size();
    if (m >= 2) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (const TruncationBreakdown& run : study.runs) {
            const double x = std::log(run.tau);
            const double y = std::log(run.max_r);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = static_cast<double>(m) * sxx - sx * sx;
        study.slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    }
    return study;
}

} // namespace fracl1
