#pragma once

#include "fracl1/errors.hpp"
#include "fracl1/grid.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace fracl1 {

/// y(t) = t^kappa, kappa > 0.
struct PowerProfile {
    explicit PowerProfile(double kappa_) : kappa(kappa_) {
        if (!(kappa > 0.0)) {
            throw ParameterError("PowerProfile requires kappa > 0");
        }
    }
    double kappa;
};

/// y(t) = t^rho0 + (T-t)^rhoT - T^rhoT, singular at both ends, y(0) = 0.
struct JacobiProfile {
    JacobiProfile(double rho0_, double rhoT_, double horizon_)
        : rho0(rho0_), rhoT(rhoT_), horizon(horizon_) {
        if (!(rho0 > 0.0) || !(rhoT > 0.0)) {
            throw ParameterError("JacobiProfile requires rho0 > 0 and rhoT > 0");
        }
        if (!(horizon > 0.0)) {
            throw ParameterError("JacobiProfile requires horizon T > 0");
        }
    }
    double rho0;
    double rhoT;
    double horizon;
};

/// y(t) = t^rho * (ln(eT/t))^theta with rho > 0; continuous extension y(0) = 0.
struct LogProfile {
    LogProfile(double rho_, double theta_, double horizon_)
        : rho(rho_), theta(theta_), horizon(horizon_) {
        if (!(rho > 0.0)) {
            throw ParameterError("LogProfile requires rho > 0");
        }
        if (!(horizon > 0.0)) {
            throw ParameterError("LogProfile requires horizon T > 0");
        }
    }
    double rho;
    double theta;
    double horizon;
};

/// y(t) = t^2.
struct Quadratic {};

/// y(t) = intercept + slope * t.
struct Linear {
    double intercept = 0.0;
    double slope = 1.0;
};

/// y(t) = value.
struct Constant {
    double value = 0.0;
};

/// Node values on a uniform grid plus an optional derivative evaluator.
/// Order-0 queries must land exactly on a node; no interpolation is provided.
struct SampledFunction {
    SampledFunction(UniformGrid grid_, std::vector<double> values_,
                    std::function<double(double, int)> derivative_ = {})
        : grid(std::move(grid_)), values(std::move(values_)), derivative(std::move(derivative_)) {
        if (values.size() != static_cast<std::size_t>(grid.steps()) + 1) {
            throw ParameterError("SampledFunction needs N+1 node values");
        }
    }
    UniformGrid grid;
    std::vector<double> values;
    std::function<double(double, int)> derivative;
};

using TestFunction =
    std::variant<PowerProfile, JacobiProfile, LogProfile, Quadratic, Linear, Constant, SampledFunction>;

/// Evaluate y, y' or y'' (order 0, 1, 2) at t. Derivatives use the exact
/// closed forms of each profile; singular derivative requests at t = 0 throw
/// DomainError, as do off-node queries of sampled functions.
double eval_function(const TestFunction& f, double t, int order);

/// Samples y at every node of the grid (length N+1).
std::vector<double> sample_function(const TestFunction& f, const UniformGrid& grid);

/// Leading local behavior |y^(order)(t)| ~ C * d^exponent * |ln(eT/d)|^log_power
/// where d is the distance to the endpoint. Drives singularity hints and
/// divergence detection in the weighted-norm quadratures.
struct EndpointBehavior {
    double exponent = 0.0;
    double log_power = 0.0;
    bool vanishes = false; // derivative identically zero near the endpoint
};

EndpointBehavior origin_behavior(const TestFunction& f, int order);
EndpointBehavior terminal_behavior(const TestFunction& f, int order);

} // namespace fracl1
