#include "fracl1/test_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace fracl1 {

namespace {

// ln(eT/t) = 1 + ln(T/t), accurate for t << T.
double log_factor(double t, double horizon) {
    return 1.0 + std::log(horizon / t);
}

// Falling product kappa * (kappa-1) * ... over `order` factors.
double power_coefficient(double kappa, int order) {
    double c = 1.0;
    for (int k = 0; k < order; ++k) {
        c *= kappa - static_cast<double>(k);
    }
    return c;
}

// d^order/dt^order of t^kappa, with continuous extension at t = 0.
double power_derivative(double kappa, double t, int order) {
    const double coeff = power_coefficient(kappa, order);
    if (coeff == 0.0) {
        return 0.0;
    }
    const double e = kappa - static_cast<double>(order);
    if (t == 0.0) {
        if (e > 0.0) {
            return 0.0;
        }
        if (e == 0.0) {
            return coeff;
        }
        throw DomainError("derivative of power profile is singular at t = 0");
    }
    return coeff * std::pow(t, e);
}

void check_order(int order) {
    if (order < 0 || order > 2) {
        throw ParameterError("derivative order must be 0, 1 or 2");
    }
}

struct Evaluator {
    double t;
    int order;

    double operator()(const PowerProfile& f) const {
        if (t < 0.0) {
            throw DomainError("power profile evaluated at t < 0");
        }
        return power_derivative(f.kappa, t, order);
    }

    double operator()(const JacobiProfile& f) const {
        if (t < 0.0 || t > f.horizon) {
            throw DomainError("jacobi profile evaluated outside [0, T]");
        }
        const double head = power_derivative(f.rho0, t, order);
        const double sign = (order % 2 == 0) ? 1.0 : -1.0;
        const double tail = sign * power_derivative(f.rhoT, f.horizon - t, order);
        if (order == 0) {
            return head + tail - std::pow(f.horizon, f.rhoT);
        }
        return head + tail;
    }

    double operator()(const LogProfile& f) const {
        if (t < 0.0 || t > f.horizon) {
            throw DomainError("log profile evaluated outside [0, T]");
        }
        if (t == 0.0) {
            if (order == 0) {
                return 0.0; // continuous extension, rho > 0
            }
            throw DomainError("derivative of log profile requires t > 0");
        }
        const double L = log_factor(t, f.horizon);
        const double rho = f.rho;
        const double th = f.theta;
        switch (order) {
        case 0:
            return std::pow(t, rho) * std::pow(L, th);
        case 1:
            return std::pow(t, rho - 1.0) * std::pow(L, th - 1.0) * (rho * L - th);
        default:
            return std::pow(t, rho - 2.0) *
                   (rho * (rho - 1.0) * std::pow(L, th) -
                    th * (2.0 * rho - 1.0) * std::pow(L, th - 1.0) +
                    th * (th - 1.0) * std::pow(L, th - 2.0));
        }
    }

    double operator()(const Quadratic&) const {
        switch (order) {
        case 0: return t * t;
        case 1: return 2.0 * t;
        default: return 2.0;
        }
    }

    double operator()(const Linear& f) const {
        switch (order) {
        case 0: return f.intercept + f.slope * t;
        case 1: return f.slope;
        default: return 0.0;
        }
    }

    double operator()(const Constant& f) const {
        return order == 0 ? f.value : 0.0;
    }

    double operator()(const SampledFunction& f) const {
        if (order > 0) {
            if (!f.derivative) {
                throw DomainError("sampled function has no derivative evaluator");
            }
            return f.derivative(t, order);
        }
        const double tau = f.grid.step();
        const long n = std::lround(t / tau);
        if (n < 0 || n > f.grid.steps() || f.grid.node(static_cast<int>(n)) != t) {
            throw DomainError("sampled function queried off-node; interpolation not provided");
        }
        return f.values[static_cast<std::size_t>(n)];
    }
};

constexpr double kNoSingularity = 0.0;

struct OriginBehavior {
    int order;

    EndpointBehavior operator()(const PowerProfile& f) const {
        if (power_coefficient(f.kappa, order) == 0.0) {
            return {0.0, 0.0, true};
        }
        return {f.kappa - static_cast<double>(order), 0.0, false};
    }
    EndpointBehavior operator()(const JacobiProfile& f) const {
        if (order == 0) {
            return {std::min(f.rho0, 1.0), 0.0, false};
        }
        // The (T-t)^rhoT part is analytic at the origin; it keeps the
        // derivative bounded even when the t^rho0 part is flat.
        return {std::min(f.rho0 - static_cast<double>(order), kNoSingularity), 0.0, false};
    }
    EndpointBehavior operator()(const LogProfile& f) const {
        double log_power = f.theta;
        if (order == 2 && power_coefficient(f.rho, 2) == 0.0) {
            log_power = f.theta - 1.0; // rho == 1: leading term carries one less log
        }
        return {f.rho - static_cast<double>(order), log_power, false};
    }
    EndpointBehavior operator()(const Quadratic&) const {
        return {2.0 - static_cast<double>(order), 0.0, false};
    }
    EndpointBehavior operator()(const Linear& f) const {
        if (order >= 2 || (order == 1 && f.slope == 0.0)) {
            return {0.0, 0.0, true};
        }
        return {0.0, 0.0, false};
    }
    EndpointBehavior operator()(const Constant& f) const {
        return {0.0, 0.0, order > 0 || f.value == 0.0};
    }
    EndpointBehavior operator()(const SampledFunction&) const {
        throw ParameterError("sampled functions expose no closed-form local behavior");
    }
};

struct TerminalBehavior {
    int order;

    EndpointBehavior operator()(const PowerProfile& f) const {
        return OriginBehavior{order}(f).vanishes ? EndpointBehavior{0.0, 0.0, true}
                                                 : EndpointBehavior{0.0, 0.0, false};
    }
    EndpointBehavior operator()(const JacobiProfile& f) const {
        if (order == 0) {
            return {std::min(f.rhoT, 1.0), 0.0, false};
        }
        return {std::min(f.rhoT - static_cast<double>(order), kNoSingularity), 0.0, false};
    }
    EndpointBehavior operator()(const LogProfile&) const { return {0.0, 0.0, false}; }
    EndpointBehavior operator()(const Quadratic&) const { return {0.0, 0.0, false}; }
    EndpointBehavior operator()(const Linear& f) const { return OriginBehavior{order}(f); }
    EndpointBehavior operator()(const Constant& f) const { return OriginBehavior{order}(f); }
    EndpointBehavior operator()(const SampledFunction&) const {
        throw ParameterError("sampled functions expose no closed-form local behavior");
    }
};

} // namespace

double eval_function(const TestFunction& f, double t, int order) {
    check_order(order);
    return std::visit(Evaluator{t, order}, f);
}

std::vector<double> sample_function(const TestFunction& f, const UniformGrid& grid) {
    std::vector<double> out(static_cast<std::size_t>(grid.steps()) + 1);
    for (int n = 0; n <= grid.steps(); ++n) {
        out[static_cast<std::size_t>(n)] = eval_function(f, grid.node(n), 0);
    }
    return out;
}

EndpointBehavior origin_behavior(const TestFunction& f, int order) {
    check_order(order);
    return std::visit(OriginBehavior{order}, f);
}

EndpointBehavior terminal_behavior(const TestFunction& f, int order) {
    check_order(order);
    return std::visit(TerminalBehavior{order}, f);
}

} // namespace fracl1
