#include "fracl1/weighted_norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fracl1 {

namespace {

constexpr double kBorderlineTol = 1e-12;
constexpr double kMaxSingularExponent = 0.999999;

// omega(s)^{-q/p}
Integrand dual_integrand(const WeightSpec& w, double qp_ratio) {
    return [&w, qp_ratio](double s) { return std::pow(weight_eval(w, s), -qp_ratio); };
}

struct TermBehavior {
    double exponent;  // power of the distance to the endpoint
    double log_power; // power of the ln(eT/d) factor
};

// Leading behavior of |y^(k)|^p * omega near an endpoint.
TermBehavior term_behavior(const EndpointBehavior& fb, const WeightBehavior& wb, double p) {
    return {fb.exponent * p + wb.exponent, fb.log_power * p + wb.log_power};
}

void check_term_convergence(const TermBehavior& tb, int order, const char* end) {
    if (tb.exponent < -1.0 - kBorderlineTol) {
        throw DivergentIntegralError("weighted norm diverges at the " + std::string(end) +
                                     " endpoint: derivative order " + std::to_string(order));
    }
    if (std::abs(tb.exponent + 1.0) <= kBorderlineTol && tb.log_power >= -1.0 - kBorderlineTol) {
        throw DivergentIntegralError("weighted norm diverges (log-critical) at the " +
                                     std::string(end) + " endpoint: derivative order " +
                                     std::to_string(order));
    }
}

} // namespace

IntervalFactor wj_factor(const WeightSpec& w, const LebesgueExponent& p, const UniformGrid& grid,
                         int j, const QuadratureSettings& settings, bool prefer_closed_form) {
    if (j < 0 || j >= grid.steps()) {
        throw ParameterError("interval index must satisfy 0 <= j <= N-1");
    }
    check_admissible(w, p);
    const double q = p.q();
    const double tau = grid.step();

    if (prefer_closed_form) {
        if (std::holds_alternative<ConstantOne>(w)) {
            return {j, std::pow(tau, 1.0 / q)};
        }
        if (j == 0) {
            if (const auto* pw = std::get_if<PowerWeight>(&w)) {
                const double c = std::pow(p.p() / (p.p() - pw->mu * q), 1.0 / q);
                return {j, c * std::pow(tau, 1.0 / q - pw->mu / p.p())};
            }
        }
    }

    EndpointSingularity hint;
    if (j == 0) {
        hint.left_exponent =
            std::clamp(weight_origin_behavior(w).exponent * q / p.p(), 0.0, kMaxSingularExponent);
    }
    if (j == grid.steps() - 1) {
        hint.right_exponent =
            std::clamp(weight_terminal_behavior(w).exponent * q / p.p(), 0.0, kMaxSingularExponent);
    }
    const double integral = integrate_or_throw(dual_integrand(w, q / p.p()), grid.node(j),
                                               grid.node(j + 1), settings, hint);
    return {j, std::pow(integral, 1.0 / q)};
}

LambdaNumeric lambda_numeric_detail(const WeightSpec& w, const LebesgueExponent& p,
                                    const UniformGrid& grid, const QuadratureSettings& settings,
                                    bool prefer_closed_form) {
    const double scale = std::pow(grid.step(), -1.0 / p.q());
    LambdaNumeric best{-1.0, 0};
    for (int j = 0; j < grid.steps(); ++j) {
        const double candidate = scale * wj_factor(w, p, grid, j, settings, prefer_closed_form).value;
        if (candidate > best.value) {
            best = {candidate, j};
        }
    }
    return best;
}

double lambda_numeric(const WeightSpec& w, const LebesgueExponent& p, const UniformGrid& grid,
                      const QuadratureSettings& settings, bool prefer_closed_form) {
    return lambda_numeric_detail(w, p, grid, settings, prefer_closed_form).value;
}

double LambdaForm::value(double tau, double horizon) const {
    double v = constant * std::pow(tau, tau_power);
    if (log_power != 0.0) {
        v *= std::pow(1.0 + std::log(horizon / tau), log_power);
    }
    return v;
}

LambdaForm lambda_closed_form(const WeightSpec& w, const LebesgueExponent& p) {
    check_admissible(w, p);
    return std::visit(
        [&p](const auto& v) -> LambdaForm {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ConstantOne>) {
                return {1.0, 0.0, 0.0, true};
            } else if constexpr (std::is_same_v<V, PowerWeight>) {
                const double q = p.q();
                return {std::pow(p.p() / (p.p() - v.mu * q), 1.0 / q), -v.mu / p.p(), 0.0, true};
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                return {1.0, -std::max(v.mu, v.gamma) / p.p(), 0.0, false};
            } else {
                return {1.0, 0.0, v.mu / p.p(), false};
            }
        },
        w);
}

double weighted_lp_norm(const Integrand& f, const WeightSpec& w, const LebesgueExponent& p,
                        double lo, double hi, const QuadratureSettings& settings,
                        const EndpointSingularity& singularity) {
    auto integrand = [&](double s) {
        return std::pow(std::abs(f(s)), p.p()) * weight_eval(w, s);
    };
    return std::pow(integrate_or_throw(integrand, lo, hi, settings, singularity), 1.0 / p.p());
}

double weighted_lp_norm(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                        double lo, double hi, const QuadratureSettings& settings) {
    EndpointSingularity hint;
    if (lo == 0.0) {
        const EndpointBehavior fb = origin_behavior(f, 0);
        if (!fb.vanishes) {
            const TermBehavior tb = term_behavior(fb, weight_origin_behavior(w), p.p());
            check_term_convergence(tb, 0, "origin");
            hint.left_exponent = std::clamp(-tb.exponent, 0.0, kMaxSingularExponent);
        }
    }
    if (hi == weight_horizon(w, hi)) {
        const EndpointBehavior fb = terminal_behavior(f, 0);
        if (!fb.vanishes) {
            const TermBehavior tb = term_behavior(fb, weight_terminal_behavior(w), p.p());
            check_term_convergence(tb, 0, "terminal");
            hint.right_exponent = std::clamp(-tb.exponent, 0.0, kMaxSingularExponent);
        }
    }
    auto value = [&f](double s) { return eval_function(f, s, 0); };
    return weighted_lp_norm(value, w, p, lo, hi, settings, hint);
}

double weighted_lp_norm(std::span<const double> samples, const UniformGrid& grid,
                        const WeightSpec& w, const LebesgueExponent& p) {
    if (samples.size() != static_cast<std::size_t>(grid.steps()) + 1) {
        throw ParameterError("sample count must equal N+1");
    }
    double acc = 0.0;
    for (int n = 0; n <= grid.steps(); ++n) {
        const double weight = (n == 0 || n == grid.steps()) ? 0.5 : 1.0;
        const double v = std::pow(std::abs(samples[static_cast<std::size_t>(n)]), p.p()) *
                         weight_eval(w, grid.node(n));
        acc += weight * v;
    }
    return std::pow(acc * grid.step(), 1.0 / p.p());
}

namespace {

double derivative_sum_norm(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                           const std::vector<int>& orders, double horizon,
                           const QuadratureSettings& settings) {
    if (std::holds_alternative<SampledFunction>(f)) {
        throw ParameterError("weighted Sobolev norms accept analytic test functions only");
    }
    if (!(horizon > 0.0)) {
        throw ParameterError("norm horizon must be positive");
    }

    EndpointSingularity hint;
    for (int k : orders) {
        const EndpointBehavior ob = origin_behavior(f, k);
        if (!ob.vanishes) {
            const TermBehavior tb = term_behavior(ob, weight_origin_behavior(w), p.p());
            check_term_convergence(tb, k, "origin");
            hint.left_exponent =
                std::max(hint.left_exponent, std::clamp(-tb.exponent, 0.0, kMaxSingularExponent));
        }
        const EndpointBehavior eb = terminal_behavior(f, k);
        if (!eb.vanishes) {
            const TermBehavior tb = term_behavior(eb, weight_terminal_behavior(w), p.p());
            check_term_convergence(tb, k, "terminal");
            hint.right_exponent =
                std::max(hint.right_exponent, std::clamp(-tb.exponent, 0.0, kMaxSingularExponent));
        }
    }

    auto integrand = [&](double s) {
        double sum = 0.0;
        for (int k : orders) {
            sum += std::pow(std::abs(eval_function(f, s, k)), p.p());
        }
        return sum * weight_eval(w, s);
    };
    return std::pow(integrate_or_throw(integrand, 0.0, horizon, settings, hint), 1.0 / p.p());
}

} // namespace

double weighted_sobolev_norm(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                             int order, double horizon, const QuadratureSettings& settings) {
    if (order != 1 && order != 2) {
        throw ParameterError("Sobolev order must be 1 or 2");
    }
    std::vector<int> orders(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        orders[static_cast<std::size_t>(k)] = k;
    }
    return derivative_sum_norm(f, w, p, orders, horizon, settings);
}

double weighted_seminorm_2(const TestFunction& f, const WeightSpec& w, const LebesgueExponent& p,
                           double horizon, const QuadratureSettings& settings) {
    return derivative_sum_norm(f, w, p, {2}, horizon, settings);
}

} // namespace fracl1
