#include "fracl1/weights.hpp"

#include <cmath>

namespace fracl1 {

namespace {

double log_factor(double t, double horizon) {
    return 1.0 + std::log(horizon / t);
}

} // namespace

double weight_eval(const WeightSpec& w, double t) {
    return std::visit(
        [t](const auto& v) -> double {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ConstantOne>) {
                if (t < 0.0) throw DomainError("weight evaluated at t < 0");
                return 1.0;
            } else if constexpr (std::is_same_v<V, PowerWeight>) {
                if (t < 0.0) throw DomainError("weight evaluated at t < 0");
                return v.mu == 0.0 ? 1.0 : std::pow(t, v.mu);
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                if (t < 0.0 || t > v.horizon) throw DomainError("weight evaluated outside [0, T]");
                const double head = v.mu == 0.0 ? 1.0 : std::pow(t, v.mu);
                const double tail = v.gamma == 0.0 ? 1.0 : std::pow(v.horizon - t, v.gamma);
                return head * tail;
            } else {
                if (t < 0.0 || t > v.horizon) throw DomainError("weight evaluated outside [0, T]");
                if (t == 0.0) return 0.0; // (ln(eT/t))^{-mu} -> 0 as t -> 0+
                return std::pow(log_factor(t, v.horizon), -v.mu);
            }
        },
        w);
}

WeightBehavior weight_origin_behavior(const WeightSpec& w) {
    return std::visit(
        [](const auto& v) -> WeightBehavior {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ConstantOne>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<V, PowerWeight>) {
                return {v.mu, 0.0};
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                return {v.mu, 0.0};
            } else {
                return {0.0, -v.mu};
            }
        },
        w);
}

WeightBehavior weight_terminal_behavior(const WeightSpec& w) {
    return std::visit(
        [](const auto& v) -> WeightBehavior {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, JacobiWeight>) {
                return {v.gamma, 0.0};
            } else {
                (void)v;
                return {0.0, 0.0};
            }
        },
        w);
}

double weight_horizon(const WeightSpec& w, double fallback) {
    return std::visit(
        [fallback](const auto& v) -> double {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, JacobiWeight> || std::is_same_v<V, LogInverseWeight>) {
                return v.horizon;
            } else {
                (void)v;
                return fallback;
            }
        },
        w);
}

void check_admissible(const WeightSpec& w, const LebesgueExponent& p) {
    std::visit(
        [&p](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, PowerWeight>) {
                if (!(v.mu < p.p() - 1.0)) {
                    throw ParameterError("mu must satisfy mu < p-1");
                }
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                if (!(v.mu < p.p() - 1.0)) {
                    throw ParameterError("mu must satisfy mu < p-1");
                }
                if (!(v.gamma < p.p() - 1.0)) {
                    throw ParameterError("gamma must satisfy gamma < p-1");
                }
            } else {
                (void)v; // ConstantOne and LogInverseWeight are admissible for every p
            }
        },
        w);
}

std::string weight_name(const WeightSpec& w) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, ConstantOne>) {
                return "one";
            } else if constexpr (std::is_same_v<V, PowerWeight>) {
                return "power";
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                return "jacobi";
            } else {
                (void)v;
                return "loginv";
            }
        },
        w);
}

} // namespace fracl1
