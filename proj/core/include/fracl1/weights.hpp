#pragma once

#include "fracl1/errors.hpp"

#include <cmath>
#include <string>
#include <variant>

namespace fracl1 {

/// omega(t) = 1.
struct ConstantOne {};

/// omega(t) = t^mu with mu >= 0.
struct PowerWeight {
    explicit PowerWeight(double mu_) : mu(mu_) {
        if (!(mu >= 0.0)) {
            throw ParameterError("power weight requires mu >= 0");
        }
    }
    double mu;
};

/// omega(t) = t^mu (T-t)^gamma with mu, gamma >= 0.
struct JacobiWeight {
    JacobiWeight(double mu_, double gamma_, double horizon_)
        : mu(mu_), gamma(gamma_), horizon(horizon_) {
        if (!(mu >= 0.0) || !(gamma >= 0.0)) {
            throw ParameterError("jacobi weight requires mu >= 0 and gamma >= 0");
        }
        if (!(horizon > 0.0)) {
            throw ParameterError("jacobi weight requires horizon T > 0");
        }
    }
    double mu;
    double gamma;
    double horizon;
};

/// omega(t) = (ln(eT/t))^{-mu} with mu > 0.
struct LogInverseWeight {
    LogInverseWeight(double mu_, double horizon_) : mu(mu_), horizon(horizon_) {
        if (!(mu > 0.0)) {
            throw ParameterError("log-inverse weight requires mu > 0");
        }
        if (!(horizon > 0.0)) {
            throw ParameterError("log-inverse weight requires horizon T > 0");
        }
    }
    double mu;
    double horizon;
};

using WeightSpec = std::variant<ConstantOne, PowerWeight, JacobiWeight, LogInverseWeight>;

/// Conjugate Lebesgue exponent pair, 1 < p < infinity, q = p/(p-1).
class LebesgueExponent {
public:
    explicit LebesgueExponent(double p) : p_(p) {
        if (!(p > 1.0) || !std::isfinite(p)) {
            throw ParameterError("Lebesgue exponent must satisfy 1 < p < infinity");
        }
    }
    double p() const { return p_; }
    double q() const { return p_ / (p_ - 1.0); }

private:
    double p_;
};

/// omega(t) for t in (0, T); continuous extensions at the endpoints.
/// Throws DomainError outside [0, T].
double weight_eval(const WeightSpec& w, double t);

/// Leading behavior omega(d) ~ C d^exponent |ln(eT/d)|^log_power near an endpoint
/// (d = distance to the endpoint).
struct WeightBehavior {
    double exponent = 0.0;
    double log_power = 0.0;
};

WeightBehavior weight_origin_behavior(const WeightSpec& w);
WeightBehavior weight_terminal_behavior(const WeightSpec& w);

/// Horizon the weight was declared on; ConstantOne and PowerWeight adopt the caller's.
double weight_horizon(const WeightSpec& w, double fallback);

/// Throws ParameterError naming the violated constraint when the weight is not
/// admissible for the Theorem-1 pipeline at exponent p (Power: mu < p-1;
/// Jacobi: mu < p-1 and gamma < p-1).
void check_admissible(const WeightSpec& w, const LebesgueExponent& p);

std::string weight_name(const WeightSpec& w);

} // namespace fracl1
