#include "fracl1/order_estimation.hpp"

#include "fracl1/grid.hpp"
#include "fracl1/l1_scheme.hpp"

#include <cmath>

namespace fracl1 {

namespace {

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

// Max over the coarse grid's interior-plus-final nodes of the difference
// between the coarse operator and the fine one at the nested nodes.
double nested_max_diff(const DiscreteDerivative& coarse, const DiscreteDerivative& fine) {
    double best = 0.0;
    for (int n = 1; n <= coarse.size(); ++n) {
        best = std::max(best, std::abs(coarse.at(n) - fine.at(2 * n)));
    }
    return best;
}

} // namespace

OrderEstimate estimate_order(FractionalOrder alpha, const TestFunction& f, double horizon,
                             int base_steps) {
    if (base_steps < 8 || !is_power_of_two(base_steps)) {
        throw ParameterError("base step count must be a power of two >= 8");
    }
    const UniformGrid coarse(horizon, base_steps);
    const UniformGrid mid = coarse.refined(2);
    const UniformGrid fine = mid.refined(2);

    const DiscreteDerivative d_coarse = l1_apply(alpha, coarse, sample_function(f, coarse));
    const DiscreteDerivative d_mid = l1_apply(alpha, mid, sample_function(f, mid));
    const DiscreteDerivative d_fine = l1_apply(alpha, fine, sample_function(f, fine));

    OrderEstimate out;
    out.base_tau = coarse.step();
    out.d1 = nested_max_diff(d_coarse, d_mid);
    out.d2 = nested_max_diff(d_mid, d_fine);
    if (out.d2 == 0.0) {
        return out; // exactness verdict: the scheme resolved f on both levels
    }
    out.estimated = std::log2(out.d1 / out.d2);
    return out;
}

OrderEstimate log_adjusted_order(FractionalOrder alpha, const TestFunction& f, double horizon,
                                 int base_steps, double mu, const LebesgueExponent& p) {
    OrderEstimate out = estimate_order(alpha, f, horizon, base_steps);
    if (out.exact()) {
        return out;
    }
    const double tau = out.base_tau; // coarsest grid's step enters the bracket
    const double bracket = std::log(2.0 * std::exp(1.0) * horizon / tau) /
                           std::log(std::exp(1.0) * horizon / tau);
    out.log_adjusted = std::log2(out.d1 / out.d2 * std::pow(bracket, mu / p.p()));
    return out;
}

double theoretical_order(const WeightSpec& w, const LebesgueExponent& p, FractionalOrder alpha) {
    check_admissible(w, p);
    const double a = alpha.value();
    return std::visit(
        [&](const auto& v) -> double {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, PowerWeight>) {
                return 2.0 - a - (1.0 + v.mu) / p.p();
            } else if constexpr (std::is_same_v<V, JacobiWeight>) {
                return 2.0 - a - (1.0 + std::max(v.mu, v.gamma)) / p.p();
            } else {
                (void)v;
                return 2.0 - a - 1.0 / p.p();
            }
        },
        w);
}

} // namespace fracl1
