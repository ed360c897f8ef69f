#include "fracl1/muckenhoupt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fracl1 {

ApEstimate ap_characteristic(const WeightSpec& w, const LebesgueExponent& p, double horizon,
                             int depth, const QuadratureSettings& settings) {
    if (!(horizon > 0.0)) {
        throw ParameterError("A_p horizon must be positive");
    }
    if (depth < 1 || depth > 20) {
        throw ParameterError("A_p dyadic depth must lie in [1, 20]");
    }

    const double dual_exp = 1.0 / (p.p() - 1.0);

    // Non-integrable dual average on intervals touching an endpoint is decidable
    // from the weight's closed-form exponents; no quadrature blow-up needed.
    if (weight_origin_behavior(w).exponent * dual_exp >= 1.0) {
        return {false, std::numeric_limits<double>::infinity(), depth,
                "omega^{-1/(p-1)} is not integrable near t = 0 (mu >= p-1)"};
    }
    if (weight_terminal_behavior(w).exponent * dual_exp >= 1.0) {
        return {false, std::numeric_limits<double>::infinity(), depth,
                "omega^{-1/(p-1)} is not integrable near t = T (gamma >= p-1)"};
    }

    const std::size_t leaves = std::size_t{1} << depth;
    auto leaf_edge = [&](std::size_t i) {
        return horizon * (static_cast<double>(i) / static_cast<double>(leaves));
    };

    std::vector<double> primal(leaves);
    std::vector<double> dual(leaves);
    const double origin_hint =
        std::clamp(weight_origin_behavior(w).exponent * dual_exp, 0.0, 0.999999);
    const double terminal_hint =
        std::clamp(weight_terminal_behavior(w).exponent * dual_exp, 0.0, 0.999999);

    for (std::size_t i = 0; i < leaves; ++i) {
        const double a = leaf_edge(i);
        const double b = leaf_edge(i + 1);
        EndpointSingularity dual_hint;
        if (i == 0) dual_hint.left_exponent = origin_hint;
        if (i + 1 == leaves) dual_hint.right_exponent = terminal_hint;
        primal[i] = integrate_or_throw([&w](double s) { return weight_eval(w, s); }, a, b, settings);
        dual[i] = integrate_or_throw(
            [&w, dual_exp](double s) { return std::pow(weight_eval(w, s), -dual_exp); }, a, b,
            settings, dual_hint);
    }

    ApEstimate out{true, 0.0, depth, ""};
    for (int level = 0; level <= depth; ++level) {
        const std::size_t span = leaves >> level; // leaves per interval at this level
        const std::size_t count = std::size_t{1} << level;
        for (std::size_t k = 0; k < count; ++k) {
            double s1 = 0.0;
            double s2 = 0.0;
            for (std::size_t i = k * span; i < (k + 1) * span; ++i) {
                s1 += primal[i];
                s2 += dual[i];
            }
            const double len = leaf_edge((k + 1) * span) - leaf_edge(k * span);
            const double product = (s1 / len) * std::pow(s2 / len, p.p() - 1.0);
            out.value = std::max(out.value, product);
        }
    }
    return out;
}

} // namespace fracl1
