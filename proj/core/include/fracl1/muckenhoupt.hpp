#pragma once

#include "fracl1/quadrature.hpp"
#include "fracl1/weights.hpp"

#include <string>

namespace fracl1 {

/// Dyadic approximation of the Muckenhoupt characteristic [omega]_{A_p}.
/// `finite == false` is the not-in-A_p verdict; `value` is then +infinity and
/// `reason` names the divergent average. When finite, `value` is a lower bound
/// of the true supremum (dyadic subfamily only).
struct ApEstimate {
    bool finite = true;
    double value = 0.0;
    int depth = 0;
    std::string reason;
};

/// Maximum of (avg_J omega) * (avg_J omega^{-1/(p-1)})^{p-1} over all dyadic
/// subintervals of (0, T) down to length T * 2^{-depth}. Averages are computed
/// by quadrature on the deepest-level panels and aggregated upward, so every
/// coarser interval reuses the same panel integrals.
ApEstimate ap_characteristic(const WeightSpec& w, const LebesgueExponent& p, double horizon,
                             int depth, const QuadratureSettings& settings = {});

} // namespace fracl1
