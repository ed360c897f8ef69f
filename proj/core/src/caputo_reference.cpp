#include "fracl1/caputo_reference.hpp"

#include <algorithm>
#include <cmath>

namespace fracl1 {

namespace {

// int_0^t (t-s)^{e-1} h(s) ds for e in (0, 1].
//
// Split at t/2 so neither transform evaluates h at a catastrophically
// cancelled argument: on [t/2, t] the substitution u = (t-s)^e removes the
// kernel exactly; on [0, t/2] the kernel is smooth and only h's own origin
// exponent needs the (mirrored) treatment.
double kernel_integral(double e, const Integrand& h, double t, const QuadratureSettings& st,
                       double h_origin_exponent) {
    if (!(e > 0.0) || e > 1.0) {
        throw ParameterError("kernel exponent must lie in (0, 1]");
    }
    if (!(t > 0.0)) {
        throw ParameterError("evaluation time must be positive");
    }

    const double mid = 0.5 * t;

    // Near field: s in [t/2, t], u = (t-s)^e, ds = -(1/e) u^{1/e - 1} du.
    const double m = 1.0 / e;
    auto near_field = [&](double u) {
        if (u <= 0.0) return 0.0;
        return h(t - std::pow(u, m)) * m;
    };
    QuadratureResult near_r = integrate(near_field, 0.0, std::pow(mid, e), st);

    // Far field: s in [0, t/2] with the kernel evaluated directly.
    auto far_field = [&](double s) { return std::pow(t - s, e - 1.0) * h(s); };
    QuadratureResult far_r =
        integrate(far_field, 0.0, mid, st, EndpointSingularity{h_origin_exponent, 0.0});

    if (!near_r.converged || !far_r.converged) {
        throw ConvergenceError("singular kernel quadrature did not converge",
                               near_r.value + far_r.value,
                               near_r.error_bound + far_r.error_bound);
    }
    return near_r.value + far_r.value;
}

} // namespace

double caputo_power(FractionalOrder alpha, double kappa, double t) {
    if (!(kappa > 0.0)) {
        throw DomainError("caputo_power requires kappa > 0");
    }
    if (!(t > 0.0)) {
        throw DomainError("caputo_power requires t > 0");
    }
    const double a = alpha.value();
    return std::tgamma(kappa + 1.0) / std::tgamma(kappa + 1.0 - a) * std::pow(t, kappa - a);
}

double rl_integral(double beta, const Integrand& g, double t, const QuadratureSettings& settings,
                   double g_origin_exponent) {
    return kernel_integral(beta, g, t, settings, g_origin_exponent) / std::tgamma(beta);
}

double caputo_quadrature(FractionalOrder alpha, const Integrand& dy, double t,
                         const QuadratureSettings& settings, double dy_origin_exponent) {
    return rl_integral(1.0 - alpha.value(), dy, t, settings, dy_origin_exponent);
}

double caputo_quadrature(FractionalOrder alpha, const TestFunction& f, double t,
                         const QuadratureSettings& settings) {
    auto dy = [&f](double s) { return eval_function(f, s, 1); };
    const EndpointBehavior b = origin_behavior(f, 1);
    const double c = b.vanishes ? 0.0 : std::clamp(-b.exponent, 0.0, 0.999999);
    return caputo_quadrature(alpha, dy, t, settings, c);
}

} // namespace fracl1
