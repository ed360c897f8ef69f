#include "fracl1/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace fracl1 {

namespace {

// Gauss-Kronrod 7/15 on [-1, 1]. The Kronrod weights sum to exactly 2.0 in
// binary64 (left-to-right), so constants integrate without roundoff.
constexpr double kXgk[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kWk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

// Embedded 7-point Gauss weights (odd Kronrod nodes).
constexpr double kWg[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    int depth;
    long seq;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.seq > y.seq; // deterministic tie-break: older panel first
    }
};

Panel evaluate_panel(const Integrand& f, double a, double b, int depth, long seq, long& evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double x = mid + half * kXgk[i];
        const double fx = f(x);
        kronrod += kWk[i] * fx;
        if (i % 2 == 1) {
            gauss += kWg[i / 2] * fx;
        }
    }
    evals += 15;
    const double value = half * kronrod;
    const double error = std::abs(half * (kronrod - gauss));
    return Panel{a, b, value, error, depth, seq};
}

QuadratureResult adaptive(const Integrand& f, double a, double b, const QuadratureSettings& st) {
    QuadratureResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    long seq = 0;
    double total = 0.0;
    double total_err = 0.0;

    auto push = [&](double lo, double hi, int depth) {
        Panel p = evaluate_panel(f, lo, hi, depth, seq++, out.evaluations);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    };
    push(a, b, 0);

    const long panel_budget = 200000;
    const double scale_floor = std::numeric_limits<double>::min();

    while (!queue.empty()) {
        const double scale = std::max(std::abs(total), scale_floor);
        if (total_err <= st.rel_tol * scale) {
            out.converged = true;
            break;
        }
        Panel worst = queue.top();
        if (worst.depth >= st.max_depth || seq >= panel_budget) {
            break; // cannot refine further
        }
        queue.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at roundoff width; accept as-is
            total += worst.value;
            queue.push(Panel{worst.a, worst.b, worst.value, 0.0, worst.depth, seq++});
            continue;
        }
        push(worst.a, mid, worst.depth + 1);
        push(mid, worst.b, worst.depth + 1);
    }

    out.value = total;
    out.error_bound = total_err;
    if (!out.converged) {
        out.converged = total_err <= st.rel_tol * std::max(std::abs(total), scale_floor);
    }
    return out;
}

// Integrate f over [a, b] where f ~ C (s-a)^{-c} near a, c in [0, 1).
// Substitution s = a + v^m with m = 1/(1-c) removes the algebraic factor:
//   \int f(s) ds = \int f(a + v^m) m v^{m-1} dv over [0, (b-a)^{1/m}].
QuadratureResult left_transformed(const Integrand& f, double a, double b, double c,
                                  const QuadratureSettings& st) {
    const double m = 1.0 / (1.0 - c);
    const double v_hi = std::pow(b - a, 1.0 / m);
    auto g = [&f, a, m](double v) {
        if (v <= 0.0) return 0.0; // limit of the flattened integrand's measure
        return f(a + std::pow(v, m)) * m * std::pow(v, m - 1.0);
    };
    return adaptive(g, 0.0, v_hi, st);
}

QuadratureResult right_transformed(const Integrand& f, double a, double b, double c,
                                   const QuadratureSettings& st) {
    const double m = 1.0 / (1.0 - c);
    const double v_hi = std::pow(b - a, 1.0 / m);
    auto g = [&f, b, m](double v) {
        if (v <= 0.0) return 0.0;
        return f(b - std::pow(v, m)) * m * std::pow(v, m - 1.0);
    };
    return adaptive(g, 0.0, v_hi, st);
}

void check_exponent(double c) {
    if (c < 0.0 || c >= 1.0) {
        throw ParameterError("endpoint singularity exponent must lie in [0, 1)");
    }
}

} // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSettings& settings,
                           const EndpointSingularity& singularity) {
    settings.validate();
    check_exponent(singularity.left_exponent);
    check_exponent(singularity.right_exponent);
    if (!(a <= b)) {
        throw ParameterError("integration interval must satisfy a <= b");
    }

    const bool left = singularity.left_exponent > 0.0;
    const bool right = singularity.right_exponent > 0.0;

    if (!left && !right) {
        return adaptive(f, a, b, settings);
    }
    if (left && !right) {
        return left_transformed(f, a, b, singularity.left_exponent, settings);
    }
    if (right && !left) {
        return right_transformed(f, a, b, singularity.right_exponent, settings);
    }
    const double mid = 0.5 * (a + b);
    QuadratureResult lo = left_transformed(f, a, mid, singularity.left_exponent, settings);
    QuadratureResult hi = right_transformed(f, mid, b, singularity.right_exponent, settings);
    QuadratureResult out;
    out.value = lo.value + hi.value;
    out.error_bound = lo.error_bound + hi.error_bound;
    out.evaluations = lo.evaluations + hi.evaluations;
    out.converged = lo.converged && hi.converged;
    return out;
}

double integrate_or_throw(const Integrand& f, double a, double b,
                          const QuadratureSettings& settings,
                          const EndpointSingularity& singularity) {
    QuadratureResult r = integrate(f, a, b, settings, singularity);
    if (!r.converged) {
        throw ConvergenceError("quadrature tolerance not reached at max depth", r.value,
                               r.error_bound);
    }
    return r.value;
}

} // namespace fracl1
