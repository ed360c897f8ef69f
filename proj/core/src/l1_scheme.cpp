#include "fracl1/l1_scheme.hpp"

#include <cmath>
#include <limits>

namespace fracl1 {

L1Coefficients::L1Coefficients(FractionalOrder alpha, int count) : alpha_(alpha.value()) {
    if (count < 1) {
        throw ParameterError("coefficient count must be at least 1");
    }
    b_.resize(static_cast<std::size_t>(count));
    const double e = 1.0 - alpha_;
    for (int i = 0; i < count; ++i) {
        const double ip = static_cast<double>(i);
        b_[static_cast<std::size_t>(i)] = std::pow(ip + 1.0, e) - std::pow(ip, e);
    }
}

DiscreteDerivative::DiscreteDerivative(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.steps()) + 1) {
        throw ParameterError("discrete derivative storage must have N+1 entries");
    }
}

namespace {

void check_samples(const UniformGrid& grid, std::span<const double> samples) {
    if (samples.size() != static_cast<std::size_t>(grid.steps()) + 1) {
        throw ParameterError("sample count must equal N+1");
    }
    for (double v : samples) {
        if (!std::isfinite(v)) {
            throw ParameterError("samples must be finite");
        }
    }
}

} // namespace

double l1_history_term(const L1Coefficients& coeffs, std::span<const double> samples, int n) {
    double h = coeffs[n - 1] * samples[0];
    for (int i = 1; i < n; ++i) {
        h += (coeffs[n - i - 1] - coeffs[n - i]) * samples[static_cast<std::size_t>(i)];
    }
    return h;
}

DiscreteDerivative l1_apply(FractionalOrder alpha, const UniformGrid& grid,
                            std::span<const double> samples) {
    check_samples(grid, samples);
    const int n_steps = grid.steps();
    const double tau = grid.step();
    const double scale = std::pow(tau, -alpha.value()) / std::tgamma(2.0 - alpha.value());
    const L1Coefficients coeffs(alpha, n_steps);

    std::vector<double> values(static_cast<std::size_t>(n_steps) + 1,
                               std::numeric_limits<double>::quiet_NaN());
    for (int n = 1; n <= n_steps; ++n) {
        const double h = l1_history_term(coeffs, samples, n);
        values[static_cast<std::size_t>(n)] = scale * (samples[static_cast<std::size_t>(n)] - h);
    }
    return DiscreteDerivative(grid, std::move(values));
}

DiscreteDerivative l1_apply_integrated(FractionalOrder alpha, const UniformGrid& grid,
                                       std::span<const double> samples) {
    check_samples(grid, samples);
    const int n_steps = grid.steps();
    const double tau = grid.step();
    const double e = 1.0 - alpha.value();
    const double scale = 1.0 / (tau * std::tgamma(1.0 - alpha.value()));

    std::vector<double> values(static_cast<std::size_t>(n_steps) + 1,
                               std::numeric_limits<double>::quiet_NaN());
    for (int n = 1; n <= n_steps; ++n) {
        const double tn = grid.node(n);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double kernel =
                (std::pow(tn - grid.node(j), e) - std::pow(tn - grid.node(j + 1), e)) / e;
            acc += (samples[static_cast<std::size_t>(j) + 1] - samples[static_cast<std::size_t>(j)]) *
                   kernel;
        }
        values[static_cast<std::size_t>(n)] = scale * acc;
    }
    return DiscreteDerivative(grid, std::move(values));
}

double l1_apply_single(FractionalOrder alpha, const UniformGrid& grid,
                       std::span<const double> samples, int n) {
    check_samples(grid, samples);
    if (n < 1 || n > grid.steps()) {
        throw DomainError("node index must satisfy 1 <= n <= N");
    }
    const double tau = grid.step();
    const double scale = std::pow(tau, -alpha.value()) / std::tgamma(2.0 - alpha.value());
    const L1Coefficients coeffs(alpha, n);
    const double h = l1_history_term(coeffs, samples, n);
    return scale * (samples[static_cast<std::size_t>(n)] - h);
}

} // namespace fracl1
