#pragma once

#include "fracl1/errors.hpp"

#include <vector>

namespace fracl1 {

/// Uniform time grid t_n = n*tau on [0, T] with tau = T/N.
///
/// Nodes are computed as T*(n/N) rather than n*(T/N): the quotient n/N is the
/// correctly rounded value of the real number n/N, so refining by an integer
/// factor reproduces every coarse node bit-exactly (n/N == (n*f)/(N*f) as reals).
class UniformGrid {
public:
    UniformGrid(double horizon, int steps) : horizon_(horizon), steps_(steps) {
        if (!(horizon > 0.0)) {
            throw ParameterError("grid horizon T must be positive");
        }
        if (steps < 1) {
            throw ParameterError("grid step count N must be at least 1");
        }
    }

    double horizon() const { return horizon_; }
    int steps() const { return steps_; }
    double step() const { return horizon_ / static_cast<double>(steps_); }

    double node(int n) const {
        return horizon_ * (static_cast<double>(n) / static_cast<double>(steps_));
    }

    std::vector<double> nodes() const {
        std::vector<double> out(static_cast<std::size_t>(steps_) + 1);
        for (int n = 0; n <= steps_; ++n) {
            out[static_cast<std::size_t>(n)] = node(n);
        }
        return out;
    }

    /// Same horizon, factor times as many steps. Coarse node n coincides
    /// bit-exactly with fine node n*factor.
    UniformGrid refined(int factor) const {
        if (factor < 2) {
            throw ParameterError("refinement factor must be at least 2");
        }
        return UniformGrid(horizon_, steps_ * factor);
    }

    friend bool operator==(const UniformGrid& a, const UniformGrid& b) {
        return a.horizon_ == b.horizon_ && a.steps_ == b.steps_;
    }

private:
    double horizon_;
    int steps_;
};

} // namespace fracl1
