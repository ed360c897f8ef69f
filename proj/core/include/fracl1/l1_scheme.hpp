#pragma once

#include "fracl1/errors.hpp"
#include "fracl1/fractional_order.hpp"
#include "fracl1/grid.hpp"

#include <span>
#include <vector>

namespace fracl1 {

/// L1 convolution weights b_i = (i+1)^{1-alpha} - i^{1-alpha}.
/// b_0 = 1 exactly; the sequence is positive and strictly decreasing.
class L1Coefficients {
public:
    L1Coefficients(FractionalOrder alpha, int count);

    double alpha() const { return alpha_; }
    int size() const { return static_cast<int>(b_.size()); }
    double operator[](int i) const { return b_[static_cast<std::size_t>(i)]; }
    std::span<const double> values() const { return b_; }

private:
    double alpha_;
    std::vector<double> b_;
};

/// delta_tau^alpha y at the grid nodes. Entry n holds the value at t_n for
/// n = 1..N; the operator is undefined at t_0 and entry 0 is not a valid query.
class DiscreteDerivative {
public:
    DiscreteDerivative(UniformGrid grid, std::vector<double> values);

    const UniformGrid& grid() const { return grid_; }
    int size() const { return grid_.steps(); }

    double at(int n) const {
        if (n < 1 || n > grid_.steps()) {
            throw DomainError("discrete Caputo derivative is defined for n = 1..N only");
        }
        return values_[static_cast<std::size_t>(n)];
    }

    /// Raw storage, length N+1; index 0 is a NaN placeholder.
    std::span<const double> raw() const { return values_; }

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

/// Discrete Caputo operator in coefficient form:
///   delta(t_n) = tau^{-a}/Gamma(2-a) * (y_n - b_{n-1} y_0
///                - sum_{i=1}^{n-1} (b_{n-i-1} - b_{n-i}) y_i),
/// direct O(N^2) summation.
DiscreteDerivative l1_apply(FractionalOrder alpha, const UniformGrid& grid,
                            std::span<const double> samples);

/// Same operator via the integrated form: sum over intervals of the backward
/// difference quotient u_j times the exact kernel integral
/// [(t_n-t_j)^{1-a} - (t_n-t_{j+1})^{1-a}]/(1-a), scaled by 1/Gamma(1-a).
/// Algebraically identical to l1_apply; a genuinely different rounding path
/// used for cross-checking.
DiscreteDerivative l1_apply_integrated(FractionalOrder alpha, const UniformGrid& grid,
                                       std::span<const double> samples);

/// Single entry of l1_apply without materializing the full sequence.
double l1_apply_single(FractionalOrder alpha, const UniformGrid& grid,
                       std::span<const double> samples, int n);

/// History term H_n = b_{n-1} y_0 + sum_{i=1}^{n-1} (b_{n-i-1} - b_{n-i}) y_i.
/// Needs samples y_0..y_{n-1}; shared by l1_apply_single and the FODE stepper.
double l1_history_term(const L1Coefficients& coeffs, std::span<const double> samples, int n);

} // namespace fracl1
