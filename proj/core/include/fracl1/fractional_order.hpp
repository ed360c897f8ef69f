#pragma once

#include "fracl1/errors.hpp"

namespace fracl1 {

/// Fractional differentiation order alpha, restricted to the open interval (0, 1).
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha < 1.0)) {
            throw ParameterError("fractional order alpha must satisfy 0 < alpha < 1");
        }
    }

    double value() const { return alpha_; }

private:
    double alpha_;
};

} // namespace fracl1
