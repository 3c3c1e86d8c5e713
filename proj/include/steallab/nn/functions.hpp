#pragma once

#include <cmath>
#include <span>

#include "steallab/common.hpp"

namespace steallab {

// Logistic sigmoid 1 / (1 + e^-x).
inline double sigmoid(double x) {
    if (x >= 0.0) {
        double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    double e = std::exp(x);
    return e / (1.0 + e);
}

// Inverse sigmoid ln(y / (1-y)); defined on the open interval (0,1).
inline double logit(double y) {
    if (!(y > 0.0 && y < 1.0)) throw DomainError("logit: argument must lie in (0,1)");
    return std::log(y / (1.0 - y));
}

inline double sigmoid_derivative(double x) {
    double s = sigmoid(x);
    return s * (1.0 - s);
}

// In-place stable softmax over one sample.
inline void softmax_inplace(std::span<double> v) {
    if (v.size() < 2) throw ShapeError("softmax: need at least 2 classes");
    double mx = v[0];
    for (double x : v) {
        if (!std::isfinite(x)) throw DomainError("softmax: non-finite logit");
        if (x > mx) mx = x;
    }
    double sum = 0.0;
    for (double& x : v) {
        x = std::exp(x - mx);
        sum += x;
    }
    for (double& x : v) x /= sum;
}

inline ProbVector softmax(std::span<const double> logits) {
    ProbVector out(logits.begin(), logits.end());
    softmax_inplace(out);
    return out;
}

}  // namespace steallab
