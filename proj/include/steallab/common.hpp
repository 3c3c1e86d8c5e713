#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace steallab {

// A length-K probability distribution: components in [0,1], summing to 1.
using ProbVector = std::vector<double>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prob_vector(std::span<const double> v, double tol = 1e-9) {
    double sum = 0.0;
    for (double x : v) {
        if (!std::isfinite(x) || x < 0.0 || x > 1.0 + tol) return false;
        sum += x;
    }
    return std::abs(sum - 1.0) <= tol;
}

// Index of the largest component; ties broken by lowest index.
inline std::size_t argmax(std::span<const double> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

}  // namespace steallab
