#include "steallab/nn/losses.hpp"

#include <cmath>

namespace steallab {

namespace {
constexpr double kLogClip = 1e-12;
}

std::string to_string(LossKind k) {
    switch (k) {
        case LossKind::cross_entropy_soft: return "cross_entropy_soft";
        case LossKind::mse: return "mse";
        case LossKind::kl: return "kl";
    }
    return "cross_entropy_soft";
}

LossKind loss_kind_from_string(const std::string& s) {
    if (s == "cross_entropy_soft") return LossKind::cross_entropy_soft;
    if (s == "mse") return LossKind::mse;
    if (s == "kl") return LossKind::kl;
    throw ConfigError("unknown loss kind: " + s);
}

double loss_value(LossKind kind, const Tensor& probs, const Tensor& targets) {
    if (probs.shape() != targets.shape())
        throw ShapeError("loss: probs " + probs.shape_str() + " vs targets " +
                         targets.shape_str());
    const std::size_t n = probs.rows();
    const std::size_t k = probs.row_size();
    if (n == 0) throw ShapeError("loss: empty batch");

    double total = 0.0;
    const double* p = probs.data();
    const double* t = targets.data();
    switch (kind) {
        case LossKind::cross_entropy_soft:
            for (std::size_t i = 0; i < n * k; ++i)
                total -= t[i] * std::log(std::max(p[i], kLogClip));
            return total / static_cast<double>(n);
        case LossKind::mse:
            for (std::size_t i = 0; i < n * k; ++i) {
                double d = p[i] - t[i];
                total += d * d;
            }
            return total / static_cast<double>(n * k);
        case LossKind::kl:
            for (std::size_t i = 0; i < n * k; ++i)
                total += t[i] * (std::log(std::max(t[i], kLogClip)) -
                                 std::log(std::max(p[i], kLogClip)));
            return total / static_cast<double>(n);
    }
    return total;
}

Tensor loss_grad(LossKind kind, const Tensor& probs, const Tensor& targets) {
    if (probs.shape() != targets.shape())
        throw ShapeError("loss_grad: shape mismatch");
    const std::size_t n = probs.rows();
    const std::size_t k = probs.row_size();
    Tensor grad(probs.shape());
    const double* p = probs.data();
    const double* t = targets.data();
    double* g = grad.data();
    const double inv_n = 1.0 / static_cast<double>(n);
    switch (kind) {
        case LossKind::cross_entropy_soft:
        case LossKind::kl:
            // Both losses share -t/p as the gradient; kl only shifts the value
            // by the target entropy.
            for (std::size_t i = 0; i < n * k; ++i)
                g[i] = p[i] > kLogClip ? -t[i] / p[i] * inv_n : 0.0;
            break;
        case LossKind::mse: {
            const double scale = 2.0 * inv_n / static_cast<double>(k);
            for (std::size_t i = 0; i < n * k; ++i) g[i] = scale * (p[i] - t[i]);
            break;
        }
    }
    return grad;
}

}  // namespace steallab
