#pragma once

#include <string>

#include "steallab/tensor.hpp"

namespace steallab {

enum class LossKind { cross_entropy_soft, mse, kl };

std::string to_string(LossKind k);
LossKind loss_kind_from_string(const std::string& s);

// Batch-averaged loss between predicted distributions and (soft) targets.
// Log arguments are clipped at 1e-12.
double loss_value(LossKind kind, const Tensor& probs, const Tensor& targets);

// dL/dprobs for the same batch-averaged loss.
Tensor loss_grad(LossKind kind, const Tensor& probs, const Tensor& targets);

}  // namespace steallab
