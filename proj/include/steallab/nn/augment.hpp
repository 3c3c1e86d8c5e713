#pragma once

#include "steallab/rng.hpp"
#include "steallab/tensor.hpp"

namespace steallab {

struct AugmentPolicy {
    int max_shift = 0;
    bool allow_flip = false;
    bool active() const { return max_shift > 0 || allow_flip; }
};

// Shifts one (H,W,C) image in place by (dy,dx) with zero padding.
void shift_image(std::span<double> img, std::size_t h, std::size_t w, std::size_t c, int dy,
                 int dx);

// Mirrors one (H,W,C) image horizontally in place.
void flip_horizontal(std::span<double> img, std::size_t h, std::size_t w, std::size_t c);

// Independently shifts (uniform integer offsets in [-max_shift, +max_shift]
// per axis, zero padded) and, when allowed, flips each image with probability
// one half. Expects a square channels-last batch (N,H,W,C).
Tensor augment_batch(const Tensor& batch, const AugmentPolicy& policy, Rng& rng);

}  // namespace steallab
