#include "steallab/nn/augment.hpp"

#include <algorithm>
#include <vector>

namespace steallab {

void shift_image(std::span<double> img, std::size_t h, std::size_t w, std::size_t c, int dy,
                 int dx) {
    if (dy == 0 && dx == 0) return;
    std::vector<double> src(img.begin(), img.end());
    std::fill(img.begin(), img.end(), 0.0);
    for (std::size_t y = 0; y < h; ++y) {
        long long sy = static_cast<long long>(y) - dy;
        if (sy < 0 || sy >= static_cast<long long>(h)) continue;
        for (std::size_t x = 0; x < w; ++x) {
            long long sx = static_cast<long long>(x) - dx;
            if (sx < 0 || sx >= static_cast<long long>(w)) continue;
            for (std::size_t ch = 0; ch < c; ++ch)
                img[(y * w + x) * c + ch] = src[(sy * w + sx) * c + ch];
        }
    }
}

void flip_horizontal(std::span<double> img, std::size_t h, std::size_t w, std::size_t c) {
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w / 2; ++x)
            for (std::size_t ch = 0; ch < c; ++ch)
                std::swap(img[(y * w + x) * c + ch], img[(y * w + (w - 1 - x)) * c + ch]);
}

Tensor augment_batch(const Tensor& batch, const AugmentPolicy& policy, Rng& rng) {
    if (batch.rank() != 4)
        throw ShapeError("augment_batch: expected (N,H,W,C) batch, got " + batch.shape_str());
    const std::size_t h = batch.dim(1), w = batch.dim(2), c = batch.dim(3);
    if (h != w) throw ShapeError("augment_batch: images must be square");
    if (policy.max_shift >= static_cast<int>(h))
        throw ShapeError("augment_batch: max_shift must be smaller than the image side");

    Tensor out = batch;
    if (!policy.active()) return out;
    for (std::size_t i = 0; i < out.rows(); ++i) {
        auto img = out.row(i);
        int dy = 0, dx = 0;
        if (policy.max_shift > 0) {
            dy = static_cast<int>(rng.int_range(-policy.max_shift, policy.max_shift));
            dx = static_cast<int>(rng.int_range(-policy.max_shift, policy.max_shift));
        }
        shift_image(img, h, w, c, dy, dx);
        if (policy.allow_flip && rng.real01() < 0.5) flip_horizontal(img, h, w, c);
    }
    return out;
}

}  // namespace steallab
