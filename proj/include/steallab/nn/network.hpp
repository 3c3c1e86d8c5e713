#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steallab/nn/augment.hpp"
#include "steallab/nn/losses.hpp"
#include "steallab/rng.hpp"
#include "steallab/tensor.hpp"

namespace steallab {

struct LayerSpec {
    enum class Kind { dense, conv3x3, maxpool2x2, relu };
    Kind kind = Kind::dense;
    std::size_t in = 0;   // dense: input features; conv3x3: input channels
    std::size_t out = 0;  // dense: output features; conv3x3: output channels

    static LayerSpec dense(std::size_t in, std::size_t out) {
        return {Kind::dense, in, out};
    }
    static LayerSpec conv3x3(std::size_t in_ch, std::size_t out_ch) {
        return {Kind::conv3x3, in_ch, out_ch};
    }
    static LayerSpec maxpool2x2() { return {Kind::maxpool2x2, 0, 0}; }
    static LayerSpec relu() { return {Kind::relu, 0, 0}; }

    std::string name() const;
    bool operator==(const LayerSpec&) const = default;
};

// Spatial shape of one sample as it flows through the network. Flat vectors
// have h == w == 0; conv3x3 uses zero padding so it keeps (h,w).
struct DataShape {
    std::size_t h = 0, w = 0, c = 0;
    bool image() const { return h > 0; }
    std::size_t count() const { return image() ? h * w * c : c; }
    static DataShape flat(std::size_t d) { return {0, 0, d}; }
    static DataShape img(std::size_t h, std::size_t w, std::size_t c) { return {h, w, c}; }
    bool operator==(const DataShape&) const = default;
};

struct OutputMode {
    enum class Kind { softmax, softmax_reverse_sigmoid };
    Kind kind = Kind::softmax;
    double beta = 0.0;
    double gamma = 0.0;
    double clip_eps = 1e-7;

    static OutputMode softmax() { return {}; }
    static OutputMode softmax_reverse_sigmoid(double beta, double gamma,
                                              double clip_eps = 1e-7) {
        return {Kind::softmax_reverse_sigmoid, beta, gamma, clip_eps};
    }
    bool operator==(const OutputMode&) const = default;
};

struct LayerWeights {
    std::vector<double> w;  // dense: (in,out) row-major; conv: (3,3,in,out)
    std::vector<double> b;  // one per output feature/channel
};

using Gradients = std::vector<LayerWeights>;

enum class OptimizerKind { sgd, rmsprop };

struct OptimizerState {
    OptimizerKind kind = OptimizerKind::sgd;
    double learning_rate = 0.01;
    double decay = 0.9;     // rmsprop accumulator decay
    double epsilon = 1e-8;  // rmsprop denominator floor
    Gradients acc;          // rmsprop squared-gradient accumulators

    static OptimizerState sgd(double lr = 0.01) {
        return {OptimizerKind::sgd, lr, 0.9, 1e-8, {}};
    }
    static OptimizerState rmsprop(double lr = 0.001, double decay = 0.9,
                                  double epsilon = 1e-8) {
        return {OptimizerKind::rmsprop, lr, decay, epsilon, {}};
    }
};

std::string to_string(OptimizerKind k);
OptimizerKind optimizer_kind_from_string(const std::string& s);

// Everything the backward pass needs from a forward pass.
struct ForwardTrace {
    std::vector<Tensor> acts;             // acts[0] = input, acts[i+1] = layer i output
    std::vector<std::vector<std::size_t>> pool_argmax;  // per pool layer, flat source indices
    Tensor probs_softmax;                 // after softmax
    Tensor probs_final;                   // after output mode (== probs_softmax for softmax)
};

// Feedforward classifier: dense / 3x3 same-padded conv / 2x2 max-pool / relu
// layers ending in a softmax, optionally composed with the reverse-sigmoid
// perturbation as part of the model itself.
class Network {
public:
    Network() = default;
    Network(DataShape input, std::vector<LayerSpec> layers, OutputMode mode,
            std::uint64_t rng_seed);

    const std::vector<LayerSpec>& layers() const { return layers_; }
    const DataShape& input_shape() const { return input_; }
    std::size_t num_classes() const { return num_classes_; }
    const OutputMode& output_mode() const { return output_mode_; }
    void set_output_mode(OutputMode m) { output_mode_ = m; }
    std::uint64_t rng_seed() const { return rng_seed_; }

    std::vector<LayerWeights>& weights() { return weights_; }
    const std::vector<LayerWeights>& weights() const { return weights_; }

    // Batch forward pass; returns one probability vector per row.
    Tensor forward(const Tensor& batch) const;
    ForwardTrace forward_trace(const Tensor& batch) const;

    // Batch-averaged loss and backprop weight gradients.
    std::pair<double, Gradients> loss_and_gradients(const Tensor& batch, const Tensor& targets,
                                                    LossKind loss) const;

    // d(output probability of class_index) / d(input), same shape as x.
    Tensor input_jacobian(const Tensor& x, std::size_t class_index) const;

    // Minibatch optimization; returns the per-step loss trace.
    std::vector<double> train(const Tensor& inputs, const Tensor& targets, std::size_t steps,
                              std::size_t batch_size, LossKind loss, OptimizerState& opt,
                              const AugmentPolicy& augment, Rng& rng);

    void apply_gradients(const Gradients& grads, OptimizerState& opt);

    void save(const std::string& path) const;
    static Network load(const std::string& path);

    bool same_weights(const Network& other) const;

private:
    // Backward pass from dL/d(final probs); returns per-layer weight grads and
    // optionally the gradient w.r.t. the input batch.
    Gradients backward(const ForwardTrace& trace, const Tensor& dprobs,
                       Tensor* input_grad) const;

    Tensor batch_as_input(const Tensor& batch) const;
    void check_finite_or_throw(const ForwardTrace& trace, double loss) const;

    DataShape input_;
    std::vector<LayerSpec> layers_;
    std::vector<DataShape> shapes_;  // shape after each layer
    std::vector<LayerWeights> weights_;
    OutputMode output_mode_;
    std::size_t num_classes_ = 0;
    std::uint64_t rng_seed_ = 0;
};

}  // namespace steallab
