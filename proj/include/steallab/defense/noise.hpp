#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "steallab/common.hpp"
#include "steallab/rng.hpp"

namespace steallab {

enum class DefenseKind {
    none,
    reverse_sigmoid,
    uniform_random,
    uniform_x_concave,
    uniform_x_convex,
    ranking_preserving_uniform,
    sine,
};

std::string to_string(DefenseKind k);
DefenseKind defense_kind_from_string(const std::string& s);

struct DefenseConfig {
    DefenseKind kind = DefenseKind::none;
    double beta = 0.8;       // perturbation magnitude
    double gamma = 8.0;      // reverse-sigmoid convergence
    double rho_width = 0.5;  // width of the concave/convex multipliers
    double f_freq = 4.0;     // sine frequency
    bool rank_clamp = false;
    double clip_eps = 1e-7;
    std::uint64_t noise_seed = 0;

    void validate() const;
    bool stochastic() const {
        return kind == DefenseKind::uniform_random || kind == DefenseKind::uniform_x_concave ||
               kind == DefenseKind::uniform_x_convex ||
               kind == DefenseKind::ranking_preserving_uniform;
    }
};

// The deceptive perturbation beta * (s(gamma * s^-1(y)) - 1/2). Antisymmetric
// about y = 0.5 and strictly bounded by beta/2 in magnitude.
double reverse_sigmoid_noise(double y, double beta, double gamma);

// Derivative of reverse_sigmoid_noise with respect to y (used when the same
// layer sits inside a trained network).
double reverse_sigmoid_noise_ddy(double y, double beta, double gamma);

// Per-class additive noise for the five baseline defenses. The uniform family
// draws from rng; sine is deterministic.
double baseline_noise(double y, DefenseKind kind, double beta, double rho_width, double f_freq,
                      Rng& rng);

// Clips the raw perturbed values to >= clip_eps and rescales them to sum to 1.
// With rank_clamp the clipped values are reassigned so their order follows the
// original ordering of y exactly.
ProbVector finalize_probs(std::span<const double> y, std::span<const double> raw_perturbed,
                          bool rank_clamp, double clip_eps);

// y - r(y) with the input clipped into the logit domain first; the scalar map
// whose non-monotonicity gives the defense its two-preimage ambiguity.
double perturbed_value(double y, double beta, double gamma, double clip_eps);

// Applies `cfg` to a single base output vector. `sample_hash` keys the noise
// stream of the stochastic kinds so identical queries always receive identical
// answers.
ProbVector apply_defense(std::span<const double> y, const DefenseConfig& cfg,
                         std::uint64_t sample_hash);

}  // namespace steallab
