#include "steallab/defense/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "steallab/nn/functions.hpp"

namespace steallab {

std::string to_string(DefenseKind k) {
    switch (k) {
        case DefenseKind::none: return "none";
        case DefenseKind::reverse_sigmoid: return "reverse_sigmoid";
        case DefenseKind::uniform_random: return "uniform_random";
        case DefenseKind::uniform_x_concave: return "uniform_x_concave";
        case DefenseKind::uniform_x_convex: return "uniform_x_convex";
        case DefenseKind::ranking_preserving_uniform: return "ranking_preserving_uniform";
        case DefenseKind::sine: return "sine";
    }
    return "none";
}

DefenseKind defense_kind_from_string(const std::string& s) {
    if (s == "none") return DefenseKind::none;
    if (s == "reverse_sigmoid") return DefenseKind::reverse_sigmoid;
    if (s == "uniform_random") return DefenseKind::uniform_random;
    if (s == "uniform_x_concave") return DefenseKind::uniform_x_concave;
    if (s == "uniform_x_convex") return DefenseKind::uniform_x_convex;
    if (s == "ranking_preserving_uniform") return DefenseKind::ranking_preserving_uniform;
    if (s == "sine") return DefenseKind::sine;
    throw ConfigError("unknown defense kind: " + s);
}

void DefenseConfig::validate() const {
    if (kind != DefenseKind::none && beta <= 0.0)
        throw ConfigError("defense beta must be positive");
    if (kind == DefenseKind::reverse_sigmoid && gamma <= 0.0)
        throw ConfigError("defense gamma must be positive");
    if ((kind == DefenseKind::uniform_x_concave || kind == DefenseKind::uniform_x_convex) &&
        rho_width <= 0.0)
        throw ConfigError("defense rho_width must be positive");
    if (kind == DefenseKind::sine && f_freq <= 0.0)
        throw ConfigError("defense f_freq must be positive");
    if (!(clip_eps > 0.0 && clip_eps <= 1e-3))
        throw ConfigError("defense clip_eps must lie in (0, 1e-3]");
}

double reverse_sigmoid_noise(double y, double beta, double gamma) {
    if (!(y > 0.0 && y < 1.0))
        throw DomainError("reverse_sigmoid_noise: y must lie in (0,1)");
    return beta * (sigmoid(gamma * logit(y)) - 0.5);
}

double reverse_sigmoid_noise_ddy(double y, double beta, double gamma) {
    // d/dy beta*(s(gamma*logit(y)) - 1/2) = beta*gamma*s'(gamma*logit(y)) / (y(1-y))
    return beta * gamma * sigmoid_derivative(gamma * logit(y)) / (y * (1.0 - y));
}

double baseline_noise(double y, DefenseKind kind, double beta, double rho_width, double f_freq,
                      Rng& rng) {
    switch (kind) {
        case DefenseKind::uniform_random:
        case DefenseKind::ranking_preserving_uniform:
            return beta * rng.uniform_pm1();
        case DefenseKind::uniform_x_concave: {
            double t = y / rho_width;
            return beta * rng.uniform_pm1() * (1.0 / std::exp(-0.5 * t * t));
        }
        case DefenseKind::uniform_x_convex: {
            double t = y / rho_width;
            return beta * rng.uniform_pm1() * (1.0 - 1.0 / std::exp(-0.5 * t * t));
        }
        case DefenseKind::sine:
            return beta * std::sin(f_freq * y);
        default:
            throw ConfigError("baseline_noise: not a baseline defense kind");
    }
}

ProbVector finalize_probs(std::span<const double> y, std::span<const double> raw_perturbed,
                          bool rank_clamp, double clip_eps) {
    const std::size_t k = y.size();
    if (raw_perturbed.size() != k)
        throw ShapeError("finalize_probs: size mismatch");

    ProbVector out(k);
    for (std::size_t j = 0; j < k; ++j)
        out[j] = std::max(raw_perturbed[j], clip_eps);

    if (rank_clamp) {
        // Sort positions by original probability (desc, ties by lower index)
        // and hand out the sorted perturbed values in that order.
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
        std::vector<double> vals = out;
        std::sort(vals.begin(), vals.end(), std::greater<double>());
        for (std::size_t r = 0; r < k; ++r) out[order[r]] = vals[r];
    }

    double sum = std::accumulate(out.begin(), out.end(), 0.0);
    for (double& v : out) v /= sum;
    return out;
}

double perturbed_value(double y, double beta, double gamma, double clip_eps) {
    double yc = std::clamp(y, clip_eps, 1.0 - clip_eps);
    return yc - reverse_sigmoid_noise(yc, beta, gamma);
}

ProbVector apply_defense(std::span<const double> y, const DefenseConfig& cfg,
                         std::uint64_t sample_hash) {
    const std::size_t k = y.size();
    if (cfg.kind == DefenseKind::none) {
        ProbVector out(y.begin(), y.end());
        return out;
    }

    std::vector<double> raw(k);
    if (cfg.kind == DefenseKind::reverse_sigmoid) {
        for (std::size_t j = 0; j < k; ++j)
            raw[j] = perturbed_value(y[j], cfg.beta, cfg.gamma, cfg.clip_eps);
    } else {
        Rng rng(splitmix64(cfg.noise_seed ^ sample_hash));
        for (std::size_t j = 0; j < k; ++j)
            raw[j] = y[j] + baseline_noise(y[j], cfg.kind, cfg.beta, cfg.rho_width, cfg.f_freq, rng);
    }

    bool clamp = cfg.rank_clamp || cfg.kind == DefenseKind::ranking_preserving_uniform;
    return finalize_probs(y, raw, clamp, cfg.clip_eps);
}

}  // namespace steallab
