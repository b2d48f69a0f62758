#include "sgbounds/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgbounds/numerics.hpp"

namespace sgb {

void TruncationPolicy::validate() const {
    if (k_min < 2) throw std::invalid_argument("TruncationPolicy: k_min must be at least 2");
    if (k_max < k_min) throw std::invalid_argument("TruncationPolicy: k_max must be at least k_min");
    if (!(tail_rel_tol > 0.0)) throw std::invalid_argument("TruncationPolicy: tail_rel_tol must be positive");
}

void NetworkConfig::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("NetworkConfig: lambda must be positive");
    if (!(mu > 2.0) || !std::isfinite(mu))
        throw std::invalid_argument("NetworkConfig: mu must exceed 2 (aggregate interference diverges otherwise)");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw std::invalid_argument("NetworkConfig: delta must be nonnegative");
    truncation.validate();
}

double tail_interference_mean(double lambda, double mu, double d_last) {
    return 2.0 * std::numbers::pi * lambda * std::pow(d_last, 2.0 - mu) / (mu - 2.0);
}

DistanceSequence sample_distances(const NetworkConfig& cfg, const std::function<double()>& unit_exponential) {
    cfg.validate();
    const double pi_lambda = std::numbers::pi * cfg.lambda;
    const auto& policy = cfg.truncation;

    DistanceSequence out;
    out.d.reserve(policy.k_min);
    double arrival = 0.0;
    double interference = 0.0;
    for (;;) {
        arrival += unit_exponential();
        const double dk = std::sqrt(arrival / pi_lambda);
        out.d.push_back(dk);
        if (out.d.size() >= 2) interference += std::pow(dk, -cfg.mu);
        if (out.d.size() >= policy.k_min) {
            out.tail_mean = tail_interference_mean(cfg.lambda, cfg.mu, dk);
            if (out.tail_mean <= policy.tail_rel_tol * interference) break;
            // The count needed grows like tol^(-2/(mu-2)), unbounded as mu -> 2.
            if (out.d.size() >= policy.k_max)
                throw NumericalError("sample_distances: tail tolerance not met within k_max points; raise "
                                     "tail_rel_tol or k_max",
                                     interference + out.tail_mean, out.tail_mean / interference);
        }
    }
    return out;
}

DistanceSequence sample_distances(const NetworkConfig& cfg, RandomStream& rng) {
    return sample_distances(cfg, [&rng] { return rng.exponential(); });
}

double nearest_pdf(double x, double lambda) {
    if (!(x >= 0.0)) throw std::domain_error("nearest_pdf: x must be nonnegative");
    const double pl = std::numbers::pi * lambda;
    return 2.0 * pl * x * std::exp(-pl * x * x);
}

double nearest_cdf(double x, double lambda) {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::numbers::pi * lambda * x * x);
}

std::vector<Point> emit_realization(const NetworkConfig& cfg, double side, RandomStream& rng) {
    cfg.validate();
    if (!(side > 0.0)) throw std::invalid_argument("emit_realization: window side must be positive");
    const double mean_count = cfg.lambda * side * side;

    // Poisson count via unit-rate arrivals inside [0, mean_count].
    std::size_t count = 0;
    for (double t = rng.exponential(); t <= mean_count; t += rng.exponential()) ++count;

    std::vector<Point> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = (rng.uniform() - 0.5) * side;
        const double y = (rng.uniform() - 0.5) * side;
        pts.push_back({x, y});
    }
    return pts;
}

}  // namespace sgb
