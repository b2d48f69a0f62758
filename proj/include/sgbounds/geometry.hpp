#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgbounds/rng.hpp"

namespace sgb {

/// How far the radial PPP sweep runs before the remaining points are replaced
/// by their Campbell mean.
struct TruncationPolicy {
    std::size_t k_min = 500;
    std::size_t k_max = 1000000;  // hard stop; reaching it without meeting the tolerance throws
    double tail_rel_tol = 1e-2;
    bool compensate = true;

    void validate() const;
};

struct NetworkConfig {
    double lambda = 1.0;  // BS density, points per unit area
    double mu = 3.7;      // path-loss exponent
    double delta = 0.0;   // noise power over transmit power, linear
    TruncationPolicy truncation{};
    std::uint64_t seed = 1;

    void validate() const;
};

/// Ordered distances d_1 < d_2 < ... < d_K from the typical user, plus the
/// mean interference 2*pi*lambda*d_K^(2-mu)/(mu-2) of every point beyond d_K.
struct DistanceSequence {
    std::vector<double> d;
    double tail_mean = 0.0;

    std::size_t size() const { return d.size(); }
};

double tail_interference_mean(double lambda, double mu, double d_last);

/// Radial PPP sweep: pi*lambda*d_k^2 are the arrival times of a unit-rate
/// Poisson process. Stops once k >= k_min and the tail mean is at most
/// tail_rel_tol times the accumulated interference sum_{k>=2} d_k^-mu.
DistanceSequence sample_distances(const NetworkConfig& cfg, RandomStream& rng);

/// Same sweep driven by an arbitrary source of unit exponentials.
DistanceSequence sample_distances(const NetworkConfig& cfg, const std::function<double()>& unit_exponential);

/// f(x) = 2 pi lambda x exp(-pi lambda x^2).
double nearest_pdf(double x, double lambda);

/// Pr{d_1 <= x} = 1 - exp(-pi lambda x^2).
double nearest_cdf(double x, double lambda);

struct Point {
    double x;
    double y;
};

/// Homogeneous PPP on the square [-side/2, side/2]^2 centred on the user.
std::vector<Point> emit_realization(const NetworkConfig& cfg, double side, RandomStream& rng);

}  // namespace sgb
