#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sgbounds/channel.hpp"
#include "sgbounds/geometry.hpp"

namespace sgb {

/// A Monte Carlo estimate with its standard error.
struct Estimate {
    double value = 0.0;
    double se = 0.0;
};

struct SinrSampleSet {
    std::vector<double> samples;
    NetworkConfig cfg;
    FadingModel model = FadingModel::NonFading;

    std::size_t n() const { return samples.size(); }
};

/// Step-function CDF of a sample, F(q) = #{x_i <= q} / n.
class EmpiricalCdf {
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    double operator()(double q) const;
    /// Left limit F(q-) = #{x_i < q} / n.
    double left(double q) const;

    std::span<const double> sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }
    bool empty() const { return sorted_.empty(); }

private:
    std::vector<double> sorted_;
};

struct RateParams {
    double alpha = 1.0;  // beamforming gain, linear
    double eta = 1.0;    // target SINR, linear

    void validate() const;
};

/// p_1 d_1^-mu / (sum_{k>=2} p_k d_k^-mu + tail + delta), evaluated in units of
/// d_1 so the result is invariant under a common rescaling of distances.
/// `tail` is dists.tail_mean when compensate is set, zero otherwise.
double sinr_sample(const DistanceSequence& dists, std::span<const double> powers, double mu, double delta,
                   bool compensate = true);

/// One realization on stream `index`: distances, then powers, then SINR.
double sinr_realization(const NetworkConfig& cfg, FadingModel model, std::uint64_t index);

/// n independent realizations, realization i on RandomStream(cfg.seed, i).
/// threads = 0 uses every hardware thread; output is identical for any count.
SinrSampleSet run_mc(const NetworkConfig& cfg, FadingModel model, std::size_t n, unsigned threads = 0);

/// Sample mean and SE of log2(1 + alpha * Q).
Estimate mean_shannon_rate(const SinrSampleSet& set, double alpha);
Estimate mean_shannon_rate(std::span<const double> samples, double alpha);

/// Sample mean and SE of 1/Q.
Estimate mean_inverse(std::span<const double> samples);

/// (1 - F(eta/alpha)) * log2(1 + eta) with the binomial SE.
Estimate outage_rate(const EmpiricalCdf& cdf, const RateParams& params);
Estimate outage_rate(const SinrSampleSet& set, const RateParams& params);

/// Two-sample Kolmogorov-Smirnov statistic over the union of jump points.
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// One-sample statistic against a continuous CDF, checked on both sides of
/// every jump.
double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf);

/// Largest |F_hat(q) - values[i]| over a grid.
double sup_distance_on_grid(const EmpiricalCdf& a, std::span<const double> grid, std::span<const double> values);

/// Asymptotic two-sample KS critical value c(level) * sqrt((n+m)/(n m)).
double ks_critical_two_sample(std::size_t n, std::size_t m, double level);

}  // namespace sgb
