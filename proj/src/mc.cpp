#include "sgbounds/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sgbounds/parallel.hpp"

namespace sgb {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double q) const {
    if (sorted_.empty()) throw std::logic_error("EmpiricalCdf: empty sample");
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), q);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::left(double q) const {
    if (sorted_.empty()) throw std::logic_error("EmpiricalCdf: empty sample");
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), q);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

void RateParams::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("RateParams: alpha must be positive");
    if (!(eta >= 0.0)) throw std::invalid_argument("RateParams: eta must be nonnegative");
}

double sinr_sample(const DistanceSequence& dists, std::span<const double> powers, double mu, double delta,
                   bool compensate) {
    if (powers.size() != dists.size()) throw std::invalid_argument("sinr_sample: powers and distances differ in length");
    if (dists.size() == 0) throw std::invalid_argument("sinr_sample: empty distance sequence");
    if (!(delta >= 0.0)) throw std::invalid_argument("sinr_sample: delta must be nonnegative");

    const double d1 = dists.d[0];
    double denom = 0.0;
    for (std::size_t k = 1; k < dists.size(); ++k) denom += powers[k] * std::pow(d1 / dists.d[k], mu);
    const double d1_mu = std::pow(d1, mu);
    if (compensate) denom += dists.tail_mean * d1_mu;
    denom += delta * d1_mu;
    if (!(denom > 0.0)) throw std::domain_error("sinr_sample: zero interference-plus-noise");
    return powers[0] / denom;
}

double sinr_realization(const NetworkConfig& cfg, FadingModel model, std::uint64_t index) {
    RandomStream rng(cfg.seed, index);
    const DistanceSequence dists = sample_distances(cfg, rng);
    const std::vector<double> powers = draw_powers(model, dists.size(), rng);
    return sinr_sample(dists, powers, cfg.mu, cfg.delta, cfg.truncation.compensate);
}

SinrSampleSet run_mc(const NetworkConfig& cfg, FadingModel model, std::size_t n, unsigned threads) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("run_mc: need at least one realization");
    SinrSampleSet out;
    out.cfg = cfg;
    out.model = model;
    out.samples.resize(n);
    parallel_for(n, threads, [&](std::size_t i) { out.samples[i] = sinr_realization(cfg, model, i); });
    return out;
}

namespace {
template <typename Fn>
Estimate sample_mean(std::span<const double> samples, Fn&& transform) {
    if (samples.empty()) throw std::invalid_argument("empty sample");
    // Welford keeps the SE accurate for heavy-tailed transforms.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double x : samples) {
        const double v = transform(x);
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
    }
    const double n = static_cast<double>(samples.size());
    const double var = samples.size() > 1 ? m2 / (n - 1.0) : 0.0;
    return {mean, std::sqrt(var / n)};
}
}  // namespace

Estimate mean_shannon_rate(std::span<const double> samples, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("mean_shannon_rate: alpha must be positive");
    return sample_mean(samples, [alpha](double q) { return std::log2(1.0 + alpha * q); });
}

Estimate mean_shannon_rate(const SinrSampleSet& set, double alpha) { return mean_shannon_rate(set.samples, alpha); }

Estimate mean_inverse(std::span<const double> samples) {
    return sample_mean(samples, [](double q) { return 1.0 / q; });
}

Estimate outage_rate(const EmpiricalCdf& cdf, const RateParams& params) {
    params.validate();
    const double rate = std::log2(1.0 + params.eta);
    const double success = 1.0 - cdf(params.eta / params.alpha);
    const double n = static_cast<double>(cdf.size());
    return {success * rate, rate * std::sqrt(success * (1.0 - success) / n)};
}

Estimate outage_rate(const SinrSampleSet& set, const RateParams& params) {
    return outage_rate(EmpiricalCdf(set.samples), params);
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_distance: empty sample");
    const auto xa = a.sorted();
    const auto xb = b.sorted();
    const double na = static_cast<double>(xa.size());
    const double nb = static_cast<double>(xb.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0.0;
    while (i < xa.size() || j < xb.size()) {
        double x;
        if (j >= xb.size() || (i < xa.size() && xa[i] <= xb[j]))
            x = xa[i];
        else
            x = xb[j];
        while (i < xa.size() && xa[i] == x) ++i;
        while (j < xb.size() && xb[j] == x) ++j;
        worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return worst;
}

double ks_distance(const EmpiricalCdf& a, const std::function<double(double)>& cdf) {
    if (a.empty()) throw std::invalid_argument("ks_distance: empty sample");
    const auto xs = a.sorted();
    const double n = static_cast<double>(xs.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        worst = std::max({worst, std::abs(static_cast<double>(i + 1) / n - f), std::abs(f - static_cast<double>(i) / n)});
    }
    return worst;
}

double sup_distance_on_grid(const EmpiricalCdf& a, std::span<const double> grid, std::span<const double> values) {
    if (grid.size() != values.size()) throw std::invalid_argument("sup_distance_on_grid: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(a(grid[i]) - values[i]));
    return worst;
}

double ks_critical_two_sample(std::size_t n, std::size_t m, double level) {
    if (n == 0 || m == 0 || !(level > 0.0 && level < 1.0))
        throw std::invalid_argument("ks_critical_two_sample: bad arguments");
    const double c = std::sqrt(-0.5 * std::log(0.5 * level));
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return c * std::sqrt((nn + mm) / (nn * mm));
}

}  // namespace sgb
