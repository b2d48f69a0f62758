#include "sgbounds/mmimo.hpp"

#include <cmath>
#include <stdexcept>

#include "sgbounds/parallel.hpp"

namespace sgb {

namespace {

constexpr double kHalfSqrt = 0.70710678118654752440;

cplx complex_gaussian(RandomStream& rng) {
    const double re = kHalfSqrt * rng.normal();
    const double im = kHalfSqrt * rng.normal();
    return {re, im};
}

// Interference and noise in units of d_1^-mu, scaled by M.
double scaled_denominator(const MmimoConfig& cfg, const DistanceSequence& dists, const MimoChannelDraw& draw) {
    const double mu = cfg.base.mu;
    const double d1 = dists.d[0];
    double denom = 0.0;
    for (std::size_t k = 1; k < dists.size(); ++k) denom += draw.interferer_gain[k - 1] * std::pow(d1 / dists.d[k], mu);
    const double d1_mu = std::pow(d1, mu);
    if (cfg.base.truncation.compensate) denom += dists.tail_mean * d1_mu;
    denom += cfg.noise_over_power / static_cast<double>(cfg.antennas) * d1_mu;
    if (!(denom > 0.0)) throw std::domain_error("mmimo: zero interference-plus-noise");
    return denom;
}

}  // namespace

void MmimoConfig::validate() const {
    base.validate();
    if (antennas < 1) throw std::invalid_argument("MmimoConfig: need at least one antenna");
    if (!(noise_over_power >= 0.0)) throw std::invalid_argument("MmimoConfig: noise_over_power must be nonnegative");
}

std::vector<cplx> draw_effective_coefficients(std::size_t count, RandomStream& rng) {
    if (count < 1) throw std::invalid_argument("draw_effective_coefficients: need K >= 1");
    std::vector<cplx> out(count - 1);
    for (auto& c : out) c = complex_gaussian(rng);
    return out;
}

MimoChannelDraw draw_mimo_channels(std::size_t antennas, std::span<const cplx> coefficients, RandomStream& rng) {
    if (antennas < 1) throw std::invalid_argument("draw_mimo_channels: need M >= 1");
    MimoChannelDraw out;
    for (std::size_t m = 0; m < antennas; ++m) out.desired_norm2 += std::norm(complex_gaussian(rng));

    out.interferer_gain.resize(coefficients.size());
    std::vector<cplx> own(antennas);
    std::vector<cplx> cross(antennas);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        double own_norm2 = 0.0;
        for (auto& v : own) {
            v = complex_gaussian(rng);
            own_norm2 += std::norm(v);
        }
        const double inv_norm = 1.0 / std::sqrt(own_norm2);
        cplx projection = 0.0;  // u^H z
        for (std::size_t m = 0; m < antennas; ++m) {
            cross[m] = complex_gaussian(rng);
            projection += std::conj(own[m] * inv_norm) * cross[m];
        }
        const cplx along = std::conj(coefficients[k]) - projection;
        cplx inner = 0.0;  // h_cross^H h_own
        for (std::size_t m = 0; m < antennas; ++m) {
            cross[m] += along * own[m] * inv_norm;
            inner += std::conj(cross[m]) * own[m];
        }
        out.interferer_gain[k] = std::norm(inner) / own_norm2;
    }
    return out;
}

std::vector<cplx> conjugate_beamformer(std::span<const cplx> h, double transmit_power) {
    if (h.empty()) throw std::invalid_argument("conjugate_beamformer: empty channel");
    if (!(transmit_power >= 0.0)) throw std::invalid_argument("conjugate_beamformer: negative power");
    double norm2 = 0.0;
    for (const auto& v : h) norm2 += std::norm(v);
    if (!(norm2 > 0.0)) throw std::domain_error("conjugate_beamformer: zero channel");
    const double scale = std::sqrt(static_cast<double>(h.size()) * transmit_power / norm2);
    std::vector<cplx> w(h.begin(), h.end());
    for (auto& v : w) v *= scale;
    return w;
}

double mmimo_finite_sinr(const MmimoConfig& cfg, const DistanceSequence& dists, RandomStream& rng) {
    cfg.validate();
    const std::vector<cplx> coefficients = draw_effective_coefficients(dists.size(), rng);
    const MimoChannelDraw draw = draw_mimo_channels(cfg.antennas, coefficients, rng);
    return draw.desired_norm2 / scaled_denominator(cfg, dists, draw);
}

double mmimo_asymptotic_sinr(const MmimoConfig& cfg, const DistanceSequence& dists, RandomStream& rng) {
    cfg.validate();
    MimoChannelDraw draw;
    for (const cplx& c : draw_effective_coefficients(dists.size(), rng)) draw.interferer_gain.push_back(std::norm(c));
    return static_cast<double>(cfg.antennas) / scaled_denominator(cfg, dists, draw);
}

std::vector<double> run_mmimo(const MmimoConfig& cfg, MmimoRegime regime, std::size_t n, unsigned threads) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("run_mmimo: need at least one realization");
    std::vector<double> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        RandomStream rng(cfg.base.seed, i);
        const DistanceSequence dists = sample_distances(cfg.base, rng);
        out[i] = regime == MmimoRegime::Finite ? mmimo_finite_sinr(cfg, dists, rng)
                                               : mmimo_asymptotic_sinr(cfg, dists, rng);
    });
    return out;
}

}  // namespace sgb
