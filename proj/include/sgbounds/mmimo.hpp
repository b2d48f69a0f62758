#pragma once

#include <span>
#include <vector>

#include "sgbounds/geometry.hpp"
#include "sgbounds/numerics.hpp"
#include "sgbounds/rng.hpp"

namespace sgb {

/// Downlink with M antennas per BS and conjugate beamforming to one user per cell.
struct MmimoConfig {
    NetworkConfig base;
    std::size_t antennas = 1;
    double noise_over_power = 0.0;  // sigma_n^2 / P_T, linear

    void validate() const;
};

/// Small-scale channel statistics for one realization.
struct MimoChannelDraw {
    double desired_norm2 = 0.0;           // ||h_bb||^2 of the desired CN(0, I_M) vector
    std::vector<double> interferer_gain;  // |h~_k|^2 for k = 2..K, from the vectors
};

/// Effective interference coefficients h~_k ~ CN(0,1), k = 2..K. Drawn first
/// from the stream and independent of M.
std::vector<cplx> draw_effective_coefficients(std::size_t count, RandomStream& rng);

/// Materializes the M-vectors around given coefficients: the desired vector,
/// then per interferer its own-cell vector h_own and a cross vector built as
/// z - u (u^H z) + conj(h~) u with u = h_own / ||h_own|| and z ~ CN(0, I_M).
/// The cross vector is then CN(0, I_M) and independent of h_own, i.e. the
/// joint law of the model, while h_cross^H u reproduces h~. The reported gain
/// is recomputed from the vectors. Memory is O(M + K).
MimoChannelDraw draw_mimo_channels(std::size_t antennas, std::span<const cplx> coefficients, RandomStream& rng);

/// w = sqrt(M P_T) h / ||h||, so ||w||^2 = M P_T exactly.
std::vector<cplx> conjugate_beamformer(std::span<const cplx> h, double transmit_power);

/// Finite-M SINR:
/// (d_1^-mu ||h||^2 / M) / (sum_k d_k^-mu |h~_k|^2 / M + sigma^2 / (M^2 P_T)).
double mmimo_finite_sinr(const MmimoConfig& cfg, const DistanceSequence& dists, RandomStream& rng);

/// Large-M limit: M d_1^-mu / (sum_k d_k^-mu |h~_k|^2 + sigma^2 / (M P_T)).
/// Both operations draw the h~ first, so from the same stream state they see
/// identical coefficients, and the limit itself never depends on M.
double mmimo_asymptotic_sinr(const MmimoConfig& cfg, const DistanceSequence& dists, RandomStream& rng);

enum class MmimoRegime { Finite, Asymptotic };

/// n realizations on per-index streams; the same seed pairs finite and
/// asymptotic samples realization by realization.
std::vector<double> run_mmimo(const MmimoConfig& cfg, MmimoRegime regime, std::size_t n, unsigned threads = 0);

}  // namespace sgb
