#pragma once

#include <span>
#include <vector>

#include "sgbounds/bounds.hpp"
#include "sgbounds/channel.hpp"
#include "sgbounds/geometry.hpp"
#include "sgbounds/numerics.hpp"

namespace sgb {

// Laplace transforms L(s) = E[exp(-s/Q)] of the inverted SINR.
//
// Conditioning on d_1 = x and applying Campbell's theorem to the interferers
// beyond x gives exp(-s delta x^mu - pi lambda x^2 (B(s) - 1)); averaging over
// the nearest-point law with y = pi lambda x^2 then leaves
//
//     L(s) = \int_0^inf exp(-y B(s) - s delta (y / (pi lambda))^(mu/2)) dy,
//
// and L(s) = 1/B(s) when delta = 0, independent of lambda.

/// Non-fading bracket B(s) = exp(-s) + s^(2/mu) gamma(1 - 2/mu, s).
cplx interference_bracket_nfd(cplx s, double mu);

/// Partial-fading bracket B(s) = 1 + 2 \int_1^inf s u / (s + u^mu) du.
cplx interference_bracket_pfd(cplx s, double mu, const QuadSpec& spec = {});

/// Outer integral over the nearest-point variable for a given bracket.
/// Exponent real parts below -745 are clamped to a zero contribution.
cplx laplace_outer_integral(cplx s, cplx bracket, const NetworkConfig& cfg, const QuadSpec& spec = {});

/// E[exp(-s / Q_nfd)]; the delta = 0 case short-circuits to 1/B(s).
cplx laplace_inv_q_nfd(cplx s, const NetworkConfig& cfg, const QuadSpec& spec = {});
double laplace_inv_q_nfd(double s, const NetworkConfig& cfg, const QuadSpec& spec = {});

/// E[exp(-s / Q_pfd)]; the delta = 0 case short-circuits to 1/B(s).
cplx laplace_inv_q_pfd(cplx s, const NetworkConfig& cfg, const QuadSpec& spec = {});
double laplace_inv_q_pfd(double s, const NetworkConfig& cfg, const QuadSpec& spec = {});

/// General quadrature route, used even for delta = 0 (cross-check of the
/// closed-form reduction).
cplx laplace_inv_q_general(FadingModel model, cplx s, const NetworkConfig& cfg, const QuadSpec& spec = {});

struct LaplaceCdf {
    BoundCurve curve;                      // kind = Exact
    std::vector<double> error_estimate;    // Euler error per grid point
    std::vector<std::size_t> failed;       // grid indices that missed the target
};

/// F_Q(q) = 1 - Pr{1/Q <= 1/q} by numerical inversion, for model NonFading or
/// PartialFading. The grid must be positive and ascending; the result is
/// clamped to [0,1] and made nondecreasing.
LaplaceCdf cdf_via_laplace(FadingModel model, const NetworkConfig& cfg, std::span<const double> q_grid,
                           const InversionSpec& inv = {}, const QuadSpec& quad = {});

}  // namespace sgb
