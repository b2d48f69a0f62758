#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "sgbounds/mc.hpp"
#include "sgbounds/numerics.hpp"

namespace sgb {

// Closed-form SIR distribution and rate bounds for the noise-free networks.
// Every argument is linear (no dB); every q, alpha, eta is a ratio.

enum class BoundKind { LB, UB, Exact };

std::string_view to_string(BoundKind k);

/// Evaluated analytical curve on a grid of abscissae.
struct BoundCurve {
    std::vector<double> grid;
    std::vector<double> values;
    BoundKind kind = BoundKind::Exact;
};

/// Build a curve by evaluating `f` at every grid point.
BoundCurve evaluate_curve(std::span<const double> grid, BoundKind kind, const std::function<double(double)>& f);

// -- Non-fading network ------------------------------------------------------

/// (mu+2)^(2/mu+1) / (mu (mu-2)^(2/mu)), the constant of the dominant-interferer
/// upper bound maximised over the split parameter xi.
double beta_nfd(double mu);

/// Maximiser (mu+2)/(mu-2) of the dominant-interferer bound over xi >= 1.
double optimal_xi(double mu);

/// Dominant-interferer bound coefficient ((mu-2) xi - 2) / ((mu-2) xi^(1+2/mu))
/// for an arbitrary split parameter; its maximum over xi is 1/beta_nfd.
double dominant_split_coefficient(double xi, double mu);

/// 0 for q <= 1, 1 - q^(-2/mu) beyond.
double cdf_lb_nfd(double q, double mu);

/// Universal upper bound 1 - 1/(1 + beta_nfd q^(2/mu)).
double cdf_ub_nfd(double q, double mu);

/// Tight upper bound 1 - 1/(beta_nfd q^(2/mu)), valid for q >= 1 only.
double cdf_ub_nfd_tight(double q, double mu);

/// E[1/Q] = 2/(mu-2) for the noise-free non-fading network.
double mean_inv_sir_nfd(double mu);

/// log2(1+alpha) + alpha^(2/mu) mu / ((mu-2) ln 2) * rho(alpha^(1-2/mu), mu/(mu-2)).
double avg_rate_ub_nfd(double alpha, double mu, const QuadSpec& spec = {});

/// \int_0^inf alpha^(2/mu) / (alpha^(2/mu) + beta (2^t - 1)^(2/mu)) dt.
double avg_rate_lb_with_beta(double alpha, double mu, double beta, const QuadSpec& spec = {});
double avg_rate_lb_nfd(double alpha, double mu, const QuadSpec& spec = {});

struct OutageBounds {
    double lb = 0.0;
    double ub = 0.0;
};

OutageBounds outage_bounds_nfd(const RateParams& params, double mu);

// -- Rayleigh fading network -------------------------------------------------

/// 2 pi / (mu sin(2 pi / mu)); equals Gamma(1+2/mu) Gamma(1-2/mu).
double beta_fd(double mu);
double beta_fd_gamma_form(double mu);

/// Rate lower bound from the fading CDF upper bound.
double avg_rate_lb_fd(double alpha, double mu, const QuadSpec& spec = {});

/// log2(1+eta) / (1 + beta_fd (eta/alpha)^(2/mu)).
double outage_lb_fd(const RateParams& params, double mu);

/// Exact noise-free CDF 1 - 1/(1 + q^(2/mu) rho(q^(-2/mu), mu/2)).
double fading_cdf_exact(double q, double mu, const QuadSpec& spec = {});

/// 1 - E_h[1/(1 + 2 q^(2/mu) / (mu |h|^(2/mu)) Gamma(2/mu, |h|^2/q))], the
/// expectation taken by quadrature against the Exp(1) density of |h|^2.
double fading_cdf_lb(double q, double mu, const QuadSpec& spec = {});

/// 1 - 1/(1 + beta_fd q^(2/mu)).
double fading_cdf_ub(double q, double mu);

// -- Partial fading network --------------------------------------------------

/// 1 - 1/(1 + (2 q^(2/mu)/mu) Gamma(2/mu, 1/q)), a CDF lower bound.
double pfd_cdf_lb(double q, double mu);

// -- Outage capacity ---------------------------------------------------------

enum class OutageObjective { NfdUpper, NfdLower, FdLower };

struct OutageOptimum {
    double eta = 0.0;
    double value = 0.0;
};

/// Outage-rate objective as a function of eta for a fixed alpha.
double outage_objective(OutageObjective which, double alpha, double eta, double mu);

/// Golden-section maximisation over log(eta) on [1e-3 alpha, 1e3 alpha] to
/// 1e-6 relative width. Throws NumericalError on a flat objective.
OutageOptimum outage_capacity_numeric(double alpha, double mu, OutageObjective which);

}  // namespace sgb
