#include "sgbounds/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgb {

namespace {

constexpr double kMinExponent = -745.0;

void require_s(cplx s) {
    if (!(s.real() >= 0.0) || std::isnan(s.imag())) throw std::domain_error("Laplace transform: need Re s >= 0");
}

}  // namespace

cplx interference_bracket_nfd(cplx s, double mu) {
    require_s(s);
    if (!(mu > 2.0)) throw std::domain_error("interference_bracket_nfd: mu must exceed 2");
    if (s == cplx(0.0)) return 1.0;
    const double e = 2.0 / mu;
    return std::exp(-s) + std::pow(s, e) * lower_inc_gamma(1.0 - e, s);
}

cplx interference_bracket_pfd(cplx s, double mu, const QuadSpec& spec) {
    require_s(s);
    if (!(mu > 2.0)) throw std::domain_error("interference_bracket_pfd: mu must exceed 2");
    if (s == cplx(0.0)) return 1.0;
    auto integrand = [=](double u) -> cplx { return s * u / (s + std::pow(u, mu)); };
    // The integrand saturates at ~u until u^mu ~ |s|; split there.
    const double knee = std::max(1.0, std::pow(std::abs(s), 1.0 / mu));
    cplx j = integrate_checked(ComplexFn(integrand), knee, kInf, spec);
    if (knee > 1.0) j += integrate_checked(ComplexFn(integrand), 1.0, knee, spec);
    return 1.0 + 2.0 * j;
}

namespace {

cplx outer_quadrature(cplx s, cplx bracket, const NetworkConfig& cfg, const QuadSpec& spec) {
    // Rescale by Re B so the exponential weight has unit rate.
    const double rate = bracket.real();
    if (!(rate > 0.0)) throw std::domain_error("Laplace outer integral: bracket must have positive real part");
    const cplx b = bracket / rate;
    const double noise_scale = cfg.delta / std::pow(std::numbers::pi * cfg.lambda * rate, 0.5 * cfg.mu);
    const double half_mu = 0.5 * cfg.mu;
    auto integrand = [=](double t) -> cplx {
        const cplx expo = -t * b - s * noise_scale * std::pow(t, half_mu);
        if (expo.real() < kMinExponent) return 0.0;
        return std::exp(expo);
    };
    return integrate_checked(ComplexFn(integrand), 0.0, kInf, spec) / rate;
}

}  // namespace

cplx laplace_outer_integral(cplx s, cplx bracket, const NetworkConfig& cfg, const QuadSpec& spec) {
    cfg.validate();
    if (cfg.delta == 0.0 || s == cplx(0.0)) return 1.0 / bracket;
    return outer_quadrature(s, bracket, cfg, spec);
}

cplx laplace_inv_q_general(FadingModel model, cplx s, const NetworkConfig& cfg, const QuadSpec& spec) {
    cfg.validate();
    require_s(s);
    if (s == cplx(0.0)) return 1.0;
    switch (model) {
        case FadingModel::NonFading: return outer_quadrature(s, interference_bracket_nfd(s, cfg.mu), cfg, spec);
        case FadingModel::PartialFading:
            return outer_quadrature(s, interference_bracket_pfd(s, cfg.mu, spec), cfg, spec);
        case FadingModel::Rayleigh: break;
    }
    throw std::invalid_argument("no Laplace transform for the Rayleigh model; use fading_cdf_exact");
}

cplx laplace_inv_q_nfd(cplx s, const NetworkConfig& cfg, const QuadSpec& spec) {
    cfg.validate();
    if (s == cplx(0.0)) return 1.0;
    return laplace_outer_integral(s, interference_bracket_nfd(s, cfg.mu), cfg, spec);
}

double laplace_inv_q_nfd(double s, const NetworkConfig& cfg, const QuadSpec& spec) {
    return laplace_inv_q_nfd(cplx(s, 0.0), cfg, spec).real();
}

cplx laplace_inv_q_pfd(cplx s, const NetworkConfig& cfg, const QuadSpec& spec) {
    cfg.validate();
    if (s == cplx(0.0)) return 1.0;
    return laplace_outer_integral(s, interference_bracket_pfd(s, cfg.mu, spec), cfg, spec);
}

double laplace_inv_q_pfd(double s, const NetworkConfig& cfg, const QuadSpec& spec) {
    return laplace_inv_q_pfd(cplx(s, 0.0), cfg, spec).real();
}

LaplaceCdf cdf_via_laplace(FadingModel model, const NetworkConfig& cfg, std::span<const double> q_grid,
                           const InversionSpec& inv, const QuadSpec& quad) {
    cfg.validate();
    if (model == FadingModel::Rayleigh)
        throw std::invalid_argument("cdf_via_laplace: Rayleigh model has no transform here; use fading_cdf_exact");
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        if (!(q_grid[i] > 0.0)) throw std::invalid_argument("cdf_via_laplace: grid must be positive");
        if (i > 0 && !(q_grid[i] > q_grid[i - 1])) throw std::invalid_argument("cdf_via_laplace: grid must be ascending");
    }

    LaplaceFn transform = [&](cplx s) {
        return model == FadingModel::NonFading ? laplace_inv_q_nfd(s, cfg, quad) : laplace_inv_q_pfd(s, cfg, quad);
    };

    LaplaceCdf out;
    out.curve.kind = BoundKind::Exact;
    out.curve.grid.assign(q_grid.begin(), q_grid.end());
    out.curve.values.resize(q_grid.size());
    out.error_estimate.resize(q_grid.size());
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        double inv_cdf;
        try {
            const InversionResult r = invert_laplace_cdf(transform, 1.0 / q_grid[i], inv);
            inv_cdf = r.value;
            out.error_estimate[i] = r.error_estimate;
        } catch (const NumericalError& e) {
            inv_cdf = e.best_estimate();
            out.error_estimate[i] = e.error_estimate();
            out.failed.push_back(i);
        }
        out.curve.values[i] = std::clamp(1.0 - inv_cdf, 0.0, 1.0);
    }
    for (std::size_t i = 1; i < out.curve.values.size(); ++i)
        out.curve.values[i] = std::max(out.curve.values[i], out.curve.values[i - 1]);
    return out;
}

}  // namespace sgb
