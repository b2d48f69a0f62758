#include "sgbounds/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgb {

namespace {

void require_mu(double mu, const char* who) {
    if (!(mu > 2.0)) throw std::domain_error(std::string(who) + ": mu must exceed 2");
}

void require_q(double q, const char* who) {
    if (!(q >= 0.0)) throw std::domain_error(std::string(who) + ": q must be nonnegative");
}

}  // namespace

std::string_view to_string(BoundKind k) {
    switch (k) {
        case BoundKind::LB: return "lb";
        case BoundKind::UB: return "ub";
        case BoundKind::Exact: return "exact";
    }
    return "?";
}

BoundCurve evaluate_curve(std::span<const double> grid, BoundKind kind, const std::function<double(double)>& f) {
    BoundCurve c;
    c.kind = kind;
    c.grid.assign(grid.begin(), grid.end());
    c.values.reserve(grid.size());
    for (double x : grid) c.values.push_back(f(x));
    return c;
}

double beta_nfd(double mu) {
    require_mu(mu, "beta_nfd");
    const double e = 2.0 / mu;
    return std::pow(mu + 2.0, e + 1.0) / (mu * std::pow(mu - 2.0, e));
}

double optimal_xi(double mu) {
    require_mu(mu, "optimal_xi");
    return (mu + 2.0) / (mu - 2.0);
}

double dominant_split_coefficient(double xi, double mu) {
    require_mu(mu, "dominant_split_coefficient");
    if (!(xi >= 1.0)) throw std::domain_error("dominant_split_coefficient: xi must be at least 1");
    return ((mu - 2.0) * xi - 2.0) / ((mu - 2.0) * std::pow(xi, 1.0 + 2.0 / mu));
}

double cdf_lb_nfd(double q, double mu) {
    require_mu(mu, "cdf_lb_nfd");
    require_q(q, "cdf_lb_nfd");
    if (q <= 1.0) return 0.0;
    return 1.0 - std::pow(q, -2.0 / mu);
}

double cdf_ub_nfd(double q, double mu) {
    require_q(q, "cdf_ub_nfd");
    if (std::isinf(q)) return 1.0;
    return 1.0 - 1.0 / (1.0 + beta_nfd(mu) * std::pow(q, 2.0 / mu));
}

double cdf_ub_nfd_tight(double q, double mu) {
    if (!(q >= 1.0)) throw std::domain_error("cdf_ub_nfd_tight: only valid for q >= 1");
    return 1.0 - 1.0 / (beta_nfd(mu) * std::pow(q, 2.0 / mu));
}

double mean_inv_sir_nfd(double mu) {
    require_mu(mu, "mean_inv_sir_nfd");
    return 2.0 / (mu - 2.0);
}

double avg_rate_ub_nfd(double alpha, double mu, const QuadSpec& spec) {
    require_mu(mu, "avg_rate_ub_nfd");
    if (!(alpha > 0.0)) throw std::domain_error("avg_rate_ub_nfd: alpha must be positive");
    const double e = 2.0 / mu;
    const double head = std::log2(1.0 + alpha);
    const double scale = std::pow(alpha, e) * mu / ((mu - 2.0) * std::numbers::ln2);
    return head + scale * rho(std::pow(alpha, 1.0 - e), mu / (mu - 2.0), spec);
}

double avg_rate_lb_with_beta(double alpha, double mu, double beta, const QuadSpec& spec) {
    require_mu(mu, "avg_rate_lb");
    if (!(alpha > 0.0)) throw std::domain_error("avg_rate_lb: alpha must be positive");
    const double e = 2.0 / mu;
    const double a = std::pow(alpha, e);
    auto integrand = [=](double t) { return a / (a + beta * std::pow(std::expm1(t * std::numbers::ln2), e)); };
    // The integrand is ~1 up to t = log2(1+alpha); splitting there keeps the
    // semi-infinite map focused on the decaying tail.
    const double knee = std::log2(1.0 + alpha);
    return integrate_checked(integrand, 0.0, knee, spec) + integrate_checked(integrand, knee, kInf, spec);
}

double avg_rate_lb_nfd(double alpha, double mu, const QuadSpec& spec) {
    return avg_rate_lb_with_beta(alpha, mu, beta_nfd(mu), spec);
}

OutageBounds outage_bounds_nfd(const RateParams& params, double mu) {
    params.validate();
    const double rate = std::log2(1.0 + params.eta);
    const double ratio = params.eta / params.alpha;
    OutageBounds b;
    b.ub = params.eta <= params.alpha ? rate : rate * std::pow(1.0 / ratio, 2.0 / mu);
    b.lb = rate / (1.0 + beta_nfd(mu) * std::pow(ratio, 2.0 / mu));
    return b;
}

double beta_fd(double mu) {
    require_mu(mu, "beta_fd");
    const double x = 2.0 * std::numbers::pi / mu;
    return x / std::sin(x);
}

double beta_fd_gamma_form(double mu) {
    require_mu(mu, "beta_fd_gamma_form");
    return std::tgamma(1.0 + 2.0 / mu) * std::tgamma(1.0 - 2.0 / mu);
}

double avg_rate_lb_fd(double alpha, double mu, const QuadSpec& spec) {
    return avg_rate_lb_with_beta(alpha, mu, beta_fd(mu), spec);
}

double outage_lb_fd(const RateParams& params, double mu) {
    params.validate();
    const double rate = std::log2(1.0 + params.eta);
    return rate / (1.0 + beta_fd(mu) * std::pow(params.eta / params.alpha, 2.0 / mu));
}

double fading_cdf_exact(double q, double mu, const QuadSpec& spec) {
    require_mu(mu, "fading_cdf_exact");
    require_q(q, "fading_cdf_exact");
    if (q == 0.0) return 0.0;
    if (std::isinf(q)) return 1.0;
    const double qe = std::pow(q, 2.0 / mu);
    return 1.0 - 1.0 / (1.0 + qe * rho(1.0 / qe, 0.5 * mu, spec));
}

double fading_cdf_lb(double q, double mu, const QuadSpec& spec) {
    require_mu(mu, "fading_cdf_lb");
    require_q(q, "fading_cdf_lb");
    if (q == 0.0) return 0.0;
    if (std::isinf(q)) return 1.0;
    const double a = 2.0 / mu;
    const double c = 2.0 * std::pow(q, a) / mu;
    auto integrand = [=](double t) {
        if (t <= 0.0) return 0.0;
        const double factor = c * std::pow(t, -1.0 / mu) * upper_inc_gamma(a, t / q);
        return std::exp(-t) / (1.0 + factor);
    };
    const double survival = integrate_checked(integrand, 0.0, 1.0, spec) + integrate_checked(integrand, 1.0, kInf, spec);
    return 1.0 - survival;
}

double fading_cdf_ub(double q, double mu) {
    require_q(q, "fading_cdf_ub");
    if (std::isinf(q)) return 1.0;
    return 1.0 - 1.0 / (1.0 + beta_fd(mu) * std::pow(q, 2.0 / mu));
}

double pfd_cdf_lb(double q, double mu) {
    require_mu(mu, "pfd_cdf_lb");
    require_q(q, "pfd_cdf_lb");
    if (q == 0.0) return 0.0;
    if (std::isinf(q)) return 1.0;
    const double a = 2.0 / mu;
    return 1.0 - 1.0 / (1.0 + (2.0 * std::pow(q, a) / mu) * upper_inc_gamma(a, 1.0 / q));
}

double outage_objective(OutageObjective which, double alpha, double eta, double mu) {
    const RateParams p{alpha, eta};
    switch (which) {
        case OutageObjective::NfdUpper: return outage_bounds_nfd(p, mu).ub;
        case OutageObjective::NfdLower: return outage_bounds_nfd(p, mu).lb;
        case OutageObjective::FdLower: return outage_lb_fd(p, mu);
    }
    throw std::invalid_argument("outage_objective: unknown objective");
}

OutageOptimum outage_capacity_numeric(double alpha, double mu, OutageObjective which) {
    if (!(alpha > 0.0)) throw std::domain_error("outage_capacity_numeric: alpha must be positive");
    require_mu(mu, "outage_capacity_numeric");
    auto f = [&](double log_eta) { return outage_objective(which, alpha, std::exp(log_eta), mu); };

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::log(1e-3 * alpha);
    double hi = std::log(1e3 * alpha);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    {
        const double fl = f(lo);
        const double fh = f(hi);
        const double top = std::max({fl, fh, f1, f2});
        const double bottom = std::min({fl, fh, f1, f2});
        if (top - bottom <= 1e-14 * std::max(1.0, std::abs(top)))
            throw NumericalError("outage_capacity_numeric: objective is flat over the search bracket", top, 0.0);
    }
    // Width in log(eta) equals relative width in eta.
    while (hi - lo > 1e-6) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double best = 0.5 * (lo + hi);
    return {std::exp(best), f(best)};
}

}  // namespace sgb
