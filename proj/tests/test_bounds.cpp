#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "sgbounds/bounds.hpp"

using namespace sgb;
using std::numbers::pi;

namespace {

long double beta_nfd_ld(long double mu) {
    return std::pow(mu + 2.0L, 2.0L / mu + 1.0L) / (mu * std::pow(mu - 2.0L, 2.0L / mu));
}

long double beta_fd_ld(long double mu) {
    const long double pi_l = 3.141592653589793238462643383279502884L;
    return 2.0L * pi_l / (mu * std::sin(2.0L * pi_l / mu));
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

}  // namespace

TEST_CASE("beta_nfd") {
    CHECK(beta_nfd(4.0) == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));
    for (double mu : {2.5, 3.0, 3.7, 4.5, 6.0, 8.0})
        CHECK(beta_nfd(mu) == doctest::Approx(static_cast<double>(beta_nfd_ld(mu))).epsilon(1e-13));
    CHECK(beta_nfd(3.7) == doctest::Approx(2.962696).epsilon(1e-6));
    double prev = beta_nfd(6.0);
    for (double mu : {20.0, 100.0, 1000.0, 1e5}) {
        const double b = beta_nfd(mu);
        CHECK(b > 1.0);
        CHECK(b < prev);
        prev = b;
    }
    CHECK(beta_nfd(1e5) - 1.0 < 1e-3);
    CHECK_THROWS_AS(beta_nfd(2.0), std::domain_error);
}

TEST_CASE("beta_nfd is the optimum of the dominant-interferer split") {
    for (double mu : {2.5, 3.0, 3.7, 5.0}) {
        double best = -1.0;
        double arg = 0.0;
        for (int i = 0; i <= 200000; ++i) {
            const double xi = 1.0 + 60.0 * i / 200000.0;
            const double c = dominant_split_coefficient(xi, mu);
            if (c > best) {
                best = c;
                arg = xi;
            }
        }
        CAPTURE(mu);
        CHECK(best == doctest::Approx(1.0 / beta_nfd(mu)).epsilon(1e-9));
        CHECK(arg == doctest::Approx(optimal_xi(mu)).epsilon(1e-3));
        CHECK(optimal_xi(mu) == doctest::Approx((mu + 2.0) / (mu - 2.0)));
    }
}

TEST_CASE("beta_fd") {
    CHECK(beta_fd(4.0) == doctest::Approx(pi / 2.0).epsilon(1e-14));
    CHECK(beta_fd(3.7) == doctest::Approx(static_cast<double>(beta_fd_ld(3.7L))).epsilon(1e-13));
    CHECK(beta_fd(3.7) == doctest::Approx(1.712025).epsilon(1e-6));
    for (double mu : {2.5, 3.0, 3.7, 4.0, 6.0}) CHECK(std::abs(beta_fd(mu) - beta_fd_gamma_form(mu)) < 1e-12);
    for (double mu = 2.05; mu <= 8.0; mu += 0.05) CHECK(beta_fd(mu) < beta_nfd(mu));
    CHECK_THROWS_AS(beta_fd(1.5), std::domain_error);
}

TEST_CASE("non-fading CDF bound examples") {
    CHECK(cdf_lb_nfd(0.5, 4.0) == 0.0);
    CHECK(cdf_lb_nfd(1.0, 3.3) == 0.0);
    CHECK(cdf_lb_nfd(16.0, 4.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(cdf_ub_nfd(0.0, 3.7) == 0.0);
    CHECK(cdf_ub_nfd(1.0, 4.0) == doctest::Approx(1.0 - 1.0 / (1.0 + 1.5 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(cdf_ub_nfd(1.0, 4.0) == doctest::Approx(0.7221).epsilon(1e-4));
    CHECK(cdf_ub_nfd_tight(1.0, 4.0) == doctest::Approx(1.0 - 1.0 / (1.5 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(cdf_ub_nfd_tight(1.0, 4.0) == doctest::Approx(0.6151).epsilon(1e-4));
    CHECK_THROWS_AS(cdf_ub_nfd_tight(0.5, 4.0), std::domain_error);
}

TEST_CASE("mean inverted SIR") {
    CHECK(mean_inv_sir_nfd(4.0) == 1.0);
    CHECK(mean_inv_sir_nfd(3.7) == doctest::Approx(1.17647).epsilon(1e-5));
    CHECK(mean_inv_sir_nfd(1e9) < 1e-8);
    CHECK_THROWS_AS(mean_inv_sir_nfd(2.0), std::domain_error);
}

TEST_CASE("CDF outputs lie in [0,1], are nondecreasing and ordered") {
    const auto grid = log_grid(1e-2, 1e3, 80);
    for (double mu : {2.2, 2.5, 3.0, 3.7, 4.0, 5.0, 6.5, 8.0}) {
        CAPTURE(mu);
        double plb = 0.0, pub = 0.0, pfe = 0.0, pfl = 0.0, pfu = 0.0, ppl = 0.0;
        for (double q : grid) {
            const double lb = cdf_lb_nfd(q, mu), ub = cdf_ub_nfd(q, mu);
            const double fe = fading_cdf_exact(q, mu), fl = fading_cdf_lb(q, mu), fu = fading_cdf_ub(q, mu);
            const double pl = pfd_cdf_lb(q, mu);
            for (double v : {lb, ub, fe, fl, fu, pl}) REQUIRE((v >= 0.0 && v <= 1.0));
            CHECK(lb <= ub);
            CHECK(fl <= fe + 1e-9);
            CHECK(fe <= fu + 1e-9);
            CHECK(lb >= plb);
            CHECK(ub >= pub);
            CHECK(fe >= pfe);
            CHECK(fl >= pfl);
            CHECK(fu >= pfu);
            CHECK(pl >= ppl);
            plb = lb, pub = ub, pfe = fe, pfl = fl, pfu = fu, ppl = pl;
        }
    }
}

TEST_CASE("average rate upper bound") {
    CHECK(avg_rate_ub_nfd(1.0, 4.0) == doctest::Approx(1.0 + pi / (2.0 * std::log(2.0))).epsilon(1e-9));
    CHECK(avg_rate_ub_nfd(1.0, 4.0) == doctest::Approx(3.2662).epsilon(1e-4));
    // Dual route: integrate the CCDF of the CDF lower bound directly.
    for (double mu : {3.0, 3.7, 5.0})
        for (double alpha : {0.1, 1.0, 10.0, 300.0}) {
            CAPTURE(mu);
            CAPTURE(alpha);
            const double t0 = std::log2(1.0 + alpha);
            const double tail = oracle::simpson<double>(
                [&](double t) { return std::pow((std::exp2(t) - 1.0) / alpha, -2.0 / mu); }, t0, t0 + 40.0 * mu, 400000);
            CHECK(avg_rate_ub_nfd(alpha, mu) == doctest::Approx(t0 + tail).epsilon(1e-8));
        }
}

TEST_CASE("average rate lower bounds") {
    for (double mu : {3.0, 3.7, 5.0})
        for (double alpha : {0.1, 1.0, 10.0, 300.0}) {
            CAPTURE(mu);
            CAPTURE(alpha);
            const double a = std::pow(alpha, 2.0 / mu);
            const double beta = beta_nfd(mu);
            // u = t^(1/mu) removes the root singularity of (2^t - 1)^(2/mu) at 0.
            const double want = oracle::simpson<double>(
                [&](double u) {
                    const double t = std::pow(u, mu);
                    const double dt = mu * std::pow(u, mu - 1.0);
                    return dt * a / (a + beta * std::pow(std::expm1(t * std::log(2.0)), 2.0 / mu));
                },
                0.0, std::pow(60.0 * mu + std::log2(1.0 + alpha), 1.0 / mu), 400000);
            CHECK(avg_rate_lb_nfd(alpha, mu) == doctest::Approx(want).epsilon(1e-7));
            CHECK(avg_rate_lb_with_beta(alpha, mu, beta) == avg_rate_lb_nfd(alpha, mu));
            CHECK(avg_rate_lb_fd(alpha, mu) > avg_rate_lb_nfd(alpha, mu));
        }
    for (double a_db = -10.0; a_db <= 30.0; a_db += 2.5) {
        const double alpha = std::pow(10.0, a_db / 10.0);
        CHECK(avg_rate_lb_nfd(alpha, 3.7) <= avg_rate_ub_nfd(alpha, 3.7));
        CHECK(avg_rate_lb_fd(alpha, 3.7) <= avg_rate_ub_nfd(alpha, 3.7));
    }
}

TEST_CASE("outage bounds") {
    const OutageBounds low = outage_bounds_nfd({10.0, 5.0}, 4.0);
    CHECK(low.ub == doctest::Approx(std::log2(6.0)));
    const OutageBounds high = outage_bounds_nfd({10.0, 100.0}, 4.0);
    CHECK(high.ub == doctest::Approx(std::log2(101.0) * std::sqrt(0.1)).epsilon(1e-14));
    CHECK(high.ub == doctest::Approx(2.1054).epsilon(1e-4));
    const OutageBounds eq = outage_bounds_nfd({10.0, 10.0}, 4.0);
    CHECK(eq.lb == doctest::Approx(std::log2(11.0) / (1.0 + 1.5 * std::sqrt(3.0))).epsilon(1e-14));
    CHECK(eq.lb == doctest::Approx(0.96146).epsilon(1e-5));
    CHECK(outage_lb_fd({10.0, 10.0}, 4.0) == doctest::Approx(std::log2(11.0) / (1.0 + pi / 2.0)).epsilon(1e-14));

    for (double a_db = -10.0; a_db <= 30.0; a_db += 5.0)
        for (double e_db = -20.0; e_db <= 40.0; e_db += 2.0)
            for (double mu : {2.5, 3.7, 5.0}) {
                const RateParams p{std::pow(10.0, a_db / 10.0), std::pow(10.0, e_db / 10.0)};
                const OutageBounds b = outage_bounds_nfd(p, mu);
                CHECK(b.lb <= b.ub);
                CHECK(outage_lb_fd(p, mu) <= b.ub);
            }
}

TEST_CASE("outage capacity: golden section against a brute-force grid") {
    for (auto which : {OutageObjective::NfdUpper, OutageObjective::NfdLower, OutageObjective::FdLower})
        for (double alpha : {0.5, 10.0, 200.0}) {
            const double mu = 3.7;
            const OutageOptimum opt = outage_capacity_numeric(alpha, mu, which);
            // The upper objective has a kink at eta = alpha; include it as a candidate.
            double best = outage_objective(which, alpha, alpha, mu);
            for (int i = 0; i < 10000; ++i) {
                const double eta = alpha * std::pow(10.0, -3.0 + 6.0 * i / 9999.0);
                best = std::max(best, outage_objective(which, alpha, eta, mu));
            }
            CAPTURE(alpha);
            CAPTURE(static_cast<int>(which));
            CAPTURE(opt.eta);
            CHECK(opt.value == doctest::Approx(best).epsilon(1e-4));
            // A kinked optimum loses first order in the final 1e-6 bracket.
            CHECK(opt.value >= best * (1.0 - 1e-6));
            if (which == OutageObjective::NfdUpper) CHECK(opt.eta >= alpha * (1.0 - 1e-6));
        }
}

TEST_CASE("fading CDF: exact, lower and upper") {
    CHECK(fading_cdf_exact(0.0, 3.7) == 0.0);
    CHECK(fading_cdf_exact(1.0, 4.0) == doctest::Approx(1.0 - 1.0 / (1.0 + pi / 4.0)).epsilon(1e-9));
    CHECK(fading_cdf_exact(1.0, 4.0) == doctest::Approx(0.43990).epsilon(1e-5));
    CHECK(fading_cdf_ub(0.0, 3.7) == 0.0);
    CHECK(fading_cdf_ub(1.0, 4.0) == doctest::Approx(1.0 - 1.0 / (1.0 + pi / 2.0)).epsilon(1e-14));
    CHECK(fading_cdf_ub(1.0, 4.0) == doctest::Approx(0.61102).epsilon(1e-5));
    CHECK(fading_cdf_lb(1e-8, 3.7) < 1e-3);
    CHECK(fading_cdf_lb(1e10, 3.7) > 0.99);

    // At mu = 4 the inner factor is sqrt(pi) erfc(sqrt(t/q)).
    for (double q : {0.3, 1.0, 7.0}) {
        const double want = 1.0 - oracle::simpson<double>(
                                      [&](double u) {
                                          if (u == 0.0) return 0.0;
                                          const double t = u * u * u * u;
                                          const double g = std::sqrt(pi) * std::erfc(std::sqrt(t / q));
                                          return 4.0 * u * u * u * std::exp(-t) / (1.0 + std::sqrt(q) / (2.0 * u) * g);
                                      },
                                      0.0, 3.5, 200000);
        CAPTURE(q);
        CHECK(fading_cdf_lb(q, 4.0) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("partial-fading CDF lower bound") {
    CHECK(pfd_cdf_lb(1e-9, 3.7) < 1e-12);
    const double want = 1.0 - 1.0 / (1.0 + 0.5 * std::sqrt(pi) * std::erfc(1.0));
    CHECK(pfd_cdf_lb(1.0, 4.0) == doctest::Approx(want).epsilon(1e-12));
    CHECK(pfd_cdf_lb(1.0, 4.0) == doctest::Approx(0.1224).epsilon(1e-3));
}

TEST_CASE("evaluate_curve") {
    const std::vector<double> grid{0.5, 1.0, 2.0};
    const BoundCurve c = evaluate_curve(grid, BoundKind::UB, [](double q) { return cdf_ub_nfd(q, 4.0); });
    CHECK(c.kind == BoundKind::UB);
    REQUIRE(c.values.size() == 3);
    CHECK(c.values[1] == cdf_ub_nfd(1.0, 4.0));
    CHECK(to_string(BoundKind::LB) == "lb");
}
