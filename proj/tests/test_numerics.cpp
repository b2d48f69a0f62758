#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sgbounds/numerics.hpp"

using namespace sgb;
using std::numbers::pi;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("lower incomplete gamma examples") {
    CHECK(rel_err(lower_inc_gamma(1.0, 1.0), 1.0 - std::exp(-1.0)) < 1e-12);
    CHECK(rel_err(lower_inc_gamma(0.5, 1.0), std::sqrt(pi) * std::erf(1.0)) < 1e-12);
    CHECK(lower_inc_gamma(0.5, 1.0) == doctest::Approx(1.493648).epsilon(1e-6));
    CHECK(lower_inc_gamma(0.5, 0.0) == 0.0);
    CHECK(rel_err(lower_inc_gamma(0.5, kInf), std::sqrt(pi)) < 1e-14);
}

TEST_CASE("upper incomplete gamma examples") {
    CHECK(rel_err(upper_inc_gamma(1.0, 1.0), std::exp(-1.0)) < 1e-12);
    CHECK(rel_err(upper_inc_gamma(0.5, 1.0), std::sqrt(pi) * std::erfc(1.0)) < 1e-12);
    CHECK(upper_inc_gamma(0.5, 1.0) == doctest::Approx(0.278806).epsilon(1e-5));
    CHECK(rel_err(upper_inc_gamma(0.5, 0.0), std::sqrt(pi)) < 1e-14);
    CHECK(upper_inc_gamma(0.5, kInf) == 0.0);
}

TEST_CASE("incomplete gamma rejects a <= 0") {
    CHECK_THROWS_AS(lower_inc_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_inc_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lower_inc_gamma(0.0, cplx(1.0, 1.0)), std::domain_error);
}

TEST_CASE("incomplete gamma: integer order against the finite sum") {
    for (int a : {1, 2, 3, 5, 8})
        for (double x : {0.01, 0.3, 1.0, 2.5, 7.0, 20.0, 45.0}) {
            CAPTURE(a);
            CAPTURE(x);
            const double want = oracle::upper_gamma_integer(a, x);
            CHECK(rel_err(upper_inc_gamma(a, x), want) < 1e-10);
            CHECK(rel_err(lower_inc_gamma(a, x), oracle::lower_gamma_integer(a, x)) < 1e-10);
        }
}

TEST_CASE("incomplete gamma: lower + upper = Gamma(a) across both regimes") {
    for (int i = 1; i <= 19; ++i) {
        const double a = 0.1 * i;
        for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0}) {
            CAPTURE(a);
            CAPTURE(x);
            CHECK(rel_err(lower_inc_gamma(a, x) + upper_inc_gamma(a, x), std::tgamma(a)) < 1e-9);
        }
    }
}

TEST_CASE("complex incomplete gamma: closed forms for integer order") {
    for (cplx z : {cplx(0.3, 0.2), cplx(2.0, 5.0), cplx(9.0, 4.0), cplx(15.0, -3.0), cplx(0.5, 40.0), cplx(60.0, 1.0)}) {
        CAPTURE(z);
        CHECK(rel_err(lower_inc_gamma(1.0, z), 1.0 - std::exp(-z)) < 1e-10);
        CHECK(rel_err(lower_inc_gamma(2.0, z), 1.0 - (1.0 + z) * std::exp(-z)) < 1e-10);
        CHECK(std::abs(lower_inc_gamma(2.0, z) + upper_inc_gamma(2.0, z) - 1.0) < 1e-10);
    }
}

TEST_CASE("complex incomplete gamma: fractional order against brute-force Simpson") {
    // gamma(a+1, z) = z^(a+1) \int_0^1 v^a e^(-z v) dv; v = w^3 smooths the
    // integrand at the origin and the recurrence then gives gamma(a, z).
    const double a = 1.0 - 2.0 / 3.7;
    for (cplx z : {cplx(0.5, 0.3), cplx(3.0, 4.0), cplx(9.0, 4.3), cplx(9.9, 0.5), cplx(10.2, 0.5), cplx(12.0, 5.0),
                   cplx(2.0, 25.0), cplx(30.0, 20.0)}) {
        CAPTURE(z);
        const cplx integral =
            oracle::simpson<cplx>([&](double w) { return 3.0 * std::pow(w, 3.0 * a + 2.0) * std::exp(-z * (w * w * w)); },
                                  0.0, 1.0, 400000);
        const cplx upper_order = std::pow(z, a + 1.0) * integral;
        const cplx want = (upper_order + std::pow(z, a) * std::exp(-z)) / a;
        CHECK(rel_err(lower_inc_gamma(a, z), want) < 1e-7);
    }
}

TEST_CASE("complex incomplete gamma reduces to the real one on the real axis") {
    for (double a : {0.2, 0.46, 0.9, 1.5})
        for (double x : {0.05, 1.0, 4.0, 9.5, 10.5, 30.0}) {
            CHECK(rel_err(lower_inc_gamma(a, cplx(x, 0.0)).real(), lower_inc_gamma(a, x)) < 1e-11);
            CHECK(std::abs(lower_inc_gamma(a, cplx(x, 0.0)).imag()) < 1e-14);
        }
}

TEST_CASE("rho examples") {
    CHECK(rel_err(rho(0.0, 2.0), pi / 2.0) < 1e-8);
    CHECK(rel_err(rho(1.0, 2.0), pi / 4.0) < 1e-8);
    CHECK(rel_err(rho(10.0, 2.0), pi / 2.0 - std::atan(10.0)) < 1e-8);
    CHECK(rho(10.0, 2.0) == doctest::Approx(0.099669).epsilon(1e-5));
    // \int_0^inf dx/(x^4+1) = pi / (2 sqrt 2).
    CHECK(rel_err(rho(0.0, 4.0), pi / (2.0 * std::sqrt(2.0))) < 1e-8);
}

TEST_CASE("rho: arctan identity, positivity and monotonicity") {
    double prev = kInf;
    for (double a = 0.0; a <= 40.0; a += 0.25) {
        const double r = rho(a, 2.0);
        CHECK(r > 0.0);
        CHECK(r < prev);
        CHECK(rel_err(r, pi / 2.0 - std::atan(a)) < 1e-8);
        prev = r;
    }
    for (double b : {1.2, 1.9, 3.0, 5.4}) {
        prev = kInf;
        for (double a : {0.0, 0.1, 0.5, 1.0, 3.0, 30.0}) {
            const double r = rho(a, b);
            CHECK(r > 0.0);
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("rho rejects b <= 1") {
    CHECK_THROWS_AS(rho(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rho(1.0, 0.5), std::domain_error);
}

TEST_CASE("integrate examples") {
    const auto r1 = integrate([](double x) { return x; }, 0.0, 1.0);
    CHECK(r1.converged);
    CHECK(rel_err(r1.value, 0.5) < 1e-8);
    const auto r2 = integrate([](double x) { return std::exp(-x); }, 0.0, kInf);
    CHECK(r2.converged);
    CHECK(rel_err(r2.value, 1.0) < 1e-8);
    const auto r3 = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r3.converged);
    CHECK(rel_err(r3.value, 2.0) < 1e-8);
    CHECK(r3.abs_error <= 1e-8 * 2.0);
}

TEST_CASE("integrate: complex integrand shares one schedule") {
    const auto r = integrate([](double x) { return std::exp(cplx(-1.0, 2.0) * x); }, 0.0, kInf);
    CHECK(r.converged);
    CHECK(rel_err(r.value, 1.0 / cplx(1.0, -2.0)) < 1e-9);
}

TEST_CASE("integrate reports non-convergence instead of swallowing it") {
    QuadSpec tight;
    tight.max_subdivisions = 3;
    auto wild = [](double x) { return std::sin(1.0 / x) / x; };
    const auto r = integrate(wild, 1e-4, 1.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(std::isfinite(r.value));
    CHECK_THROWS_AS(integrate_checked(wild, 1e-4, 1.0, tight), NumericalError);
}

TEST_CASE("spec validation") {
    QuadSpec q;
    q.rel_tol = 0.0;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = {};
    q.max_subdivisions = 0;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    InversionSpec inv;
    inv.terms = 7;
    CHECK_THROWS_AS(inv.validate(), std::invalid_argument);
    inv = {};
    inv.target_abs_err = 0.0;
    CHECK_THROWS_AS(inv.validate(), std::invalid_argument);
}

TEST_CASE("Laplace inversion: unit exponential") {
    LaplaceFn expo = [](cplx s) { return 1.0 / (1.0 + s); };
    CHECK(std::abs(invert_laplace_cdf(expo, 1.0).value - (1.0 - std::exp(-1.0))) < 1e-6);
    for (double t : {0.1, 0.2, 0.5, 1.0, 2.0, 3.0, 5.0, 7.0, 10.0}) {
        CAPTURE(t);
        CHECK(std::abs(invert_laplace_cdf(expo, t).value - (1.0 - std::exp(-t))) < 1e-5);
    }
}

TEST_CASE("Laplace inversion: gamma(2) and point mass") {
    LaplaceFn erlang = [](cplx s) { return 1.0 / ((1.0 + s) * (1.0 + s)); };
    for (double t : {0.3, 1.0, 4.0})
        CHECK(std::abs(invert_laplace_cdf(erlang, t).value - (1.0 - (1.0 + t) * std::exp(-t))) < 1e-6);
    LaplaceFn point = [](cplx s) { return std::exp(-s); };
    // A jump at t = 1 needs more terms than the default to reach 1e-6 at t = 2.
    InversionSpec more;
    more.terms = 48;
    CHECK(std::abs(invert_laplace_cdf(point, 2.0, more).value - 1.0) < 1e-6);
    CHECK(std::abs(invert_laplace_cdf(point, 3.0).value - 1.0) < 1e-6);
    CHECK_THROWS_AS(invert_laplace_cdf(point, 2.0), NumericalError);
}

TEST_CASE("Laplace inversion reports a missed target") {
    InversionSpec inv;
    inv.target_abs_err = 1e-15;
    LaplaceFn point = [](cplx s) { return std::exp(-s); };
    CHECK_THROWS_AS(invert_laplace_cdf(point, 1.2, inv), NumericalError);
    try {
        invert_laplace_cdf(point, 1.2, inv);
    } catch (const NumericalError& e) {
        CHECK(e.error_estimate() > 1e-15);
        CHECK(std::isfinite(e.best_estimate()));
    }
}
