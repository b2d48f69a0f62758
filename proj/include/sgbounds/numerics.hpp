#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sgb {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Raised when an iterative numerical routine misses its accuracy target.
/// Carries the best estimate so callers can decide whether to keep it.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_estimate, double error_estimate)
        : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}

    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }

private:
    double best_;
    double err_;
};

struct QuadSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;

    void validate() const;
};

struct InversionSpec {
    int terms = 32;   // binomial averaging order of the Euler sum
    int burnin = 15;  // plain partial-sum terms before averaging starts
    double target_abs_err = 1e-6;

    void validate() const;
};

template <typename T>
struct QuadResult {
    T value{};
    double abs_error = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Incomplete gamma functions. Series for x < a+1, Lentz continued fraction
// otherwise. x may be +inf.
double lower_inc_gamma(double a, double x);
double upper_inc_gamma(double a, double x);

// Complex-argument variants for Re z > 0 (principal branch of z^a). Needed by
// the Laplace evaluators, which are sampled along the Bromwich contour.
cplx lower_inc_gamma(double a, cplx z);
cplx upper_inc_gamma(double a, cplx z);

/// rho(a, b) = \int_a^\infty dx / (x^b + 1), b > 1.
double rho(double a, double b, const QuadSpec& spec = {});

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

/// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection.
/// `hi` may be +inf; the half line is mapped by x = lo + u/(1-u).
/// Nodes never touch the endpoints, so integrable endpoint singularities are
/// tolerated. Non-convergence is reported through `converged == false`.
QuadResult<double> integrate(const RealFn& f, double lo, double hi, const QuadSpec& spec = {});

/// Complex-valued integrand over a real interval. Real and imaginary parts
/// share one subdivision schedule; the error is the modulus of the complex
/// Kronrod-Gauss difference.
QuadResult<cplx> integrate(const ComplexFn& f, double lo, double hi, const QuadSpec& spec = {});

/// As `integrate` but throws NumericalError when the tolerance is missed.
double integrate_checked(const RealFn& f, double lo, double hi, const QuadSpec& spec = {});
cplx integrate_checked(const ComplexFn& f, double lo, double hi, const QuadSpec& spec = {});

// Lambdas convert to both function types; pick by the callable's result.
template <typename F>
    requires(!std::is_same_v<std::decay_t<F>, RealFn> && !std::is_same_v<std::decay_t<F>, ComplexFn>)
auto integrate(F&& f, double lo, double hi, const QuadSpec& spec = {}) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, double>, cplx>)
        return integrate(ComplexFn(std::forward<F>(f)), lo, hi, spec);
    else
        return integrate(RealFn(std::forward<F>(f)), lo, hi, spec);
}

template <typename F>
    requires(!std::is_same_v<std::decay_t<F>, RealFn> && !std::is_same_v<std::decay_t<F>, ComplexFn>)
auto integrate_checked(F&& f, double lo, double hi, const QuadSpec& spec = {}) {
    if constexpr (std::is_same_v<std::invoke_result_t<F&, double>, cplx>)
        return integrate_checked(ComplexFn(std::forward<F>(f)), lo, hi, spec);
    else
        return integrate_checked(RealFn(std::forward<F>(f)), lo, hi, spec);
}

using LaplaceFn = std::function<cplx(cplx)>;

struct InversionResult {
    double value = 0.0;      // clamped to [0, 1]
    double raw = 0.0;        // unclamped Euler sum
    double error_estimate = 0.0;
};

/// Pr{X <= t} for a nonnegative X with transform L(s) = E[exp(-sX)], by
/// Bromwich inversion of L(s)/s on the Abate-Whitt trapezoid contour with
/// Euler summation. Throws NumericalError if the estimated error exceeds
/// spec.target_abs_err.
InversionResult invert_laplace_cdf(const LaplaceFn& transform, double t,
                                   const InversionSpec& spec = {});

}  // namespace sgb
