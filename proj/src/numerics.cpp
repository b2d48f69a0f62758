#include "sgbounds/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace sgb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxGammaIter = 20000;

// Gauss-Kronrod 7/15 abscissae and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double magnitude(double v) { return std::abs(v); }
double magnitude(const cplx& v) { return std::abs(v); }

template <typename T>
struct Segment {
    double a;
    double b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename T, typename F>
Segment<T> kronrod15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T resg = fc * kWg[3];
    T resk = fc * kWgk[7];
    double resabs = magnitude(resk);
    std::array<T, 7> f1{};
    std::array<T, 7> f2{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const T sum = f1[j] + f2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (magnitude(f1[j]) + magnitude(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const T mean = resk * 0.5;
    double resasc = kWgk[7] * magnitude(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (magnitude(f1[j] - mean) + magnitude(f2[j] - mean));

    const double habs = std::abs(half);
    T value = resk * half;
    resabs *= habs;
    resasc *= habs;
    double err = magnitude((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(50.0 * kEps * resabs, err);
    return {a, b, value, err};
}

template <typename T, typename F>
QuadResult<T> adaptive(const F& f, double a, double b, const QuadSpec& spec) {
    std::priority_queue<Segment<T>> heap;
    heap.push(kronrod15<T>(f, a, b));
    T total = heap.top().value;
    double total_err = heap.top().error;
    int subdivisions = 1;

    // Segments too narrow to split in floating point are retired here.
    T frozen_value{};
    double frozen_err = 0.0;

    auto done = [&] {
        return total_err <= std::max(spec.rel_tol * magnitude(total), spec.abs_tol);
    };

    while (!done()) {
        if (subdivisions >= spec.max_subdivisions || heap.empty()) break;
        const Segment<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            std::abs(worst.b - worst.a) <= 4.0 * kEps * std::max(std::abs(mid), kTiny)) {
            frozen_value += worst.value;
            frozen_err += worst.error;
            continue;
        }
        const Segment<T> left = kronrod15<T>(f, worst.a, mid);
        const Segment<T> right = kronrod15<T>(f, mid, worst.b);
        ++subdivisions;
        heap.push(left);
        heap.push(right);

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
    }

    // Exact re-sum; the running totals above drift with add/subtract.
    total = frozen_value;
    total_err = frozen_err;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    QuadResult<T> out;
    out.value = total;
    out.abs_error = total_err;
    out.subdivisions = subdivisions;
    out.converged = done();
    if (!std::isfinite(magnitude(total))) out.converged = false;
    return out;
}

template <typename T, typename Fn>
QuadResult<T> integrate_impl(const Fn& f, double lo, double hi, const QuadSpec& spec) {
    spec.validate();
    if (std::isnan(lo) || std::isnan(hi) || std::isinf(lo))
        throw std::invalid_argument("integrate: lower limit must be finite");
    if (hi == lo) return {T{}, 0.0, 0, true};
    if (hi < lo) {
        auto r = integrate_impl<T>(f, hi, lo, spec);
        r.value = -r.value;
        return r;
    }
    if (std::isinf(hi)) {
        auto mapped = [&](double u) -> T {
            const double one_minus = 1.0 - u;
            const double x = lo + u / one_minus;
            if (std::isinf(x)) return T{};
            return f(x) / (one_minus * one_minus);
        };
        return adaptive<T>(mapped, 0.0, 1.0, spec);
    }
    return adaptive<T>(f, lo, hi, spec);
}

template <typename T>
T checked(const QuadResult<T>& r) {
    if (!r.converged) {
        throw NumericalError("quadrature did not converge after " +
                                 std::to_string(r.subdivisions) + " subdivisions",
                             magnitude(r.value), r.abs_error);
    }
    return r.value;
}

void check_gamma_args(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("incomplete gamma: a must be positive");
    if (!(x >= 0.0)) throw std::domain_error("incomplete gamma: x must be nonnegative");
}

// gamma(a, z) by its power series, valid for all z.
template <typename T>
T gamma_series(double a, T z) {
    T term = T(1.0 / a);
    T sum = term;
    for (int n = 1; n < kMaxGammaIter; ++n) {
        term *= z / (a + n);
        sum += term;
        if (magnitude(term) < magnitude(sum) * 1e-17) {
            return sum * std::exp(-z + a * std::log(z));
        }
    }
    throw NumericalError("incomplete gamma series did not converge", magnitude(sum), magnitude(term));
}

// Gamma(a, z) by the modified Lentz continued fraction.
template <typename T>
T gamma_cfrac(double a, T z) {
    T b = z + 1.0 - a;
    T c = T(1.0 / kTiny);
    T d = T(1.0) / b;
    T h = d;
    for (int i = 1; i < kMaxGammaIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (magnitude(d) < kTiny) d = T(kTiny);
        c = b + an / c;
        if (magnitude(c) < kTiny) c = T(kTiny);
        d = T(1.0) / d;
        const T del = d * c;
        h *= del;
        if (magnitude(del - 1.0) < 2.0 * kEps) return std::exp(-z + a * std::log(z)) * h;
    }
    throw NumericalError("incomplete gamma continued fraction did not converge", magnitude(h), 0.0);
}

}  // namespace

void QuadSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1)
        throw std::invalid_argument("QuadSpec: need rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1");
}

void InversionSpec::validate() const {
    if (terms < 8 || burnin < 0 || !(target_abs_err > 0.0))
        throw std::invalid_argument("InversionSpec: need terms >= 8, burnin >= 0, target_abs_err > 0");
}

double lower_inc_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return std::tgamma(a);
    if (x < a + 1.0) return gamma_series(a, x);
    return std::tgamma(a) - gamma_cfrac(a, x);
}

double upper_inc_gamma(double a, double x) {
    check_gamma_args(a, x);
    if (x == 0.0) return std::tgamma(a);
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return std::tgamma(a) - gamma_series(a, x);
    return gamma_cfrac(a, x);
}

namespace {
bool use_complex_series(double a, cplx z) { return std::abs(z) < std::max(a + 1.0, 10.0); }

void check_complex_args(double a, cplx z) {
    if (!(a > 0.0)) throw std::domain_error("incomplete gamma: a must be positive");
    if (z.real() < 0.0 || std::isnan(z.real()) || std::isnan(z.imag()))
        throw std::domain_error("incomplete gamma: complex argument needs Re z >= 0");
}
}  // namespace

cplx lower_inc_gamma(double a, cplx z) {
    check_complex_args(a, z);
    if (z == cplx(0.0)) return 0.0;
    if (use_complex_series(a, z)) return gamma_series(a, z);
    return std::tgamma(a) - gamma_cfrac(a, z);
}

cplx upper_inc_gamma(double a, cplx z) {
    check_complex_args(a, z);
    if (z == cplx(0.0)) return std::tgamma(a);
    if (use_complex_series(a, z)) return std::tgamma(a) - gamma_series(a, z);
    return gamma_cfrac(a, z);
}

double rho(double a, double b, const QuadSpec& spec) {
    if (!(b > 1.0)) throw std::domain_error("rho: integral diverges for b <= 1");
    if (!(a >= 0.0)) throw std::domain_error("rho: lower limit must be nonnegative");
    if (std::isinf(a)) return 0.0;
    auto f = [b](double x) { return 1.0 / (std::pow(x, b) + 1.0); };
    // Past c = max(a, 1), x = c w^(-1/(b-1)) turns the power tail into
    // c/(b-1) \int_0^1 dw / (c^b + w^(b/(b-1))), bounded even for b near 1.
    const double c = std::max(a, 1.0);
    const double cb = std::pow(c, b);
    const double p = b / (b - 1.0);
    auto tail = [cb, p](double w) { return 1.0 / (cb + std::pow(w, p)); };
    double out = c / (b - 1.0) * integrate_checked(tail, 0.0, 1.0, spec);
    if (a < c) out += integrate_checked(f, a, c, spec);
    return out;
}

QuadResult<double> integrate(const RealFn& f, double lo, double hi, const QuadSpec& spec) {
    return integrate_impl<double>(f, lo, hi, spec);
}

QuadResult<cplx> integrate(const ComplexFn& f, double lo, double hi, const QuadSpec& spec) {
    return integrate_impl<cplx>(f, lo, hi, spec);
}

double integrate_checked(const RealFn& f, double lo, double hi, const QuadSpec& spec) {
    return checked(integrate(f, lo, hi, spec));
}

cplx integrate_checked(const ComplexFn& f, double lo, double hi, const QuadSpec& spec) {
    return checked(integrate(f, lo, hi, spec));
}

InversionResult invert_laplace_cdf(const LaplaceFn& transform, double t, const InversionSpec& spec) {
    spec.validate();
    if (!(t > 0.0) || std::isinf(t)) throw std::domain_error("invert_laplace_cdf: t must be positive and finite");

    // Discretisation error of the trapezoid contour is about exp(-A).
    constexpr double A = 18.4;
    const double pi = std::acos(-1.0);
    const int total = spec.burnin + spec.terms + 1;
    const double scale = std::exp(0.5 * A) / t;

    auto image = [&](cplx s) { return (transform(s) / s).real(); };

    std::vector<double> partial(static_cast<std::size_t>(total) + 1);
    double sum = 0.5 * scale * image(cplx(0.5 * A / t, 0.0));
    partial[0] = sum;
    for (int k = 1; k <= total; ++k) {
        const cplx s(0.5 * A / t, k * pi / t);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += scale * sign * image(s);
        partial[static_cast<std::size_t>(k)] = sum;
    }

    // Binomial (Euler) average of partial sums S_n ... S_{n+m}.
    auto euler = [&](int n) {
        const int m = spec.terms;
        double acc = 0.0;
        double weight = std::ldexp(1.0, -m);
        for (int j = 0; j <= m; ++j) {
            acc += weight * partial[static_cast<std::size_t>(n + j)];
            weight *= static_cast<double>(m - j) / (j + 1);
        }
        return acc;
    };

    const double e0 = euler(spec.burnin);
    const double e1 = euler(spec.burnin + 1);
    InversionResult out;
    out.raw = e0;
    out.error_estimate = std::abs(e1 - e0);
    out.value = std::clamp(e0, 0.0, 1.0);
    if (!std::isfinite(e0) || out.error_estimate > spec.target_abs_err) {
        throw NumericalError("Laplace inversion error estimate exceeds target", out.value, out.error_estimate);
    }
    return out;
}

}  // namespace sgb
