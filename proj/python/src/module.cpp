#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sgbounds/bounds.hpp"
#include "sgbounds/laplace.hpp"
#include "sgbounds/mc.hpp"
#include "sgbounds/mmimo.hpp"

namespace py = pybind11;
using namespace sgb;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(std::vector<double> v) {
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<double> to_vector(const Array& a) { return {a.data(), a.data() + a.size()}; }

NetworkConfig make_config(double mu, double delta, double lambda, std::uint64_t seed, std::size_t k_min,
                          double tail_rel_tol) {
    NetworkConfig cfg;
    cfg.mu = mu;
    cfg.delta = delta;
    cfg.lambda = lambda;
    cfg.seed = seed;
    cfg.truncation.k_min = k_min;
    cfg.truncation.tail_rel_tol = tail_rel_tol;
    cfg.validate();
    return cfg;
}

OutageObjective parse_objective(const std::string& name) {
    if (name == "nfd_upper") return OutageObjective::NfdUpper;
    if (name == "nfd_lower") return OutageObjective::NfdLower;
    if (name == "fd_lower") return OutageObjective::FdLower;
    throw std::invalid_argument("unknown objective '" + name + "'");
}

MmimoRegime parse_regime(const std::string& name) {
    if (name == "finite") return MmimoRegime::Finite;
    if (name == "asymptotic") return MmimoRegime::Asymptotic;
    throw std::invalid_argument("unknown regime '" + name + "'");
}

// Network keyword arguments shared by the sampling and transform entry points.
#define SGB_NETWORK_ARGS                                                                                     \
    py::arg("mu") = 3.7, py::arg("delta") = 0.0, py::arg("lam") = 1.0, py::arg("seed") = 1, py::arg("k_min") = 500, \
        py::arg("tail_rel_tol") = 1e-2

}  // namespace

PYBIND11_MODULE(_sgbounds, m) {
    m.doc() = "SINR Monte Carlo, analytical bounds and Laplace inversion for Poisson ad hoc networks";

    // Held for the life of the process; instances carry the best estimate and its error.
    static py::handle numerical_error =
        py::exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NumericalError& e) {
            py::object err = py::reinterpret_borrow<py::object>(numerical_error)(e.what());
            err.attr("best_estimate") = e.best_estimate();
            err.attr("error_estimate") = e.error_estimate();
            PyErr_SetObject(numerical_error.ptr(), err.ptr());
        }
    });

    m.def("beta_nfd", &beta_nfd, py::arg("mu"));
    m.def("beta_fd", &beta_fd, py::arg("mu"));
    m.def("optimal_xi", &optimal_xi, py::arg("mu"));
    m.def("mean_inv_sir_nfd", &mean_inv_sir_nfd, py::arg("mu"));

    m.def("cdf_lb_nfd", py::vectorize(&cdf_lb_nfd), py::arg("q"), py::arg("mu"));
    m.def("cdf_ub_nfd", py::vectorize(&cdf_ub_nfd), py::arg("q"), py::arg("mu"));
    m.def("cdf_ub_nfd_tight", py::vectorize(&cdf_ub_nfd_tight), py::arg("q"), py::arg("mu"));
    m.def("fading_cdf_exact", py::vectorize([](double q, double mu) { return fading_cdf_exact(q, mu); }),
          py::arg("q"), py::arg("mu"));
    m.def("fading_cdf_lb", py::vectorize([](double q, double mu) { return fading_cdf_lb(q, mu); }), py::arg("q"),
          py::arg("mu"));
    m.def("fading_cdf_ub", py::vectorize(&fading_cdf_ub), py::arg("q"), py::arg("mu"));
    m.def("pfd_cdf_lb", py::vectorize(&pfd_cdf_lb), py::arg("q"), py::arg("mu"));

    m.def("avg_rate_ub_nfd", [](double alpha, double mu) { return avg_rate_ub_nfd(alpha, mu); }, py::arg("alpha"),
          py::arg("mu"));
    m.def("avg_rate_lb_nfd", [](double alpha, double mu) { return avg_rate_lb_nfd(alpha, mu); }, py::arg("alpha"),
          py::arg("mu"));
    m.def("avg_rate_lb_fd", [](double alpha, double mu) { return avg_rate_lb_fd(alpha, mu); }, py::arg("alpha"),
          py::arg("mu"));
    m.def(
        "outage_bounds_nfd",
        [](double alpha, double eta, double mu) {
            const OutageBounds b = outage_bounds_nfd({alpha, eta}, mu);
            return py::make_tuple(b.lb, b.ub);
        },
        py::arg("alpha"), py::arg("eta"), py::arg("mu"), "Returns (lb, ub).");
    m.def("outage_lb_fd", [](double alpha, double eta, double mu) { return outage_lb_fd({alpha, eta}, mu); },
          py::arg("alpha"), py::arg("eta"), py::arg("mu"));
    m.def(
        "outage_capacity",
        [](double alpha, double mu, const std::string& objective) {
            const OutageOptimum o = outage_capacity_numeric(alpha, mu, parse_objective(objective));
            return py::make_tuple(o.eta, o.value);
        },
        py::arg("alpha"), py::arg("mu"), py::arg("objective"),
        "Maximize an outage-rate bound over eta; objective is nfd_upper, nfd_lower or fd_lower. Returns (eta, value).");

    m.def(
        "simulate",
        [](const std::string& model, std::size_t n, unsigned threads, double mu, double delta, double lam,
           std::uint64_t seed, std::size_t k_min, double tail_rel_tol) {
            const NetworkConfig cfg = make_config(mu, delta, lam, seed, k_min, tail_rel_tol);
            const FadingModel fm = parse_fading_model(model);
            std::vector<double> samples;
            {
                py::gil_scoped_release release;
                samples = run_mc(cfg, fm, n, threads).samples;
            }
            return to_array(std::move(samples));
        },
        py::arg("model"), py::arg("n"), py::arg("threads") = 0, SGB_NETWORK_ARGS,
        "SINR samples; realization i depends only on (seed, i).");

    m.def(
        "mean_shannon_rate",
        [](const Array& samples, double alpha) {
            const auto v = to_vector(samples);
            const Estimate e = mean_shannon_rate(v, alpha);
            return py::make_tuple(e.value, e.se);
        },
        py::arg("samples"), py::arg("alpha"));
    m.def(
        "outage_rate",
        [](const Array& samples, double alpha, double eta) {
            const Estimate e = outage_rate(EmpiricalCdf(to_vector(samples)), RateParams{alpha, eta});
            return py::make_tuple(e.value, e.se);
        },
        py::arg("samples"), py::arg("alpha"), py::arg("eta"));
    m.def(
        "ks_distance",
        [](const Array& a, const Array& b) {
            return ks_distance(EmpiricalCdf(to_vector(a)), EmpiricalCdf(to_vector(b)));
        },
        py::arg("a"), py::arg("b"));
    m.def("ks_critical_two_sample", &ks_critical_two_sample, py::arg("n"), py::arg("m"), py::arg("level"));

    m.def(
        "laplace_inv_q",
        [](const std::string& model, std::complex<double> s, double mu, double delta, double lam) {
            const NetworkConfig cfg = make_config(mu, delta, lam, 1, 500, 1e-2);
            const FadingModel fm = parse_fading_model(model);
            if (fm == FadingModel::NonFading) return laplace_inv_q_nfd(s, cfg);
            if (fm == FadingModel::PartialFading) return laplace_inv_q_pfd(s, cfg);
            throw std::invalid_argument("laplace_inv_q: model must be nfd or pfd");
        },
        py::arg("model"), py::arg("s"), py::arg("mu") = 3.7, py::arg("delta") = 0.0, py::arg("lam") = 1.0);
    m.def(
        "cdf_via_laplace",
        [](const std::string& model, const Array& grid, double mu, double delta, double lam, int terms, int burnin,
           double target) {
            const NetworkConfig cfg = make_config(mu, delta, lam, 1, 500, 1e-2);
            InversionSpec inv;
            inv.terms = terms;
            inv.burnin = burnin;
            inv.target_abs_err = target;
            const auto g = to_vector(grid);
            LaplaceCdf out;
            {
                py::gil_scoped_release release;
                out = cdf_via_laplace(parse_fading_model(model), cfg, g, inv);
            }
            py::dict d;
            d["cdf"] = to_array(out.curve.values);
            d["error_estimate"] = to_array(out.error_estimate);
            d["failed"] = out.failed;
            return d;
        },
        py::arg("model"), py::arg("grid"), py::arg("mu") = 3.7, py::arg("delta") = 0.0, py::arg("lam") = 1.0,
        py::arg("terms") = InversionSpec{}.terms, py::arg("burnin") = InversionSpec{}.burnin,
        py::arg("target") = InversionSpec{}.target_abs_err,
        "CDF of the SINR by numerical Laplace inversion; returns a dict with cdf, error_estimate and failed indices.");

    m.def(
        "mmimo",
        [](std::size_t antennas, std::size_t n, const std::string& regime, double noise, unsigned threads, double mu,
           double delta, double lam, std::uint64_t seed, std::size_t k_min, double tail_rel_tol) {
            MmimoConfig cfg;
            cfg.base = make_config(mu, delta, lam, seed, k_min, tail_rel_tol);
            cfg.antennas = antennas;
            cfg.noise_over_power = noise;
            const MmimoRegime r = parse_regime(regime);
            std::vector<double> samples;
            {
                py::gil_scoped_release release;
                samples = run_mmimo(cfg, r, n, threads);
            }
            return to_array(std::move(samples));
        },
        py::arg("antennas"), py::arg("n"), py::arg("regime") = "finite", py::arg("noise") = 0.0,
        py::arg("threads") = 0, SGB_NETWORK_ARGS, "Massive-MIMO downlink SINR samples.");
}
