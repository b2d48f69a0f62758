"""SINR Monte Carlo, analytical bounds and Laplace inversion for Poisson ad hoc networks."""

from ._sgbounds import (
    NumericalError,
    avg_rate_lb_fd,
    avg_rate_lb_nfd,
    avg_rate_ub_nfd,
    beta_fd,
    beta_nfd,
    cdf_lb_nfd,
    cdf_ub_nfd,
    cdf_ub_nfd_tight,
    cdf_via_laplace,
    fading_cdf_exact,
    fading_cdf_lb,
    fading_cdf_ub,
    ks_critical_two_sample,
    ks_distance,
    laplace_inv_q,
    mean_inv_sir_nfd,
    mean_shannon_rate,
    mmimo,
    optimal_xi,
    outage_bounds_nfd,
    outage_capacity,
    outage_lb_fd,
    outage_rate,
    pfd_cdf_lb,
    simulate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
