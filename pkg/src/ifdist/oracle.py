"""Independent numerical estimates of expectations, entropy and moments.

Expectations are computed as ``E[phi(X)] = int_0^1 phi(Q(u)) du`` using the
closed-form quantile ``Q``. Each half of the unit interval is mapped to
``S = -log(u)`` (lower half) or ``S = -log(1 - u)`` (upper half), which turns
power-law behaviour at either end into smooth exponential decay. The region
``min(u, 1 - u) < exp(-690)`` is dropped.

Integrands receive one of three variables, chosen with ``variable``:

``"x"``      the point itself
``"s"``      the standardized point ``(x - x0) / c``
``"log_s"``  its logarithm; always finite, so use it for integrands that are
             singular at ``x0``
"""
import math
from dataclasses import dataclass

import numpy as np

from ifdist import density
from ifdist.quadrature import NonConvergence, QuadResult, integrate

__all__ = [
    "MCResult",
    "NonConvergence",
    "QuadResult",
    "quad_expectation",
    "quad_entropy",
    "mc_expectation",
    "truncated_moment",
    "quad_normalization",
    "ks_statistic",
]

S_MAX = 690.0
LN2 = math.log(2.0)
PANEL_LIMIT = 10_000


@dataclass(frozen=True)
class MCResult:
    estimate: float
    std_error: float
    n: int
    seed: int


def _geometric_breaks(lo, hi):
    points = [lo]
    edge = 1.0
    while edge < hi:
        if edge > lo:
            points.append(edge)
        edge *= 2.0
    points.append(hi)
    return list(zip(points[:-1], points[1:]))


def _transform(params, variable, ls):
    if variable == "log_s":
        return ls
    with np.errstate(over="ignore"):  # inf is reported by the quadrature
        s = np.exp(ls)
    if variable == "s":
        return s
    if variable == "x":
        return params.x0 + params.c * s
    raise ValueError(f"unknown variable {variable!r}; expected 'x', 's' or 'log_s'")


def _u_integral(params, integrand, variable, epsabs, epsrel, log_cdf_end=None):
    """int phi(Q(u)) du over exp(-S_MAX) < u < U.

    ``log_cdf_end`` is ``(log U, log(1 - U))``; ``None`` means U = 1 - exp(-S_MAX).
    """
    if log_cdf_end is None:
        lower = _geometric_breaks(LN2, S_MAX)
        upper = _geometric_breaks(LN2, S_MAX)
    else:
        log_u, log_1mu = log_cdf_end
        if log_u <= -LN2:
            lower = _geometric_breaks(-log_u, S_MAX)
            upper = []
        else:
            lower = _geometric_breaks(LN2, S_MAX)
            upper = _geometric_breaks(LN2, min(-log_1mu, S_MAX))
    # tau < 0 encodes the lower half (S = -tau), tau > 0 the upper half
    intervals = [(-b, -a) for a, b in lower] + upper

    def g(tau):
        big_s = np.abs(tau)
        e = np.exp(-big_s)
        near_one = np.log1p(-e)
        lower_half = tau < 0.0
        lu = np.where(lower_half, -big_s, near_one)
        l1mu = np.where(lower_half, near_one, -big_s)
        ls = density.log_s_quantile(params, lu, l1mu)
        values = np.asarray(integrand(_transform(params, variable, ls)), dtype=float)
        return values * e

    return integrate(g, intervals, epsabs=epsabs, epsrel=epsrel, limit=PANEL_LIMIT)


def quad_expectation(params, integrand, tol=1e-10, *, rel_tol=0.0, variable="x"):
    """E[phi(X)] by adaptive quadrature in the quantile variable.

    ``integrand`` is vectorized: it maps an array of points to an array.
    The result's error estimate is at most ``max(tol, rel_tol * |value|)``.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    return _u_integral(params, integrand, variable, tol, rel_tol)


def quad_entropy(params, tol=1e-9):
    """Differential entropy ``-E[log f(X)]`` in nats."""
    res = quad_expectation(
        params, lambda ls: density.log_pdf_at_log_s(params, ls), tol, variable="log_s"
    )
    return QuadResult(-res.value, res.abs_error_estimate, res.evaluations)


def mc_expectation(params, integrand, n, seed, *, variable="x"):
    """Monte Carlo mean of ``phi(X)`` over ``n`` inverse-transform draws."""
    if n < 2:
        raise ValueError("mc_expectation needs n >= 2")
    lu, l1mu = density.uniform_logs(seed, n)
    ls = density.log_s_quantile(params, lu, l1mu)
    values = np.asarray(integrand(_transform(params, variable, ls)), dtype=float)
    values = np.broadcast_to(values, ls.shape)
    estimate = float(np.mean(values))
    std_error = float(np.std(values, ddof=1) / math.sqrt(n))
    return MCResult(estimate, std_error, n, seed)


def truncated_moment(params, r, upper, rel_tol=1e-10):
    """int_{x0}^{upper} x^r f(x) dx, via u = F(x) on the truncated range."""
    if not upper > params.x0:
        raise ValueError("upper must exceed x0")
    if r < 0 or int(r) != r:
        raise ValueError("r must be a nonnegative integer")
    r = int(r)
    log_s = math.log((upper - params.x0) / params.c)
    log_f = float(density.log_cdf_at_log_s(params, log_s, upper=False))
    log_sf = float(density.log_cdf_at_log_s(params, log_s, upper=True))

    def phi(x):
        return x**r

    res = _u_integral(params, phi, "x", 0.0, rel_tol, log_cdf_end=(log_f, log_sf))
    return res.value


def quad_normalization(params, tol=1e-12):
    """int f(x) dx over the support, integrated in log(s) (no quantile map).

    The range is cut where the tail mass falls below 1e-15 on either side.
    """
    lo = float(density.log_s_quantile(params, math.log(1e-15), math.log1p(-1e-15)))
    hi = float(density.log_s_quantile(params, math.log1p(-1e-15), math.log(1e-15)))
    lo, hi = lo - 1.0, hi + 1.0

    def g(y):
        return np.exp(density.log_pdf_at_log_s(params, y) + y + math.log(params.c))

    edges = np.linspace(lo, hi, 33)
    return integrate(g, list(zip(edges[:-1], edges[1:])), epsabs=tol, limit=PANEL_LIMIT)


def ks_statistic(samples, cdf):
    """Kolmogorov-Smirnov distance between ``samples`` and a cdf callable."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))
