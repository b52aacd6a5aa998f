"""Pointwise density, distribution function, quantile and sampling.

Every function accepts a scalar or an array for its point argument and returns
the same shape (a float for scalar input). Work is done on the log of the
standardized variable ``s = (x - x0) / c`` by the kernels in
:mod:`ifdist._backend`.
"""
import math

import numpy as np

from ifdist._backend import IF1, IF2, IF3, GENERAL, kernels
from ifdist.model import Subfamily, classify

__all__ = [
    "pdf",
    "log_pdf",
    "cdf",
    "sf",
    "quantile",
    "sample",
    "log_pdf_at_log_s",
    "log_s_quantile",
    "uniform_logs",
]

_MODES = {
    Subfamily.IF1: IF1,
    Subfamily.IF2: IF2,
    Subfamily.IF3: IF3,
    Subfamily.GENERAL: GENERAL,
}


def kernel_args(params, formula=None):
    """``(mode, p, b, q)`` for the kernels; ``formula`` overrides dispatch."""
    tag = classify(params) if formula is None else formula
    p = 0.0 if params.p_is_infinite else float(params.p)
    if tag is Subfamily.IF2 and not params.p_is_infinite:
        raise ValueError("IF2 formula requires p = inf")
    if tag is not Subfamily.IF2 and params.p_is_infinite:
        raise ValueError(f"{tag} formula requires finite p")
    if tag is Subfamily.IF3 and params.b != 1.0:
        raise ValueError("IF3 formula requires b = 1")
    if tag is Subfamily.IF1 and p != 0.0:
        raise ValueError("IF1 formula requires p = 0")
    return _MODES[tag], p, params.b, params.q


def _boundary_log_pdf(params):
    """log density at x = x0 (may be +inf or -inf)."""
    b, q = params.b, params.q
    if params.p_is_infinite:
        if b > 0.0:
            return -math.inf
        exponent = -b * q - 1.0
        finite_value = math.log(abs(b) * q)
    elif b > 0.0:
        p = float(params.p)
        exponent = b * (p + 1.0) - 1.0
        la = -math.log1p(p) / q
        finite_value = math.log(b * q) - (q + 1.0 + p) * la + (p * math.log(q) if p else 0.0)
    else:
        exponent = -b * q - 1.0
        finite_value = math.log(abs(b) * q)
    if exponent > 0.0:
        return -math.inf
    if exponent < 0.0:
        return math.inf
    return finite_value - math.log(params.c)


def _shape_out(values, scalar):
    return float(values) if scalar else values


def log_pdf_at_log_s(params, ls, formula=None):
    """log f(x) at x = x0 + c * exp(ls); ``ls`` must be finite."""
    mode, p, b, q = kernel_args(params, formula)
    return kernels.log_pdf_std(mode, p, b, q, np.asarray(ls, dtype=float)) - math.log(params.c)


def log_pdf(params, x, formula=None):
    """Natural log of the density; ``-inf`` off the support."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    s = (x - params.x0) / params.c
    out = np.full(x.shape, -math.inf)
    inside = s > 0.0
    if inside.any():
        out[inside] = log_pdf_at_log_s(params, np.log(s[inside]), formula)
    at_edge = s == 0.0
    if at_edge.any():
        out[at_edge] = _boundary_log_pdf(params)
    out[np.isnan(x)] = math.nan
    return _shape_out(out[0] if scalar else out, scalar)


def pdf(params, x, formula=None):
    """Density; 0 below ``x0``, possibly ``+inf`` at ``x0``."""
    with np.errstate(over="ignore"):
        return _shape_out(np.exp(log_pdf(params, x, formula)), np.ndim(x) == 0)


def _log_cdf(params, x, upper):
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    s = (x - params.x0) / params.c
    out = np.full(x.shape, 0.0 if upper else -math.inf)
    inside = s > 0.0
    if inside.any():
        mode, p, b, q = kernel_args(params)
        out[inside] = kernels.log_cdf_std(mode, p, b, q, np.log(s[inside]), upper)
    out[np.isnan(x)] = math.nan
    return out[0] if scalar else out, scalar


def log_cdf_at_log_s(params, ls, upper=False):
    mode, p, b, q = kernel_args(params)
    return kernels.log_cdf_std(mode, p, b, q, np.asarray(ls, dtype=float), upper)


def cdf(params, x):
    """P(X <= x)."""
    values, scalar = _log_cdf(params, x, upper=False)
    return _shape_out(np.exp(values), scalar)


def sf(params, x):
    """P(X > x), computed without cancellation in the upper tail."""
    values, scalar = _log_cdf(params, x, upper=True)
    return _shape_out(np.exp(values), scalar)


def log_s_quantile(params, lu, l1mu):
    """log of the standardized quantile given ``log(u)`` and ``log(1 - u)``."""
    mode, p, b, q = kernel_args(params)
    return kernels.log_quantile_std(
        mode, p, b, q, np.asarray(lu, dtype=float), np.asarray(l1mu, dtype=float)
    )


def quantile(params, u):
    """Inverse of :func:`cdf` for ``0 < u < 1``."""
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    if not np.all((u > 0.0) & (u < 1.0)):
        raise ValueError("quantile: u must lie strictly between 0 and 1")
    ls = log_s_quantile(params, np.log(u), np.log1p(-u))
    x = params.x0 + params.c * np.exp(ls)
    return _shape_out(x[0] if scalar else x, scalar)


_TWO53 = 2.0**53


def uniform_logs(seed, n):
    """``(log u, log(1 - u))`` for ``n`` seeded uniforms on the open interval.

    Draws ``u = (k + 1/2) / 2**53`` with ``k`` uniform on ``[0, 2**53)``
    (PCG64), so both logs are exact to rounding.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    k = rng.integers(0, 2**53, size=n, dtype=np.int64).astype(float)
    return np.log((k + 0.5) / _TWO53), np.log((_TWO53 - k - 0.5) / _TWO53)


def sample(params, seed, n):
    """``n`` draws by inverse-transform sampling; deterministic in ``seed``."""
    if n < 0:
        raise ValueError("sample: n must be >= 0")
    if n == 0:
        return np.empty(0)
    lu, l1mu = uniform_logs(seed, n)
    return params.x0 + params.c * np.exp(log_s_quantile(params, lu, l1mu))
