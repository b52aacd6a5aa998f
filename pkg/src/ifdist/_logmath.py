"""Vectorized log-space primitives shared by the kernels and the closed forms."""
import numpy as np

LN2 = 0.6931471805599453


def log1pexp(t):
    """log(1 + e^t)."""
    return np.logaddexp(0.0, t)


def log_log1pexp(t):
    """log(log(1 + e^t)); equals t to double precision for t < -37."""
    t = np.asarray(t, dtype=float)
    return np.where(t < -37.0, t, np.log(np.logaddexp(0.0, np.maximum(t, -37.0))))


def log1mexp(y):
    """log(1 - e^-y) for y >= 0."""
    y = np.asarray(y, dtype=float)
    small = y < LN2
    with np.errstate(divide="ignore"):
        return np.where(
            small,
            np.log(-np.expm1(-np.where(small, y, 1.0))),
            np.log1p(-np.exp(-np.where(small, 1.0, y))),
        )


def log1mexp_of_log(ly):
    """log(1 - exp(-exp(ly)))."""
    ly = np.asarray(ly, dtype=float)
    return np.where(ly < -37.0, ly, log1mexp(np.exp(np.maximum(ly, -37.0))))


def log_expm1(y):
    """log(e^y - 1) for y >= 0."""
    y = np.asarray(y, dtype=float)
    big = y > 35.0
    yb = np.where(big, y, 36.0)
    with np.errstate(divide="ignore"):
        return np.where(big, yb + np.log1p(-np.exp(-yb)), np.log(np.expm1(np.where(big, 1.0, y))))
