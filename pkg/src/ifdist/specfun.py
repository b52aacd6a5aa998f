"""Special functions used by the closed forms: log-gamma, digamma, log-beta,
generalized harmonic numbers and the Euler-Mascheroni constant.

All functions take and return plain floats. Arguments outside the domain raise
:class:`DomainError`.
"""
import math

from ifdist._backend import kernels

__all__ = [
    "DomainError",
    "EULER_GAMMA",
    "ln_gamma",
    "gamma",
    "digamma",
    "harmonic",
    "harmonic_minus_log",
    "log_beta",
    "beta",
    "euler_mascheroni",
]

EULER_GAMMA = 0.57721566490153286061


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


def _check_positive(name, **args):
    for key, value in args.items():
        if not (value > 0.0) or math.isinf(value):
            raise DomainError(f"{name}: {key} must be positive and finite, got {value!r}")


def ln_gamma(x):
    """Natural log of the gamma function for ``x > 0``."""
    x = float(x)
    _check_positive("ln_gamma", x=x)
    return kernels.ln_gamma(x)


def gamma(x):
    x = float(x)
    _check_positive("gamma", x=x)
    return math.exp(kernels.ln_gamma(x))


def digamma(x):
    """psi(x) = d/dx log Gamma(x), ``x > 0``."""
    x = float(x)
    _check_positive("digamma", x=x)
    return kernels.digamma(x)


def harmonic(x):
    """Generalized harmonic number H_x = psi(x + 1) + gamma_E for ``x >= 0``.

    Agrees with sum_{k=1}^{n} 1/k at integer ``n``.
    """
    x = float(x)
    if not (x >= 0.0) or math.isinf(x):
        raise DomainError(f"harmonic: x must be >= 0 and finite, got {x!r}")
    if x == 0.0:
        return 0.0
    return kernels.digamma(x + 1.0) + EULER_GAMMA


def harmonic_minus_log(x):
    """H_x - log(x) for ``x > 0``, without cancellation at large ``x``.

    Tends to gamma_E as x grows.
    """
    x = float(x)
    _check_positive("harmonic_minus_log", x=x)
    # psi(x+1) - log(x) = [psi(x+1) - log(x+1)] + log1p(1/x)
    return kernels.psi_minus_log(x + 1.0) + math.log1p(1.0 / x) + EULER_GAMMA


def log_beta(a, b):
    """log B(a, b) for ``a, b > 0``; stable when one argument is large."""
    a, b = float(a), float(b)
    _check_positive("log_beta", a=a, b=b)
    return kernels.log_beta(a, b)


def beta(a, b):
    return math.exp(log_beta(a, b))


def euler_mascheroni():
    return EULER_GAMMA
