"""Differential entropy (nats) and the maximum-entropy constraint pairs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from ifdist import _logmath as lm
from ifdist.model import Subfamily, classify
from ifdist.quadrature import integrate
from ifdist.specfun import EULER_GAMMA, digamma, harmonic, harmonic_minus_log

__all__ = [
    "CLOSED_FORM",
    "CLOSED_FORM_WITH_F",
    "Constraint",
    "EntropyValue",
    "Unsupported",
    "entropy",
    "entropy_if1",
    "entropy_if2",
    "entropy_if3",
    "general_entropy",
    "f_integral",
    "maxent_constraints",
]

CLOSED_FORM = "closed-form"
CLOSED_FORM_WITH_F = "closed-form-with-f-integral"
F_TOL = 1e-10
_S_MAX = 690.0
_LN2 = math.log(2.0)


class Unsupported(ValueError):
    """Operation not defined for this subfamily."""


@dataclass(frozen=True)
class EntropyValue:
    value: float
    method: str

    def __float__(self):
        return self.value


def _h_q_minus_1(q):
    # H_{q-1} = psi(q) + gamma_E, valid for every q > 0
    return digamma(q) + EULER_GAMMA


def f_integral(p, q, tol=F_TOL):
    """F(p, q) = (p + 1) int_0^1 log(t^(-1/q) - 1) (1 - t)^p dt.

    The two halves of [0, 1] are mapped to t = exp(-S) and 1 - t = exp(-S), which
    removes the logarithmic end-point singularities. Raises
    :class:`~ifdist.quadrature.NonConvergence` if refinement fails.
    """
    p, q = float(p), float(q)
    if not (p >= 0.0 and math.isfinite(p)):
        raise ValueError("f_integral: p must be finite and >= 0")
    if not q > 0.0:
        raise ValueError("f_integral: q must be > 0")

    def g(tau):
        big_s = np.abs(tau)
        e = np.exp(-big_s)
        near_one = np.log1p(-e)  # log of the complementary end
        lower = tau < 0.0
        log_t = np.where(lower, -big_s, near_one)
        log_1mt = np.where(lower, near_one, -big_s)
        # log(t^(-1/q) - 1), with -log t >= 0
        value = lm.log_expm1(-log_t / q)
        if p > 0.0:
            value = value * np.exp(p * log_1mt)
        return value * e

    edges = [1.0]
    while edges[-1] < _S_MAX:
        edges.append(2.0 * edges[-1])
    edges = [_LN2] + edges[:-1] + [_S_MAX]
    halves = list(zip(edges[:-1], edges[1:]))
    intervals = [(-b, -a) for a, b in halves] + halves
    res = integrate(g, intervals, epsabs=tol / (p + 1.0))
    return (p + 1.0) * res.value


def entropy_if1(b, c, q):
    return -math.log(abs(b) * q / c) + (b - 1.0) / b * _h_q_minus_1(q) + (q + 1.0) / q


def entropy_if2(b, c, q):
    bq = b * q
    return -math.log(abs(b) * q / c) + (bq + 1.0) / bq * EULER_GAMMA + 1.0


def entropy_if3(p, c, q):
    return -math.log(q / c) + (q + 1.0) / q * harmonic_minus_log(p + 1.0) + p / (p + 1.0)


def general_entropy(params, tol=F_TOL):
    """Five-parameter formula with the numerical F(p, q); any finite p."""
    if params.p_is_infinite:
        raise ValueError("general_entropy requires finite p")
    p, b, c, q = float(params.p), params.b, params.c, params.q
    shape_term = (b - 1.0) / b * f_integral(p, q, tol)
    return (
        -math.log(abs(b) * q / c)
        - shape_term
        - (b * q + 1.0) / (b * q) * math.log1p(p)
        + (q + 1.0) / q * harmonic(p + 1.0)
        + p / (p + 1.0)
    )


def entropy(params):
    """Differential entropy of the distribution, dispatched on the subfamily."""
    tag = classify(params)
    b, c, q = params.b, params.c, params.q
    if tag is Subfamily.IF1:
        return EntropyValue(entropy_if1(b, c, q), CLOSED_FORM)
    if tag is Subfamily.IF2:
        return EntropyValue(entropy_if2(b, c, q), CLOSED_FORM)
    if tag is Subfamily.IF3:
        return EntropyValue(entropy_if3(float(params.p), c, q), CLOSED_FORM)
    return EntropyValue(general_entropy(params), CLOSED_FORM_WITH_F)


class Constraint(NamedTuple):
    """An expectation E[phi(X)] and its value for the maximizing distribution.

    ``integrand`` takes ``log((x - x0) / c)`` (the oracle's ``"log_s"`` variable).
    """

    description: str
    expected: float
    integrand: Callable


def maxent_constraints(params):
    """The two expectations that characterize the subfamily as entropy maximizer."""
    tag = classify(params)
    b, q = params.b, params.q
    if tag is Subfamily.IF1:
        return [
            Constraint("E[ln((x-x0)/c)]", -_h_q_minus_1(q) / b, lambda ls: ls),
            Constraint("E[ln(1+((x-x0)/c)^b)]", 1.0 / q, lambda ls: lm.log1pexp(b * ls)),
        ]
    if tag is Subfamily.IF2:
        return [
            Constraint("E[ln((x-x0)/c)]", EULER_GAMMA / (b * q), lambda ls: ls),
            Constraint("E[((x-x0)/c)^(-bq)]", 1.0, lambda ls: np.exp(-b * q * ls)),
        ]
    if tag is Subfamily.IF3:
        p = float(params.p)
        la = -math.log1p(p) / q
        return [
            Constraint(
                "E[ln((p+1)^(-1/q)+(x-x0)/c)]",
                harmonic_minus_log(p + 1.0) / q,
                lambda ls: np.logaddexp(la, ls),
            ),
            Constraint(
                "E[ln(1-(1+(p+1)^(1/q)(x-x0)/c)^(-q))]",
                -1.0 / (p + 1.0),
                lambda ls: lm.log1mexp_of_log(math.log(q) + lm.log_log1pexp(ls - la)),
            ),
        ]
    raise Unsupported("maximum-entropy constraints are only stated for IF1, IF2 and IF3")
