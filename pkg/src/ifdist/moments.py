"""Raw moments E[X^r] for integer r >= 0.

Closed forms exist for the three subfamilies; for the general five-parameter
distribution a quadrature fallback is available on request.

Every closed form expands (x0 + c*s)^r binomially, so the result is
``sum_i C(r, i) x0^i c^(r-i) I_{r-i}`` where ``I_j = E[s^j]`` is the
standardized moment.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from ifdist import oracle
from ifdist.model import Subfamily, classify
from ifdist.specfun import ln_gamma, log_beta

__all__ = [
    "MomentResult",
    "CLOSED_FORM",
    "QUADRATURE",
    "moment",
    "moment_if1",
    "moment_if2",
    "moment_if3",
    "moment_exists",
]

CLOSED_FORM = "closed-form"
QUADRATURE = "quadrature"

# above this ratio sum|t_k| / |sum t_k| the IF3 alternating sum is not trusted
CANCELLATION_LIMIT = 1e12
QUAD_REL_TOL = 1e-11


@dataclass(frozen=True)
class MomentResult:
    kind: str  # "finite" | "divergent" | "no-closed-form"
    value: Optional[float] = None
    method: Optional[str] = None

    @classmethod
    def finite(cls, value, method=CLOSED_FORM):
        return cls("finite", float(value), method)

    @property
    def is_finite(self):
        return self.kind == "finite"

    @property
    def is_divergent(self):
        return self.kind == "divergent"

    def __str__(self):
        if self.kind == "finite":
            return f"finite {self.value:.15g} {self.method}"
        return self.kind


DIVERGENT = MomentResult("divergent")
NO_CLOSED_FORM = MomentResult("no-closed-form")
MomentResult.DIVERGENT = DIVERGENT
MomentResult.NO_CLOSED_FORM = NO_CLOSED_FORM


def _check_r(r):
    if isinstance(r, bool) or int(r) != r or r < 0:
        raise ValueError(f"r must be a nonnegative integer, got {r!r}")
    return int(r)


def log_binom(r, i):
    if r <= 60:
        return math.log(math.comb(r, i))
    return ln_gamma(r + 1.0) - ln_gamma(i + 1.0) - ln_gamma(r - i + 1.0)


def _binomial_shift(params, r, log_std_moment):
    """sum_i C(r,i) x0^i c^(r-i) exp(log_std_moment(r-i)); all terms >= 0."""
    if params.x0 == 0.0:
        return math.exp(r * math.log(params.c) + log_std_moment(r))
    log_x0 = math.log(params.x0)
    log_c = math.log(params.c)
    terms = [
        math.exp(log_binom(r, i) + i * log_x0 + (r - i) * log_c + log_std_moment(r - i))
        for i in range(r + 1)
    ]
    return math.fsum(terms)


def moment_exists(params, r):
    """Whether E[X^r] is finite.

    IF1: b > 0 and r < bq, or b < 0 and r < -b.  IF2: b > 0 and r < bq, or b < 0.
    IF3: r < q.  Otherwise from the tails: b > 0 needs r < bq, b < 0 needs
    r < -b (p + 1).
    """
    r = _check_r(r)
    b, q = params.b, params.q
    tag = classify(params)
    if b > 0.0:
        return r < b * q
    if tag is Subfamily.IF2:
        return True
    if tag is Subfamily.IF1:
        return r < -b
    return r < -b * (float(params.p) + 1.0)


def moment_if1(params, r):
    """E[X^r] with p = 0, terms Gamma(q - j/b) Gamma(1 + j/b) / Gamma(q)."""
    r = _check_r(r)
    if params.p_is_infinite or params.p != 0.0:
        raise ValueError("moment_if1 requires p = 0")
    b, q = params.b, params.q
    if not ((b > 0.0 and r < b * q) or (b < 0.0 and r < -b)):
        return DIVERGENT
    lg_q = ln_gamma(q)

    def log_std(j):
        if j == 0:
            return 0.0
        return ln_gamma(q - j / b) + ln_gamma(1.0 + j / b) - lg_q

    return MomentResult.finite(_binomial_shift(params, r, log_std))


def moment_if2(params, r):
    """E[X^r] with p = inf, terms Gamma(1 - j/(bq))."""
    r = _check_r(r)
    if not params.p_is_infinite:
        raise ValueError("moment_if2 requires p = inf")
    b, q = params.b, params.q
    if b > 0.0 and r >= b * q:
        return DIVERGENT

    def log_std(j):
        return 0.0 if j == 0 else ln_gamma(1.0 - j / (b * q))

    return MomentResult.finite(_binomial_shift(params, r, log_std))


def _if3_std_moment(j, p, q):
    """(p+1)^(1-j/q) sum_k C(j,k) (-1)^k B(1 - (j-k)/q, p+1) and its condition."""
    if j == 0:
        return 1.0, 1.0
    scale = (1.0 - j / q) * math.log1p(p)
    terms = []
    for k in range(j + 1):
        mag = math.exp(log_binom(j, k) + log_beta(1.0 - (j - k) / q, p + 1.0) + scale)
        terms.append(-mag if k % 2 else mag)
    total = math.fsum(terms)
    cond = math.fsum(abs(t) for t in terms) / abs(total) if total != 0.0 else math.inf
    return total, cond


def moment_if3(params, r):
    """E[X^r] with b = 1 and finite p, via the alternating beta-function sum.

    Falls back to quadrature (method ``quadrature``) when the alternating sum
    loses more than 12 digits to cancellation.
    """
    r = _check_r(r)
    if params.p_is_infinite or params.b != 1.0:
        raise ValueError("moment_if3 requires b = 1 and finite p")
    p, q = float(params.p), params.q
    if not r < q:
        return DIVERGENT
    std = {}
    for j in range(r + 1):
        value, cond = _if3_std_moment(j, p, q)
        if cond > CANCELLATION_LIMIT or value <= 0.0:
            return MomentResult.finite(_quad_moment(params, r), QUADRATURE)
        std[j] = math.log(value)
    return MomentResult.finite(_binomial_shift(params, r, std.__getitem__))


def _quad_moment(params, r, rel_tol=QUAD_REL_TOL):
    res = oracle.quad_expectation(
        params, lambda x: x**r, tol=1e-300, rel_tol=rel_tol, variable="x"
    )
    return res.value


def moment(params, r, fallback=False):
    """E[X^r], dispatched on the subfamily.

    The general family has no closed form: the result is ``no-closed-form``
    unless ``fallback`` is set, in which case it is computed by quadrature (or
    reported divergent from the tail exponents).
    """
    r = _check_r(r)
    tag = classify(params)
    if tag is Subfamily.IF1:
        return moment_if1(params, r)
    if tag is Subfamily.IF2:
        return moment_if2(params, r)
    if tag is Subfamily.IF3:
        return moment_if3(params, r)
    if not fallback:
        return NO_CLOSED_FORM
    if not moment_exists(params, r):
        return DIVERGENT
    return MomentResult.finite(_quad_moment(params, r), QUADRATURE)
