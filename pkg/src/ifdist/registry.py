"""Named special cases of the Interpolating Family.

Each entry maps its own free parameters onto ``(p, b, c, q, x0)`` and carries
the textbook mean, entropy and maximum-entropy constraints written directly in
terms of gamma, beta and harmonic functions. These expressions are kept apart
from :mod:`ifdist.moments` and :mod:`ifdist.entropy` so that comparing the two
is a real check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ifdist import _logmath as lm
from ifdist.entropy import Constraint
from ifdist.model import INF, IFParams, InvalidParam, parse_call, parse_number
from ifdist.moments import DIVERGENT, MomentResult
from ifdist.specfun import EULER_GAMMA, beta, digamma, gamma

__all__ = [
    "NamedCase",
    "UnknownCase",
    "CASES",
    "list_cases",
    "get_case",
    "resolve",
    "table_mean",
    "table_mean_constraint",
    "table_entropy",
    "table_constraints",
    "parse_named",
]

G = EULER_GAMMA


class UnknownCase(KeyError):
    def __str__(self):
        return f"unknown distribution {self.args[0]!r}; see `ifdist registry --list`"


def H(x):
    # harmonic number, extended to x > -1 so that H_{q-1} is defined for all q > 0
    return digamma(x + 1.0) + G


# domain predicates for free parameters
def _positive(v):
    return v > 0.0


def _nonnegative(v):
    return v >= 0.0


def _negative(v):
    return v < 0.0


def _at_least_one(v):
    return v >= 1.0


_DOMAINS = {
    "> 0": _positive,
    ">= 0": _nonnegative,
    "< 0": _negative,
    ">= 1": _at_least_one,
}


@dataclass(frozen=True)
class NamedCase:
    name: str
    title: str
    free_params: Tuple[Tuple[str, str], ...]
    mapping_text: str
    mapping: Callable[..., IFParams]
    mean: Callable[..., float]
    mean_condition: Callable[..., bool]
    mean_condition_text: str
    entropy: Callable[..., float]
    constraints: Callable[..., List[Constraint]]

    @property
    def symbols(self):
        return tuple(sym for sym, _ in self.free_params)

    def describe(self):
        args = ", ".join(f"{s} {d}" for s, d in self.free_params)
        lines = [
            f"{self.name}: {self.title}",
            f"  free parameters: {args}",
            f"  (p, b, c, q, x0) = {self.mapping_text}",
            f"  mean exists if: {self.mean_condition_text}",
        ]
        return "\n".join(lines)


def _ln_s(ls):
    return ls


def _case(name, title, free, mapping_text, mapping, mean, cond, cond_text, entropy, constraints):
    return NamedCase(
        name, title, tuple(free), mapping_text, mapping, mean, cond, cond_text, entropy,
        constraints,
    )


def _gamma_ratio_mean(b, q):
    return gamma(q - 1.0 / b) * gamma(1.0 + 1.0 / b) / gamma(q)


_ALWAYS = lambda **kw: True  # noqa: E731


def _build():
    cases = [
        _case(
            "pareto4", "Pareto IV",
            [("gamma", "> 0"), ("c", "> 0"), ("q", "> 0"), ("x0", ">= 0")],
            "(0, 1/gamma, c, q, x0)",
            lambda gamma, c, q, x0: IFParams(0.0, 1.0 / gamma, c, q, x0),
            lambda gamma, c, q, x0: x0 + c * _pareto4_ratio(gamma, q),
            lambda gamma, c, q, x0: q > gamma, "q > gamma",
            lambda gamma, c, q, x0: (1.0 - gamma) * H(q - 1.0) + (q + 1.0) / q
            - math.log(q / (c * gamma)),
            lambda gamma, c, q, x0: [
                Constraint("E[ln((x-x0)/c)]", -gamma * H(q - 1.0), _ln_s),
                Constraint("E[ln(1+((x-x0)/c)^(1/gamma))]", 1.0 / q,
                           lambda ls: lm.log1pexp(ls / gamma)),
            ],
        ),
        _case(
            "lindsay_burr3", "Lindsay-Burr III",
            [("b", "< 0"), ("c", "> 0"), ("q", "> 0"), ("x0", ">= 0")],
            "(0, b, c, q, x0)",
            lambda b, c, q, x0: IFParams(0.0, b, c, q, x0),
            lambda b, c, q, x0: x0 + c * _gamma_ratio_mean(b, q),
            lambda b, c, q, x0: b < -1.0, "b < -1",
            lambda b, c, q, x0: (b - 1.0) / b * H(q - 1.0) + (q + 1.0) / q
            - math.log(abs(b) * q / c),
            lambda b, c, q, x0: [
                Constraint("E[ln((x-x0)/c)]", -H(q - 1.0) / b, _ln_s),
                Constraint("E[ln(1+((x-x0)/c)^b)]", 1.0 / q, lambda ls: lm.log1pexp(b * ls)),
            ],
        ),
        _case(
            "pareto2", "Pareto II",
            [("c", "> 0"), ("q", "> 0"), ("x0", ">= 0")],
            "(0, 1, c, q, x0)",
            lambda c, q, x0: IFParams(0.0, 1.0, c, q, x0),
            lambda c, q, x0: x0 + c / (q - 1.0),
            lambda c, q, x0: q > 1.0, "q > 1",
            lambda c, q, x0: (q + 1.0) / q - math.log(q / c),
            lambda c, q, x0: [
                Constraint("E[ln((x-x0)/c)]", -H(q - 1.0), _ln_s),
                Constraint("E[ln(1+(x-x0)/c)]", 1.0 / q, lm.log1pexp),
            ],
        ),
        _case(
            "pareto3", "Pareto III",
            [("gamma", "> 0"), ("c", "> 0"), ("x0", ">= 0")],
            "(0, 1/gamma, c, 1, x0)",
            lambda gamma, c, x0: IFParams(0.0, 1.0 / gamma, c, 1.0, x0),
            lambda gamma, c, x0: x0 + c * _gamma_fn(1.0 - gamma) * _gamma_fn(1.0 + gamma),
            lambda gamma, c, x0: gamma < 1.0, "gamma < 1",
            lambda gamma, c, x0: 2.0 + math.log(c * gamma),
            lambda gamma, c, x0: [
                Constraint("E[ln((x-x0)/c)]", 0.0, _ln_s),
                Constraint("E[ln(1+((x-x0)/c)^(1/gamma))]", 1.0,
                           lambda ls: lm.log1pexp(ls / gamma)),
            ],
        ),
        _case(
            "tadikamalla_burr12", "Tadikamalla-Burr XII",
            [("b", "> 0"), ("c", "> 0"), ("q", "> 0")],
            "(0, b, c, q, 0)",
            lambda b, c, q: IFParams(0.0, b, c, q, 0.0),
            lambda b, c, q: c * _gamma_ratio_mean(b, q),
            lambda b, c, q: b * q > 1.0, "bq > 1",
            lambda b, c, q: (b - 1.0) / b * H(q - 1.0) + (q + 1.0) / q - math.log(abs(b) * q / c),
            lambda b, c, q: [
                Constraint("E[ln(x/c)]", -H(q - 1.0) / b, _ln_s),
                Constraint("E[ln(1+(x/c)^b)]", 1.0 / q, lambda ls: lm.log1pexp(b * ls)),
            ],
        ),
        _case(
            "fisk", "Fisk",
            [("b", "> 0"), ("c", "> 0")],
            "(0, b, c, 1, 0)",
            lambda b, c: IFParams(0.0, b, c, 1.0, 0.0),
            lambda b, c: c * _gamma_fn(1.0 - 1.0 / b) * gamma(1.0 + 1.0 / b),
            lambda b, c: b > 1.0, "b > 1",
            lambda b, c: 2.0 - math.log(b / c),
            lambda b, c: [
                Constraint("E[ln(x/c)]", 0.0, _ln_s),
                Constraint("E[ln(1+(x/c)^b)]", 1.0, lambda ls: lm.log1pexp(b * ls)),
            ],
        ),
        _case(
            "lomax", "Lomax",
            [("c", "> 0"), ("q", "> 0")],
            "(0, 1, c, q, 0)",
            lambda c, q: IFParams(0.0, 1.0, c, q, 0.0),
            lambda c, q: c / (q - 1.0),
            lambda c, q: q > 1.0, "q > 1",
            lambda c, q: (q + 1.0) / q - math.log(q / c),
            lambda c, q: [
                Constraint("E[ln(x/c)]", -H(q - 1.0), _ln_s),
                Constraint("E[ln(1+x/c)]", 1.0 / q, lm.log1pexp),
            ],
        ),
        _case(
            "pareto1", "Pareto I",
            [("q", "> 0"), ("x0", "> 0")],
            "(0, 1, x0, q, x0)",
            lambda q, x0: IFParams(0.0, 1.0, x0, q, x0),
            lambda q, x0: q / (q - 1.0) * x0,
            lambda q, x0: q > 1.0, "q > 1",
            lambda q, x0: (q + 1.0) / q - math.log(q / x0),
            # with c = x0: x/c - 1 = s and x/x0 = 1 + s
            lambda q, x0: [
                Constraint("E[ln(x/x0-1)]", -H(q - 1.0), _ln_s),
                Constraint("E[ln(x/x0)]", 1.0 / q, lm.log1pexp),
            ],
        ),
        _case(
            "burr12", "Burr XII",
            [("b", "> 0"), ("q", "> 0")],
            "(0, b, 1, q, 0)",
            lambda b, q: IFParams(0.0, b, 1.0, q, 0.0),
            lambda b, q: _gamma_ratio_mean(b, q),
            lambda b, q: b * q > 1.0, "bq > 1",
            lambda b, q: (b - 1.0) / b * H(q - 1.0) + (q + 1.0) / q - math.log(b * q),
            lambda b, q: [
                Constraint("E[ln(x)]", -H(q - 1.0) / b, _ln_s),
                Constraint("E[ln(1+x^b)]", 1.0 / q, lambda ls: lm.log1pexp(b * ls)),
            ],
        ),
        _case(
            "weibull", "Weibull",
            [("c", "> 0"), ("q", "> 0"), ("x0", ">= 0")],
            "(inf, -1, c, q, x0)",
            lambda c, q, x0: IFParams(INF, -1.0, c, q, x0),
            lambda c, q, x0: x0 + c * gamma(1.0 + 1.0 / q),
            _ALWAYS, "always",
            lambda c, q, x0: (q - 1.0) / q * G + 1.0 - math.log(q / c),
            lambda c, q, x0: [
                Constraint("E[ln((x-x0)/c)]", -G / q, _ln_s),
                Constraint("E[(x-x0)^q]", c**q, lambda ls: np.exp(q * (math.log(c) + ls))),
            ],
        ),
        _case(
            "frechet", "Frechet",
            [("c", "> 0"), ("q", "> 0"), ("x0", ">= 0")],
            "(inf, 1, c, q, x0)",
            lambda c, q, x0: IFParams(INF, 1.0, c, q, x0),
            lambda c, q, x0: x0 + c * gamma(1.0 - 1.0 / q),
            lambda c, q, x0: q > 1.0, "q > 1",
            lambda c, q, x0: (q + 1.0) / q * G + 1.0 - math.log(q / c),
            lambda c, q, x0: [
                Constraint("E[ln((x-x0)/c)]", G / q, _ln_s),
                Constraint("E[(x-x0)^(-q)]", c**-q, lambda ls: np.exp(-q * (math.log(c) + ls))),
            ],
        ),
        _case(
            "gumbel2", "Gumbel II",
            [("c", "> 0"), ("q", "> 0")],
            "(inf, 1, c, q, 0)",
            lambda c, q: IFParams(INF, 1.0, c, q, 0.0),
            lambda c, q: c * gamma(1.0 - 1.0 / q),
            lambda c, q: q > 1.0, "q > 1",
            lambda c, q: (q + 1.0) / q * G + 1.0 - math.log(q / c),
            lambda c, q: [
                Constraint("E[ln(x/c)]", G / q, _ln_s),
                Constraint("E[x^(-q)]", c**-q, lambda ls: np.exp(-q * (math.log(c) + ls))),
            ],
        ),
        _case(
            "rayleigh", "Rayleigh",
            [("c", "> 0")],
            "(inf, -1, c, 2, 0)",
            lambda c: IFParams(INF, -1.0, c, 2.0, 0.0),
            lambda c: c / math.sqrt(2.0) * math.sqrt(math.pi / 2.0),
            _ALWAYS, "always",
            lambda c: 0.5 * G + math.log(c / 2.0) + 1.0,
            lambda c: [
                Constraint("E[ln(x/c)]", -G / 2.0, _ln_s),
                Constraint("E[x^2]", c**2, lambda ls: np.exp(2.0 * (math.log(c) + ls))),
            ],
        ),
        _case(
            "exponential", "Exponential",
            [("c", "> 0")],
            "(inf, -1, c, 1, 0)",
            lambda c: IFParams(INF, -1.0, c, 1.0, 0.0),
            lambda c: c,
            _ALWAYS, "always",
            lambda c: math.log(c) + 1.0,
            lambda c: [
                Constraint("E[x]", c, lambda ls: c * np.exp(ls)),
            ],
        ),
        _case(
            "generalized_lomax", "Generalized Lomax",
            [("m", ">= 1"), ("c", "> 0"), ("q", "> 0")],
            "(m-1, 1, c, q, 0)",
            lambda m, c, q: IFParams(m - 1.0, 1.0, c, q, 0.0),
            # second term is B(1, m) = 1/m, not B(1+1/q, m)
            lambda m, c, q: c * m ** (1.0 - 1.0 / q) * (_beta_fn(1.0 - 1.0 / q, m) - beta(1.0, m)),
            lambda m, c, q: q > 1.0, "q > 1",
            lambda m, c, q: (q + 1.0) / q * (H(m) - math.log(m)) + (m - 1.0) / m
            - math.log(q / c),
            lambda m, c, q: [
                Constraint("E[ln(m^(-1/q)+x/c)]", (H(m) - math.log(m)) / q,
                           lambda ls: np.logaddexp(-math.log(m) / q, ls)),
                Constraint("E[ln(1-(1+m^(1/q)x/c)^(-q))]", -1.0 / m,
                           lambda ls: lm.log1mexp_of_log(
                               math.log(q) + lm.log_log1pexp(ls + math.log(m) / q))),
            ],
        ),
        _case(
            "stoppa", "Stoppa",
            [("m", ">= 1"), ("c", "> 0"), ("q", "> 0")],
            "(m-1, 1, c, q, c*m^(-1/q))",
            lambda m, c, q: IFParams(m - 1.0, 1.0, c, q, c * m ** (-1.0 / q)),
            lambda m, c, q: c * m ** (-1.0 / q) * m * _beta_fn(1.0 - 1.0 / q, m),
            lambda m, c, q: q > 1.0, "q > 1",
            lambda m, c, q: (q + 1.0) / q * (H(m) - math.log(m)) + (m - 1.0) / m
            - math.log(q / c),
            # x/c = s + m^(-1/q)
            lambda m, c, q: [
                Constraint("E[ln(x/c)]", (H(m) - math.log(m)) / q,
                           lambda ls: np.logaddexp(ls, -math.log(m) / q)),
                Constraint("E[ln(1-m^(-1)(x/c)^(-q))]", -1.0 / m,
                           # m (x/c)^q = (1 + m^(1/q) s)^q, kept in log form near s = 0
                           lambda ls: lm.log1mexp_of_log(
                               math.log(q) + lm.log_log1pexp(ls + math.log(m) / q))),
            ],
        ),
    ]
    return {case.name: case for case in cases}


def _gamma_fn(x):
    return gamma(x) if x > 0.0 else math.inf


def _beta_fn(a, b):
    return beta(a, b) if a > 0.0 else math.inf


def _pareto4_ratio(gamma_, q):
    return _gamma_fn(q - gamma_) * gamma(1.0 + gamma_) / gamma(q)


CASES: Dict[str, NamedCase] = _build()


def list_cases():
    return list(CASES)


def get_case(name):
    try:
        return CASES[name]
    except KeyError:
        raise UnknownCase(name) from None


def _free_values(case, free_params):
    given = set(free_params)
    expected = set(case.symbols)
    if given - expected:
        extra = sorted(given - expected)[0]
        raise InvalidParam(extra, f"not a parameter of {case.name} (expects {', '.join(case.symbols)})")
    if expected - given:
        missing = [s for s in case.symbols if s not in given][0]
        raise InvalidParam(missing, f"required by {case.name}")
    values = {}
    for sym, domain in case.free_params:
        try:
            v = float(free_params[sym])
        except (TypeError, ValueError):
            raise InvalidParam(sym, f"not a number: {free_params[sym]!r}") from None
        if not math.isfinite(v):
            raise InvalidParam(sym, "must be finite")
        if not _DOMAINS[domain](v):
            raise InvalidParam(sym, f"must be {domain}")
        values[sym] = v
    return values


def resolve(name, free_params):
    """Map a named case and its free parameters to :class:`IFParams`."""
    case = get_case(name)
    return case.mapping(**_free_values(case, free_params))


def table_mean_constraint(name, free_params):
    case = get_case(name)
    return bool(case.mean_condition(**_free_values(case, free_params)))


def table_mean(name, free_params):
    """Tabulated mean, or divergent when the case's constraint fails."""
    case = get_case(name)
    values = _free_values(case, free_params)
    if not case.mean_condition(**values):
        return DIVERGENT
    return MomentResult.finite(case.mean(**values))


def table_entropy(name, free_params):
    case = get_case(name)
    return case.entropy(**_free_values(case, free_params))


def table_constraints(name, free_params):
    """Tabulated maximum-entropy constraints; integrands take log((x - x0)/c)."""
    case = get_case(name)
    return case.constraints(**_free_values(case, free_params))


def parse_named(text):
    """Parse ``name(sym=v, ...)`` into ``(name, {sym: value})``."""
    name, args = parse_call(text)
    get_case(name)
    return name, {k: parse_number(k, v) for k, v in args.items()}


def parse_dist(text):
    """Parse either grammar (``if(...)`` or a named case) into :class:`IFParams`."""
    from ifdist.model import parse_spec

    name, _ = parse_call(text)
    if name == "if":
        return parse_spec(text)
    name, free = parse_named(text)
    return resolve(name, free)
