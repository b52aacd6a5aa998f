"""The Interpolating Family of size distributions.

A five-parameter family ``(p, b, c, q, x0)`` that moves from a pure power law
(``p = 0``) to a power law with an exponential cut-off (``p = inf``).
"""
from ifdist._backend import BACKEND
from ifdist.density import cdf, log_pdf, pdf, quantile, sample, sf
from ifdist.model import INF, IFParams, InvalidParam, Subfamily, classify, parse_spec, render
from ifdist.moments import MomentResult, moment
from ifdist.quadrature import NonConvergence
from ifdist.registry import UnknownCase, list_cases, parse_dist, resolve

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "INF",
    "IFParams",
    "InvalidParam",
    "MomentResult",
    "NonConvergence",
    "Subfamily",
    "UnknownCase",
    "cdf",
    "classify",
    "list_cases",
    "log_pdf",
    "moment",
    "parse_dist",
    "parse_spec",
    "pdf",
    "quantile",
    "render",
    "resolve",
    "sample",
    "sf",
]
