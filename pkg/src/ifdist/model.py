"""Parameters of the Interpolating Family and their classification.

A distribution is fixed by five parameters ``(p, b, c, q, x0)``:

* ``p`` interpolation parameter in ``[0, inf]``; infinity is the :data:`INF` tag
* ``b`` shape, nonzero real
* ``c`` scale, positive
* ``q`` tail weight, positive
* ``x0`` location, nonnegative; the support is ``[x0, inf)``
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "INF",
    "InvalidParam",
    "IFParams",
    "Subfamily",
    "validate",
    "classify",
    "parse_spec",
    "render",
    "format_number",
]


class _Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


#: Tag for ``p = infinity``. It deliberately does not support arithmetic.
INF = _Infinity.INF

ExtendedP = Union[float, _Infinity]


class InvalidParam(ValueError):
    """A parameter is outside its domain."""

    def __init__(self, field, reason):
        self.field = field
        self.reason = reason
        super().__init__(f"invalid parameter {field}: {reason}")


class Subfamily(enum.Enum):
    IF1 = "IF1"
    IF2 = "IF2"
    IF3 = "IF3"
    GENERAL = "GeneralIF"

    def __str__(self):
        return self.value


def _finite(field, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidParam(field, f"not a number: {value!r}") from None
    if not math.isfinite(value):
        raise InvalidParam(field, "must be finite")
    return value


@dataclass(frozen=True)
class IFParams:
    p: ExtendedP
    b: float
    c: float
    q: float
    x0: float

    def __post_init__(self):
        p = self.p
        if isinstance(p, str):
            if p.strip() != "inf":
                raise InvalidParam("p", f"not a number: {p!r}")
            p = INF
        if p is not INF:
            p = _finite("p", p)
            if p < 0.0:
                raise InvalidParam("p", "must be >= 0")
        b = _finite("b", self.b)
        c = _finite("c", self.c)
        q = _finite("q", self.q)
        x0 = _finite("x0", self.x0)
        if b == 0.0:
            raise InvalidParam("b", "must be nonzero")
        if c <= 0.0:
            raise InvalidParam("c", "must be > 0")
        if q <= 0.0:
            raise InvalidParam("q", "must be > 0")
        if x0 < 0.0:
            raise InvalidParam("x0", "must be >= 0")
        for name, value in zip("pbcq", (p, b, c, q)):
            object.__setattr__(self, name, value)
        object.__setattr__(self, "x0", x0)

    @property
    def p_is_infinite(self):
        return self.p is INF

    @property
    def subfamily(self):
        return classify(self)

    def replace(self, **changes):
        fields = dict(p=self.p, b=self.b, c=self.c, q=self.q, x0=self.x0)
        fields.update(changes)
        return IFParams(**fields)

    def __str__(self):
        return render(self)


def validate(p, b, c, q, x0):
    """Build :class:`IFParams` from raw values; ``p`` may be ``"inf"``.

    Raises :class:`InvalidParam` naming the first offending field.
    """
    if isinstance(p, float) and math.isinf(p) and p > 0:
        raise InvalidParam("p", "use the token 'inf' for infinite p")
    return IFParams(p, b, c, q, x0)


def classify(params):
    if params.p is INF:
        return Subfamily.IF2
    if params.p == 0.0:
        return Subfamily.IF1
    if params.b == 1.0:
        return Subfamily.IF3
    return Subfamily.GENERAL


# -- textual grammar: if(p=<v|inf>,b=<v>,c=<v>,q=<v>,x0=<v>) ------------------

_NUMBER = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_NUMBER_RE = re.compile(_NUMBER + r"\Z")
_CALL_RE = re.compile(r"\A([A-Za-z_][A-Za-z0-9_]*)\((.*)\)\Z", re.S)
_FIELDS = ("p", "b", "c", "q", "x0")


def format_number(value):
    """Shortest round-trip text for a float, without a trailing ``.0``."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def parse_call(text):
    """Split ``name(k=v, ...)`` into ``(name, {k: token})``.

    Whitespace is ignored; keys must be unique.
    """
    compact = re.sub(r"\s+", "", text)
    match = _CALL_RE.match(compact)
    if match is None:
        raise ValueError(f"malformed distribution spec: {text!r}")
    name, body = match.groups()
    args = {}
    if body:
        for item in body.split(","):
            key, sep, token = item.partition("=")
            if not sep or not key or not token:
                raise ValueError(f"malformed argument {item!r} in {text!r}")
            if key in args:
                raise ValueError(f"duplicate argument {key!r} in {text!r}")
            args[key] = token
    return name, args


def parse_number(field, token):
    if not _NUMBER_RE.match(token):
        raise InvalidParam(field, f"not a decimal literal: {token!r}")
    return float(token)


def parse_spec(text):
    """Parse the five-parameter ``if(...)`` grammar into :class:`IFParams`."""
    name, args = parse_call(text)
    if name != "if":
        raise ValueError(f"expected 'if(...)', got {name!r}")
    unknown = set(args) - set(_FIELDS)
    if unknown:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
    missing = [f for f in _FIELDS if f not in args]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    values = {}
    for field in _FIELDS:
        token = args[field]
        if field == "p" and token == "inf":
            values[field] = INF
        else:
            values[field] = parse_number(field, token)
    return IFParams(**values)


def render(params):
    p = "inf" if params.p is INF else format_number(params.p)
    rest = ",".join(f"{f}={format_number(getattr(params, f))}" for f in _FIELDS[1:])
    return f"if(p={p},{rest})"
