import math

import numpy as np
import pytest
from scipy import special

from ifdist import density, entropy, moments, oracle, registry
from ifdist.grids import REGISTRY_POINTS
from ifdist.model import INF, IFParams, InvalidParam
from ifdist.registry import UnknownCase
from ifdist.specfun import EULER_GAMMA

NAMES = [
    "pareto4", "lindsay_burr3", "pareto2", "pareto3", "tadikamalla_burr12", "fisk", "lomax",
    "pareto1", "burr12", "weibull", "frechet", "gumbel2", "rayleigh", "exponential",
    "generalized_lomax", "stoppa",
]

POINTS = [(name, free) for name in NAMES for free in REGISTRY_POINTS[name]]


def test_list_cases():
    assert registry.list_cases() == NAMES


@pytest.mark.parametrize(
    "name, free, expected",
    [
        ("pareto1", dict(q=2, x0=1), IFParams(0, 1, 1, 2, 1)),
        ("rayleigh", dict(c=2), IFParams(INF, -1, 2, 2, 0)),
        ("stoppa", dict(m=2, c=1, q=2), IFParams(1, 1, 1, 2, 2**-0.5)),
        ("pareto4", dict(gamma=0.5, c=1, q=2, x0=3), IFParams(0, 2, 1, 2, 3)),
        ("weibull", dict(c=2, q=3, x0=1), IFParams(INF, -1, 2, 3, 1)),
        ("generalized_lomax", dict(m=3, c=1, q=2), IFParams(2, 1, 1, 2, 0)),
    ],
)
def test_resolve(name, free, expected):
    assert registry.resolve(name, free) == expected


def test_resolve_errors():
    with pytest.raises(UnknownCase):
        registry.resolve("gumbel1", dict(c=1))
    for free, field in [
        (dict(q=2), "x0"),
        (dict(q=2, x0=1, c=1), "c"),
        (dict(q=-2, x0=1), "q"),
        (dict(q=2, x0=0), "x0"),
    ]:
        with pytest.raises(InvalidParam) as err:
            registry.resolve("pareto1", free)
        assert err.value.field == field
    with pytest.raises(InvalidParam):
        registry.resolve("lindsay_burr3", dict(b=1, c=1, q=1, x0=0))
    with pytest.raises(InvalidParam):
        registry.resolve("stoppa", dict(m=0.5, c=1, q=2))


def test_table_mean_examples():
    assert registry.table_mean("pareto1", dict(q=2, x0=1)).value == 2.0
    assert registry.table_mean("fisk", dict(b=2, c=1)).value == pytest.approx(math.pi / 2, rel=1e-15)
    assert registry.table_mean("fisk", dict(b=1, c=1)).is_divergent


def test_table_entropy_examples():
    assert registry.table_entropy("exponential", dict(c=1)) == 1.0
    assert registry.table_entropy("pareto2", dict(c=1, q=1, x0=0)) == 2.0
    expected = EULER_GAMMA / 2 + 1 - math.log(2)
    assert registry.table_entropy("weibull", dict(c=1, q=2, x0=0)) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("name, free", POINTS)
def test_mean_coherence(name, free):
    params = registry.resolve(name, free)
    assert registry.table_mean_constraint(name, free)
    table = registry.table_mean(name, free).value
    assert table == pytest.approx(moments.moment(params, 1).value, rel=1e-10)
    quad = oracle.quad_expectation(params, lambda x: x, tol=1e-300, rel_tol=1e-10).value
    assert table == pytest.approx(quad, rel=1e-7)


@pytest.mark.parametrize("name, free", POINTS)
def test_entropy_coherence(name, free):
    params = registry.resolve(name, free)
    table = registry.table_entropy(name, free)
    assert table == pytest.approx(entropy.entropy(params).value, abs=1e-10)
    assert table == pytest.approx(oracle.quad_entropy(params).value, abs=1e-7)


@pytest.mark.parametrize("name, free", POINTS)
def test_table_constraints(name, free):
    params = registry.resolve(name, free)
    for con in registry.table_constraints(name, free):
        quad = oracle.quad_expectation(params, con.integrand, 1e-11, variable="log_s").value
        assert quad == pytest.approx(con.expected, abs=1e-7), con.description


@pytest.mark.parametrize(
    "name, free",
    [
        ("pareto4", dict(gamma=2.0, c=1.0, q=1.5, x0=0.0)),
        ("pareto4", dict(gamma=1.5, c=1.0, q=1.5, x0=0.0)),
        ("lindsay_burr3", dict(b=-1.0, c=1.0, q=1.0, x0=0.0)),
        ("pareto3", dict(gamma=1.0, c=1.0, x0=0.0)),
        ("fisk", dict(b=0.5, c=1.0)),
        ("lomax", dict(c=1.0, q=1.0)),
        ("pareto1", dict(q=0.5, x0=1.0)),
        ("burr12", dict(b=0.5, q=2.0)),
        ("frechet", dict(c=1.0, q=0.5, x0=0.0)),
        ("gumbel2", dict(c=1.0, q=1.0)),
        ("generalized_lomax", dict(m=3.0, c=1.0, q=0.5)),
        ("stoppa", dict(m=1.0, c=1.0, q=1.0)),
    ],
)
def test_constraint_coherence(name, free):
    assert registry.table_mean(name, free).is_divergent
    assert moments.moment(registry.resolve(name, free), 1).is_divergent


def test_generalized_lomax_mean_second_term():
    # c m^(1-1/q) (B(1-1/q, m) - B(1+1/q, m)) misses the oracle; with B(1, m) = 1/m it matches
    m, c, q = 2.0, 1.0, 2.0
    params = registry.resolve("generalized_lomax", dict(m=m, c=c, q=q))
    quad = oracle.quad_expectation(params, lambda x: x, tol=1e-300, rel_tol=1e-12).value
    wrong = c * m ** (1 - 1 / q) * (special.beta(1 - 1 / q, m) - special.beta(1 + 1 / q, m))
    corrected = c * m ** (1 - 1 / q) * (special.beta(1 - 1 / q, m) - 1 / m)
    assert abs(wrong - quad) > 0.3
    assert corrected == pytest.approx(quad, rel=1e-12)
    assert registry.table_mean("generalized_lomax", dict(m=m, c=c, q=q)).value == pytest.approx(quad, rel=1e-12)


def test_stoppa_constraint_grouping():
    # E[ln(1 - m^-1 (x/c)^-q)] = -1/m; grouping m^-1 inside the power does not give -1/m
    m, c, q = 2.0, 1.0, 2.0
    params = registry.resolve("stoppa", dict(m=m, c=c, q=q))
    good = oracle.quad_expectation(params, lambda x: np.log1p(-((x / c) ** -q) / m)).value
    assert good == pytest.approx(-1 / m, abs=1e-9)
    with np.errstate(invalid="ignore"):
        other = oracle.mc_expectation(params, lambda x: np.log1p(-((x / (m * c)) ** -q)), 10_000, seed=3)
    assert not abs(other.estimate + 1 / m) < 1e-3


def test_exponential_log_constraint():
    params = registry.resolve("exponential", dict(c=2.0))
    value = oracle.quad_expectation(params, lambda ls: ls, 1e-12, variable="log_s").value
    assert value == pytest.approx(-EULER_GAMMA, abs=1e-10)
    assert len(registry.table_constraints("exponential", dict(c=2.0))) == 1


TEXTBOOK = [
    ("exponential", dict(c=2.0), lambda x: np.exp(-x / 2.0) / 2.0),
    ("rayleigh", dict(c=1.5), lambda x: 2 * x / 1.5**2 * np.exp(-((x / 1.5) ** 2))),
    ("weibull", dict(c=2.0, q=1.7, x0=0.5),
     lambda x: 1.7 / 2.0 * ((x - 0.5) / 2.0) ** 0.7 * np.exp(-(((x - 0.5) / 2.0) ** 1.7))),
    ("frechet", dict(c=1.5, q=2.5, x0=1.0),
     lambda x: 2.5 / 1.5 * ((x - 1.0) / 1.5) ** -3.5 * np.exp(-(((x - 1.0) / 1.5) ** -2.5))),
    ("pareto1", dict(q=2.5, x0=2.0), lambda x: 2.5 * 2.0**2.5 / x**3.5),
]


@pytest.mark.parametrize("name, free, textbook", TEXTBOOK, ids=[t[0] for t in TEXTBOOK])
def test_textbook_densities(name, free, textbook):
    params = registry.resolve(name, free)
    xs = params.x0 + params.c * np.geomspace(0.05, 8.0, 20)
    np.testing.assert_allclose(density.pdf(params, xs), textbook(xs), rtol=1e-12)


def test_parse_named():
    assert registry.parse_named("pareto1( q = 2, x0=1 )") == ("pareto1", {"q": 2.0, "x0": 1.0})
    assert registry.parse_dist("stoppa(m=2,c=1,q=2)") == IFParams(1, 1, 1, 2, 2**-0.5)
    assert registry.parse_dist("if(p=inf,b=-1,c=1,q=1,x0=0)") == IFParams(INF, -1, 1, 1, 0)
    with pytest.raises(UnknownCase):
        registry.parse_dist("cauchy(c=1)")
    with pytest.raises(ValueError):
        registry.parse_dist("lomax(c=one,q=2)")


def test_describe():
    text = registry.get_case("stoppa").describe()
    assert "c*m^(-1/q)" in text and "q > 1" in text
