import math

import mpmath
import numpy as np
import pytest
from scipy import stats

from ifdist import entropy, oracle
from ifdist.entropy import Unsupported
from ifdist.grids import IF1_ENTROPY_POINTS, IF3_ENTROPY_POINTS, STANDARD_GRID
from ifdist.model import INF, IFParams
from ifdist.specfun import EULER_GAMMA


def test_examples():
    assert entropy.entropy(IFParams(INF, -1, 1, 1, 0)).value == pytest.approx(1.0, abs=1e-15)
    assert entropy.entropy(IFParams(INF, -1, 2, 2, 0)).value == pytest.approx(1 + EULER_GAMMA / 2, abs=1e-15)
    assert entropy.entropy(IFParams(0, 1, 1, 1, 0)).value == pytest.approx(2.0, abs=1e-15)


def test_methods():
    assert entropy.entropy(IFParams(0, 1, 1, 1, 0)).method == entropy.CLOSED_FORM
    assert entropy.entropy(IFParams(2, 3, 1, 2, 0)).method == entropy.CLOSED_FORM_WITH_F


@pytest.mark.parametrize(
    "params, ref",
    [
        (IFParams(0, 2.0, 1.5, 3.0, 0), stats.burr12(c=2.0, d=3.0, scale=1.5)),
        (IFParams(0, -2.0, 1.0, 1.5, 0), stats.burr(c=2.0, d=1.5)),
        (IFParams(INF, -0.5, 1.0, 3.0, 0.5), stats.weibull_min(c=1.5, loc=0.5)),
        (IFParams(INF, 2.0, 3.0, 0.7, 0), stats.invweibull(c=1.4, scale=3.0)),
        (IFParams(0, 1.0, 2.0, 2.5, 1.0), stats.lomax(c=2.5, loc=1.0, scale=2.0)),
    ],
    ids=str,
)
def test_against_scipy(params, ref):
    assert entropy.entropy(params).value == pytest.approx(float(ref.entropy()), abs=1e-8)


@pytest.mark.parametrize("params", STANDARD_GRID, ids=str)
def test_against_quadrature(params):
    assert entropy.entropy(params).value == pytest.approx(oracle.quad_entropy(params).value, abs=1e-7)


def test_f_integral_values():
    assert entropy.f_integral(0, 1) == pytest.approx(0.0, abs=1e-10)
    for q in (0.5, 2.5, 4.0):
        # at p = 0, F(0, q) = -H_{q-1}
        ref = -float(mpmath.harmonic(q - 1))
        assert entropy.f_integral(0, q) == pytest.approx(ref, abs=1e-10)
    ref = 4 * mpmath.quad(lambda t: mpmath.log(t ** (-0.5) - 1) * (1 - t) ** 3, [0, 0.5, 1])
    assert entropy.f_integral(3, 2) == pytest.approx(float(ref), abs=1e-10)


def test_f_integral_monte_carlo():
    q = 2.5
    t = np.random.default_rng(5).uniform(size=10**7)
    values = np.log(t ** (-1 / q) - 1)
    se = values.std(ddof=1) / math.sqrt(values.size)
    assert abs(entropy.f_integral(0, q) - values.mean()) <= 4 * se


def test_f_integral_domain():
    with pytest.raises(ValueError):
        entropy.f_integral(-1, 1)
    with pytest.raises(ValueError):
        entropy.f_integral(1, 0)
    with pytest.raises(ValueError):
        entropy.general_entropy(IFParams(INF, 1, 1, 1, 0))


@pytest.mark.parametrize("params", IF1_ENTROPY_POINTS, ids=str)
def test_general_formula_at_p0(params):
    closed = entropy.entropy_if1(params.b, params.c, params.q)
    assert entropy.general_entropy(params) == pytest.approx(closed, abs=1e-8)


@pytest.mark.parametrize("params", IF3_ENTROPY_POINTS, ids=str)
def test_general_formula_at_b1(params):
    closed = entropy.entropy_if3(params.p, params.c, params.q)
    assert entropy.general_entropy(params) == pytest.approx(closed, abs=1e-8)


@pytest.mark.parametrize("q", [1.0, 2.0, 5.0])
def test_limit_if3_to_if2(q):
    target = entropy.entropy_if2(1.0, 1.0, q)
    gaps = [abs(entropy.entropy_if3(p, 1.0, q) - target) for p in (1e2, 1e4, 1e6)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] <= 1e-3


def test_scale_shift():
    for params in STANDARD_GRID[::3]:
        shifted = params.replace(c=params.c * 2.5)
        diff = entropy.entropy(shifted).value - entropy.entropy(params).value
        assert diff == pytest.approx(math.log(2.5), abs=1e-10)


def test_harmonic_for_small_q():
    # H_{q-1} with 0 < q < 1 has a negative index; the digamma form still applies
    for q in (0.5, 0.9):
        params = IFParams(0, 2, 1, q, 0)
        assert entropy.entropy(params).value == pytest.approx(oracle.quad_entropy(params).value, abs=1e-8)


@pytest.mark.parametrize(
    "params",
    [IFParams(0, 1, 1, 2, 0), IFParams(0, -2, 1.5, 0.8, 1), IFParams(INF, -1, 1, 1, 0),
     IFParams(INF, 1.5, 2, 2, 0), IFParams(1, 1, 1, 2, 0), IFParams(6, 1, 0.5, 0.6, 2)],
    ids=str,
)
def test_constraints_by_quadrature(params):
    for con in entropy.maxent_constraints(params):
        quad = oracle.quad_expectation(params, con.integrand, 1e-11, variable="log_s").value
        assert quad == pytest.approx(con.expected, abs=1e-7), con.description


def test_constraint_examples():
    lomax = entropy.maxent_constraints(IFParams(0, 1, 1, 2, 0))
    assert lomax[1].expected == 0.5
    assert entropy.maxent_constraints(IFParams(INF, -1, 1, 1, 0))[1].expected == 1.0
    assert entropy.maxent_constraints(IFParams(1, 1, 1, 2, 0))[1].expected == -0.5


def test_constraints_unsupported_for_general():
    with pytest.raises(Unsupported):
        entropy.maxent_constraints(IFParams(2, 3, 1, 2, 0))
