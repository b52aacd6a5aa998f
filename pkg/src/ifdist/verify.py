"""Self-verification suites: every closed form against an independent method.

Each check records an expected and an actual number and passes when they agree
within its tolerance, absolute or relative as recorded. Boolean outcomes (for
example "this moment is divergent") are encoded as 1.0 / 0.0 with tolerance 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from ifdist import density, entropy, grids, moments, oracle, registry, specfun
from ifdist.model import INF, IFParams, Subfamily, classify, render

__all__ = ["Check", "VerificationReport", "SUITES", "run"]

KS_CRITICAL = 1.63  # alpha = 0.01, asymptotic
MC_N = 1_000_000


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    expected: float
    actual: float
    tolerance: float
    relative: bool = False

    @property
    def passed(self):
        e, a = self.expected, self.actual
        if e == a:
            return True
        if not (math.isfinite(e) and math.isfinite(a)):
            return False
        bound = self.tolerance * abs(e) if self.relative else self.tolerance
        return abs(e - a) <= bound

    def record(self):
        return {
            "id": self.id,
            "description": self.description,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "tolerance": {"value": self.tolerance, "kind": "relative" if self.relative else "absolute"},
            "pass": self.passed,
        }


def _jsonable(v):
    return v if math.isfinite(v) else repr(v)


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def summary(self):
        passed = sum(c.passed for c in self.checks)
        return {"total": len(self.checks), "passed": passed, "failed": len(self.checks) - passed}

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {"checks": [c.record() for c in self.checks], "summary": self.summary}


class _Collector:
    def __init__(self, prefix):
        self.prefix = prefix
        self.checks = []

    def add(self, key, description, expected, actual, tolerance, relative=False):
        self.checks.append(
            Check(f"{self.prefix}.{key}", description, float(expected), float(actual),
                  tolerance, relative)
        )

    def flag(self, key, description, expected, actual):
        self.add(key, description, float(bool(expected)), float(bool(actual)), 0.0)


# ---------------------------------------------------------------- specfun

def suite_specfun():
    out = _Collector("specfun")
    g = specfun.EULER_GAMMA
    known = [
        ("ln_gamma(1)", specfun.ln_gamma(1.0), 0.0),
        ("ln_gamma(2)", specfun.ln_gamma(2.0), 0.0),
        ("ln_gamma(0.5)", specfun.ln_gamma(0.5), 0.5 * math.log(math.pi)),
        ("digamma(1)", specfun.digamma(1.0), -g),
        ("digamma(2)", specfun.digamma(2.0), 1.0 - g),
        ("digamma(0.5)", specfun.digamma(0.5), -g - 2.0 * math.log(2.0)),
        ("harmonic(0)", specfun.harmonic(0.0), 0.0),
        ("harmonic(3)", specfun.harmonic(3.0), 1.0 + 1.0 / 2.0 + 1.0 / 3.0),
        ("log_beta(1,1)", specfun.log_beta(1.0, 1.0), 0.0),
        ("log_beta(0.5,2)", specfun.log_beta(0.5, 2.0), math.log(4.0 / 3.0)),
        ("log_beta(2,3)", specfun.log_beta(2.0, 3.0), math.log(1.0 / 12.0)),
        ("digamma(1)+euler", specfun.digamma(1.0) + specfun.euler_mascheroni(), 0.0),
    ]
    for i, (label, actual, expected) in enumerate(known):
        out.add(f"value.{i:02d}", label, expected, actual, 1e-13)
    out.add("euler.limit", "H(1001) - ln(1001) approaches Euler's constant",
            specfun.euler_mascheroni(), specfun.harmonic(1001.0) - math.log(1001.0), 1e-3)

    xs = np.geomspace(1e-6, 1e6, 241)
    err = max(abs(specfun.ln_gamma(x) - math.lgamma(x)) / max(1.0, abs(math.lgamma(x))) for x in xs)
    out.add("ln_gamma.lgamma", "ln_gamma vs math.lgamma on [1e-6, 1e6], error / max(1, |value|)",
            0.0, err, 1e-13)

    xs = np.linspace(0.5, 100.0, 400)
    err = max(abs(specfun.ln_gamma(x + 1) - specfun.ln_gamma(x) - math.log(x)) for x in xs)
    out.add("ln_gamma.recurrence", "max |lnG(x+1) - lnG(x) - ln x| on [0.5, 100]", 0.0, err, 1e-12)

    xs = np.linspace(0.01, 0.99, 99)
    err = max(
        abs(math.exp(specfun.ln_gamma(x) + specfun.ln_gamma(1 - x)) * math.sin(math.pi * x) / math.pi - 1)
        for x in xs
    )
    out.add("ln_gamma.reflection", "G(x) G(1-x) = pi / sin(pi x), max relative error", 0.0, err, 1e-10)

    err = max(abs(specfun.harmonic(n) - specfun.harmonic(n - 1) - 1.0 / n) for n in range(1, 10_001))
    out.add("harmonic.step", "H(n) - H(n-1) = 1/n for 1 <= n <= 10^4", 0.0, err, 1e-13)

    exact = math.fsum(1.0 / k for k in range(1, 101))
    out.add("harmonic.sum", "H(100) equals the direct sum", exact, specfun.harmonic(100.0), 1e-14)

    h = 1e-5
    xs = np.linspace(0.1, 50.0, 200)
    err = max(
        abs((specfun.ln_gamma(x + h) - specfun.ln_gamma(x - h)) / (2 * h) - specfun.digamma(x))
        for x in xs
    )
    out.add("digamma.fd", "digamma vs centered difference of ln_gamma on [0.1, 50]", 0.0, err, 1e-6)

    pairs = [(0.3, 7.0), (2.5, 0.4), (40.0, 13.0), (1e-3, 5.0), (1e3, 2e3)]
    err = max(
        abs(specfun.log_beta(a, b) - (math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)))
        / max(1.0, abs(specfun.log_beta(a, b)))
        for a, b in pairs
    )
    out.add("log_beta.lgamma", "log_beta vs lgamma combination", 0.0, err, 1e-13)
    return out.checks


# ---------------------------------------------------------------- density

_ROUND_TRIP_U = [1e-6, 0.01] + [k / 10 for k in range(1, 10)] + [0.99, 1 - 1e-6]


def _density_point_checks(out, i, params):
    tag = f"grid{i:02d}"
    name = render(params)
    norm = oracle.quad_normalization(params).value
    out.add(f"{tag}.normalization", f"{name}: integral of pdf", 1.0, norm, 1e-9)

    rt = max(abs(density.cdf(params, density.quantile(params, u)) - u) for u in _ROUND_TRIP_U)
    out.add(f"{tag}.round_trip", f"{name}: max |cdf(quantile(u)) - u|", 0.0, rt, 1e-10)

    worst = 0.0
    for u in np.linspace(0.05, 0.95, 19):
        x = density.quantile(params, u)
        step = 1e-6 * (x - params.x0)
        slope = (density.cdf(params, x + step) - density.cdf(params, x - step)) / (2 * step)
        f = density.pdf(params, x)
        if f > 1e-12:
            worst = max(worst, abs(slope / f - 1.0))
    out.add(f"{tag}.derivative", f"{name}: cdf finite difference vs pdf, max relative error",
            0.0, worst, 1e-5)

    n = 100_000
    xs = density.sample(params, 1000 + i, n)
    ks = oracle.ks_statistic(xs, lambda x: density.cdf(params, x))
    out.add(f"{tag}.ks", f"{name}: KS statistic of 1e5 samples below 1.63/sqrt(n)",
            0.0, ks, KS_CRITICAL / math.sqrt(n))


def suite_density():
    out = _Collector("density")
    exp1 = IFParams(INF, -1.0, 1.0, 1.0, 0.0)
    lomax = IFParams(0.0, 1.0, 1.0, 1.0, 0.0)
    out.add("example.exp_pdf", "exponential pdf at 0.5", math.exp(-0.5), density.pdf(exp1, 0.5), 1e-15)
    out.add("example.exp_logpdf", "exponential log pdf at 2", -2.0, density.log_pdf(exp1, 2.0), 1e-15)
    out.add("example.exp_cdf", "exponential cdf at 1", -math.expm1(-1.0), density.cdf(exp1, 1.0), 1e-15)
    out.add("example.exp_quantile", "exponential quantile at 1 - 1/e", 1.0,
            density.quantile(exp1, -math.expm1(-1.0)), 1e-12)
    out.add("example.if1_pdf", "(1+x)^-2 at 1", 0.25, density.pdf(lomax, 1.0), 1e-15)
    out.add("example.if1_cdf", "1 - 1/(1+x) at 1", 0.5, density.cdf(lomax, 1.0), 1e-15)
    out.add("example.if1_quantile", "median of (1+x)^-2", 1.0, density.quantile(lomax, 0.5), 1e-15)
    out.add("example.if3_cdf_x0", "cdf at the support boundary", 0.0,
            density.cdf(IFParams(2.0, 1.0, 1.0, 1.0, 0.0), 0.0), 0.0)

    for i, params in enumerate(grids.STANDARD_GRID):
        _density_point_checks(out, i, params)

    # IF3 approaches IF2 as p grows
    if2 = IFParams(INF, 1.0, 1.0, 2.0, 0.0)
    xs = np.linspace(0.05, 10.0, 100)
    sups = []
    for p in (1e2, 1e4, 1e6):
        if3 = IFParams(p, 1.0, 1.0, 2.0, 0.0)
        sups.append(float(np.max(np.abs(density.pdf(if3, xs) - density.pdf(if2, xs)))))
    out.flag("limit.decreasing", f"sup |pdf_IF3 - pdf_IF2| decreases over p = 1e2, 1e4, 1e6: {sups}",
             True, sups[0] > sups[1] > sups[2])

    # at p = 0, b = 1 both formulas apply
    worst = 0.0
    for q, c, x0 in [(1.0, 1.0, 0.0), (2.5, 2.0, 1.0), (0.5, 0.3, 0.0)]:
        params = IFParams(0.0, 1.0, c, q, x0)
        xs = x0 + c * np.geomspace(1e-3, 1e3, 50)
        a = density.pdf(params, xs, formula=Subfamily.IF1)
        b = density.pdf(params, xs, formula=Subfamily.IF3)
        worst = max(worst, float(np.max(np.abs(a / b - 1.0))))
    out.add("intersection", "IF1 and IF3 formulas agree at p = 0, b = 1 (relative)", 0.0, worst, 1e-12)
    return out.checks


# ---------------------------------------------------------------- moments

def _quad_moment(params, r):
    return oracle.quad_expectation(params, lambda x: x**r, tol=1e-300, rel_tol=1e-10).value


def _witness(params, r):
    values = [oracle.truncated_moment(params, r, params.x0 + params.c * X) for X in (1e2, 1e4, 1e6)]
    ratios = [values[1] / values[0], values[2] / values[1]]
    return values, min(ratios)


def suite_moments():
    out = _Collector("moments")
    n = 0
    for i, params in enumerate(grids.STANDARD_GRID + grids.MOMENT_EXTRA):
        if classify(params) is Subfamily.GENERAL:
            continue
        for r in (1, 2, 3, 4):
            res = moments.moment(params, r)
            if not res.is_finite:
                continue
            out.add(f"oracle.grid{i:02d}.r{r}", f"{render(params)}: E[X^{r}] vs quadrature",
                    res.value, _quad_moment(params, r), 1e-7, relative=True)
            n += 1
    out.flag("oracle.count", f"at least 40 finite closed-form moments compared ({n})", True, n >= 40)

    for j, (params, r) in enumerate(grids.EXISTENCE_GRID):
        res = moments.moment(params, r)
        b, q = params.b, params.q
        if classify(params) is Subfamily.IF3:
            exists = r < q
        elif b > 0:
            exists = r < b * q
        else:
            exists = r < -b
        out.flag(f"existence.{j:02d}", f"{render(params)}, r={r}: divergent iff condition fails",
                 not exists, res.is_divergent)
        if res.is_divergent:
            values, ratio = _witness(params, r)
            out.flag(f"witness.{j:02d}",
                     f"{render(params)}, r={r}: truncated values {values} grow by ratio > 1.5",
                     True, values[0] < values[1] < values[2] and ratio > 1.5)

    # binomial shift with x0 > 0
    for k, params in enumerate([
        IFParams(0.0, 2.0, 1.5, 3.0, 2.0),
        IFParams(INF, -1.0, 2.0, 1.5, 1.0),
        IFParams(2.0, 1.0, 1.0, 4.0, 0.5),
    ]):
        r = 3
        base = params.replace(x0=0.0)
        expected = math.fsum(
            math.comb(r, i) * params.x0**i * moments.moment(base, r - i).value for i in range(r + 1)
        )
        out.add(f"shift.{k}", f"{render(params)}: binomial shift of E[X^3]",
                expected, moments.moment(params, r).value, 1e-10, relative=True)

    for k, q in enumerate((2.5, 4.0, 7.0)):
        params = IFParams(0.0, 1.0, 1.0, q, 0.0)
        r = 2
        out.add(f"intersection.{k}", f"q={q}: moment_if1 = moment_if3 at p=0, b=1",
                moments.moment_if1(params, r).value, moments.moment_if3(params, r).value,
                1e-10, relative=True)

    general = IFParams(2.0, 3.0, 1.0, 2.0, 0.0)
    out.flag("general.no_closed_form", "general family without fallback has no closed form",
             True, moments.moment(general, 1).kind == "no-closed-form")
    coarse = moments.moment(general, 1, fallback=True).value
    fine = _quad_moment(general, 1)
    out.add("general.fallback", "fallback quadrature vs refined re-run", fine, coarse, 1e-7, relative=True)

    anchors = [
        ("pareto1", dict(q=2.0, x0=1.0), 2.0),
        ("rayleigh", dict(c=2.0), math.sqrt(math.pi)),
        ("exponential", dict(c=3.0), 3.0),
    ]
    for name, free, expected in anchors:
        got = moments.moment(registry.resolve(name, free), 1).value
        out.add(f"anchor.{name}", f"{name} mean", expected, got, 1e-12, relative=True)
    return out.checks


# ---------------------------------------------------------------- entropy

def _mc_check(out, key, params, constraint):
    mc = oracle.mc_expectation(params, constraint.integrand, MC_N, seed=20240601, variable="log_s")
    out.add(key, f"{render(params)}: {constraint.description} by Monte Carlo (4 standard errors)",
            constraint.expected, mc.estimate, 4.0 * mc.std_error)


def suite_entropy(monte_carlo=True):
    out = _Collector("entropy")
    for i, params in enumerate(grids.STANDARD_GRID):
        value = entropy.entropy(params).value
        quad = oracle.quad_entropy(params, tol=1e-9).value
        out.add(f"oracle.grid{i:02d}", f"{render(params)}: entropy vs quadrature", quad, value, 1e-7)

    for k, params in enumerate(grids.IF1_ENTROPY_POINTS):
        out.add(f"general.if1.{k:02d}", f"{render(params)}: five-parameter formula vs IF1",
                entropy.entropy_if1(params.b, params.c, params.q),
                entropy.general_entropy(params, tol=1e-10), 1e-8)
    for k, params in enumerate(grids.IF3_ENTROPY_POINTS):
        out.add(f"general.if3.{k:02d}", f"{render(params)}: five-parameter formula vs IF3",
                entropy.entropy_if3(float(params.p), params.c, params.q),
                entropy.general_entropy(params, tol=1e-10), 1e-8)

    for q in (1.0, 2.0, 5.0):
        target = entropy.entropy_if2(1.0, 1.0, q)
        gaps = [abs(entropy.entropy_if3(p, 1.0, q) - target) for p in (1e2, 1e4, 1e6)]
        out.add(f"limit.q{q:g}", f"q={q:g}: |h_IF3(1e6) - h_IF2|", 0.0, gaps[2], 1e-3)
        out.flag(f"limit.q{q:g}.decreasing", f"q={q:g}: gap decreases over p = 1e2, 1e4, 1e6",
                 True, gaps[0] > gaps[1] > gaps[2])

    maxent_points = {
        "if1": [IFParams(0.0, 1.0, 1.0, 2.0, 0.0), IFParams(0.0, 2.0, 1.5, 0.8, 1.0),
                IFParams(0.0, -1.5, 1.0, 3.0, 0.0)],
        "if2": [IFParams(INF, -1.0, 1.0, 1.0, 0.0), IFParams(INF, -1.0, 2.0, 2.0, 0.5),
                IFParams(INF, 1.0, 1.0, 3.0, 0.0)],
        "if3": [IFParams(1.0, 1.0, 1.0, 2.0, 0.0), IFParams(4.0, 1.0, 2.0, 0.7, 0.0),
                IFParams(0.5, 1.0, 1.0, 5.0, 1.0)],
    }
    for fam, points in maxent_points.items():
        for k, params in enumerate(points):
            for j, con in enumerate(entropy.maxent_constraints(params)):
                quad = oracle.quad_expectation(params, con.integrand, 1e-11, variable="log_s").value
                out.add(f"constraint.{fam}.{k}.{j}", f"{render(params)}: {con.description}",
                        con.expected, quad, 1e-7)
                if monte_carlo:
                    _mc_check(out, f"constraint.{fam}.{k}.{j}.mc", params, con)

    for k, params in enumerate([IFParams(0.0, 2.0, 1.0, 1.5, 0.0), IFParams(INF, -1.0, 1.0, 2.0, 0.0),
                                IFParams(3.0, 1.0, 1.0, 2.0, 0.0), IFParams(2.0, 3.0, 1.0, 2.0, 0.0)]):
        lam = 3.7
        shift = entropy.entropy(params.replace(c=lam * params.c)).value - entropy.entropy(params).value
        out.add(f"scale.{k}", f"{render(params)}: entropy shift under c -> 3.7c", math.log(lam), shift, 1e-10)

    out.add("anchor.exponential", "exponential(c=1) entropy", 1.0,
            entropy.entropy(registry.resolve("exponential", dict(c=1.0))).value, 1e-12)
    out.add("anchor.lomax", "lomax(q=1, c=1) entropy", 2.0,
            entropy.entropy(registry.resolve("lomax", dict(q=1.0, c=1.0))).value, 1e-12)
    return out.checks


# ---------------------------------------------------------------- registry

def suite_registry():
    out = _Collector("registry")
    out.add("count", "number of named cases", 16, len(registry.list_cases()), 0.0)
    for name in registry.list_cases():
        for k, free in enumerate(grids.REGISTRY_POINTS[name]):
            params = registry.resolve(name, free)
            key = f"{name}.{k}"
            label = f"{name}({', '.join(f'{s}={v:g}' for s, v in free.items())})"
            table = registry.table_mean(name, free).value
            closed = moments.moment(params, 1).value
            out.add(f"{key}.mean", f"{label}: table mean vs closed-form moment",
                    table, closed, 1e-10, relative=True)
            out.add(f"{key}.mean_oracle", f"{label}: closed-form mean vs quadrature",
                    closed, _quad_moment(params, 1), 1e-7, relative=True)
            h_table = registry.table_entropy(name, free)
            h = entropy.entropy(params).value
            out.add(f"{key}.entropy", f"{label}: table entropy vs closed form", h_table, h, 1e-10)
            out.add(f"{key}.entropy_oracle", f"{label}: closed-form entropy vs quadrature",
                    h, oracle.quad_entropy(params, tol=1e-9).value, 1e-7)
            for j, con in enumerate(registry.table_constraints(name, free)):
                quad = oracle.quad_expectation(params, con.integrand, 1e-11, variable="log_s").value
                out.add(f"{key}.constraint{j}", f"{label}: {con.description}", con.expected, quad, 1e-7)

    outside = [
        ("pareto4", dict(gamma=2.0, c=1.0, q=1.5, x0=0.0)),
        ("lindsay_burr3", dict(b=-0.5, c=1.0, q=1.0, x0=0.0)),
        ("pareto2", dict(c=1.0, q=1.0, x0=0.0)),
        ("pareto3", dict(gamma=1.0, c=1.0, x0=0.0)),
        ("tadikamalla_burr12", dict(b=2.0, c=1.0, q=0.5)),
        ("fisk", dict(b=1.0, c=1.0)),
        ("lomax", dict(c=1.0, q=0.5)),
        ("pareto1", dict(q=1.0, x0=1.0)),
        ("burr12", dict(b=0.5, q=1.5)),
        ("frechet", dict(c=1.0, q=1.0, x0=0.0)),
        ("gumbel2", dict(c=1.0, q=0.7)),
        ("generalized_lomax", dict(m=2.0, c=1.0, q=1.0)),
        ("stoppa", dict(m=2.0, c=1.0, q=0.9)),
    ]
    for name, free in outside:
        out.flag(f"{name}.outside.table", f"{name} {free}: table reports divergent",
                 True, registry.table_mean(name, free).is_divergent)
        out.flag(f"{name}.outside.moment", f"{name} {free}: closed-form moment is divergent",
                 True, moments.moment(registry.resolve(name, free), 1).is_divergent)

    out.add("anchor.pareto1_mean", "pareto1(q=2, x0=1) mean", 2.0,
            registry.table_mean("pareto1", dict(q=2.0, x0=1.0)).value, 1e-15)
    out.add("anchor.fisk_mean", "fisk(b=2, c=1) mean", math.pi / 2,
            registry.table_mean("fisk", dict(b=2.0, c=1.0)).value, 1e-14)
    out.add("anchor.rayleigh_mean", "rayleigh(c=2) mean", math.sqrt(math.pi),
            registry.table_mean("rayleigh", dict(c=2.0)).value, 1e-14)
    out.add("anchor.exponential_entropy", "exponential(c=1) entropy", 1.0,
            registry.table_entropy("exponential", dict(c=1.0)), 1e-15)
    out.add("anchor.lomax_entropy", "lomax(q=1, c=1) entropy", 2.0,
            registry.table_entropy("lomax", dict(q=1.0, c=1.0)), 1e-15)
    out.add("anchor.weibull_entropy", "weibull(c=1, q=2) entropy",
            specfun.EULER_GAMMA / 2 + 1 - math.log(2.0),
            registry.table_entropy("weibull", dict(c=1.0, q=2.0, x0=0.0)), 1e-15)
    return out.checks


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "specfun": suite_specfun,
    "density": suite_density,
    "moments": suite_moments,
    "entropy": suite_entropy,
    "registry": suite_registry,
}


def run(suite="all"):
    """Run one suite (or ``"all"``) and return a :class:`VerificationReport`."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}, all")
    checks = [c for name in names for c in SUITES[name]()]
    return VerificationReport(sorted(checks, key=lambda c: c.id))
