"""Fixed parameter grids shared by the verification suite and the tests."""
from ifdist.model import INF, IFParams

# 30 points spanning IF1 (b > 0 and b < 0), IF2 (both signs), IF3 and the
# general family, with a mix of scales and locations.
STANDARD_GRID = (
    # IF1
    IFParams(0.0, 1.0, 1.0, 1.0, 0.0),
    IFParams(0.0, 2.0, 1.0, 0.5, 0.0),
    IFParams(0.0, 0.5, 2.0, 3.0, 1.0),
    IFParams(0.0, 3.0, 0.5, 2.0, 0.0),
    IFParams(0.0, -1.0, 1.0, 1.0, 0.0),
    IFParams(0.0, -2.5, 3.0, 0.7, 2.0),
    IFParams(0.0, -0.5, 1.0, 4.0, 0.0),
    # IF2
    IFParams(INF, -1.0, 1.0, 1.0, 0.0),
    IFParams(INF, -1.0, 2.0, 2.0, 0.0),
    IFParams(INF, -1.0, 0.5, 0.5, 1.0),
    IFParams(INF, -2.0, 1.0, 3.0, 0.0),
    IFParams(INF, 1.0, 1.0, 2.0, 0.0),
    IFParams(INF, 1.0, 3.0, 0.8, 0.5),
    IFParams(INF, 0.5, 1.0, 5.0, 0.0),
    # IF3
    IFParams(1.0, 1.0, 1.0, 2.0, 0.0),
    IFParams(2.0, 1.0, 1.0, 1.0, 0.0),
    IFParams(0.5, 1.0, 2.0, 3.0, 1.0),
    IFParams(10.0, 1.0, 1.0, 0.5, 0.0),
    IFParams(100.0, 1.0, 0.5, 2.0, 0.0),
    IFParams(5.0, 1.0, 1.0, 1.5, 3.0),
    # general
    IFParams(2.0, 3.0, 1.0, 2.0, 0.0),
    IFParams(1.0, 2.0, 1.0, 1.0, 0.0),
    IFParams(0.5, 0.5, 2.0, 2.0, 1.0),
    IFParams(3.0, -1.0, 1.0, 1.0, 0.0),
    IFParams(1.0, -2.0, 0.5, 2.0, 0.0),
    IFParams(4.0, -0.5, 1.0, 3.0, 2.0),
    IFParams(0.2, 4.0, 1.0, 0.3, 0.0),
    IFParams(20.0, 2.0, 1.0, 1.0, 0.0),
    IFParams(1.5, 1.5, 3.0, 0.8, 0.5),
    IFParams(7.0, -3.0, 1.0, 0.5, 0.0),
)

# Free-parameter points inside each registry case's mean constraint.
REGISTRY_POINTS = {
    "pareto4": [
        dict(gamma=0.5, c=1.0, q=2.0, x0=0.0),
        dict(gamma=0.3, c=2.0, q=0.7, x0=1.0),
        dict(gamma=1.5, c=0.5, q=3.0, x0=0.2),
    ],
    "lindsay_burr3": [
        dict(b=-2.0, c=1.0, q=1.0, x0=0.0),
        dict(b=-3.0, c=2.0, q=0.5, x0=1.0),
        dict(b=-1.5, c=0.7, q=2.5, x0=0.0),
    ],
    "pareto2": [
        dict(c=1.0, q=2.0, x0=0.0),
        dict(c=3.0, q=1.5, x0=2.0),
        dict(c=0.5, q=5.0, x0=0.1),
    ],
    "pareto3": [
        dict(gamma=0.5, c=1.0, x0=0.0),
        dict(gamma=0.2, c=2.0, x0=1.0),
        dict(gamma=0.9, c=0.5, x0=0.0),
    ],
    "tadikamalla_burr12": [
        dict(b=2.0, c=1.0, q=1.0),
        dict(b=3.0, c=2.0, q=0.5),
        dict(b=0.8, c=1.5, q=3.0),
    ],
    "fisk": [dict(b=2.0, c=1.0), dict(b=3.0, c=2.0), dict(b=1.5, c=0.5)],
    "lomax": [dict(c=1.0, q=2.0), dict(c=2.0, q=3.5), dict(c=0.3, q=1.2)],
    "pareto1": [dict(q=2.0, x0=1.0), dict(q=3.0, x0=2.0), dict(q=1.5, x0=0.5)],
    "burr12": [dict(b=2.0, q=1.0), dict(b=1.0, q=3.0), dict(b=4.0, q=0.5)],
    "weibull": [
        dict(c=1.0, q=2.0, x0=0.0),
        dict(c=2.0, q=0.5, x0=1.0),
        dict(c=0.5, q=5.0, x0=0.0),
    ],
    "frechet": [
        dict(c=1.0, q=2.0, x0=0.0),
        dict(c=2.0, q=3.0, x0=1.0),
        dict(c=0.5, q=1.5, x0=0.0),
    ],
    "gumbel2": [dict(c=1.0, q=2.0), dict(c=2.0, q=3.0), dict(c=0.5, q=6.0)],
    "rayleigh": [dict(c=1.0), dict(c=2.0), dict(c=0.3)],
    "exponential": [dict(c=1.0), dict(c=3.0), dict(c=0.2)],
    "generalized_lomax": [
        dict(m=2.0, c=1.0, q=2.0),
        dict(m=1.0, c=2.0, q=3.0),
        dict(m=5.5, c=0.5, q=1.5),
    ],
    "stoppa": [
        dict(m=2.0, c=1.0, q=2.0),
        dict(m=1.0, c=2.0, q=3.0),
        dict(m=4.0, c=0.5, q=1.5),
    ],
}

# (params, r) straddling the three existence boundaries r < bq, r < -b, r < q.
EXISTENCE_GRID = (
    [(IFParams(0.0, 2.0, 1.0, q, 0.0), 1) for q in (0.25, 0.5, 0.6, 1.0)]
    + [(IFParams(0.0, b, 1.0, 1.0, 0.0), 1) for b in (-0.5, -1.0, -1.5, -3.0)]
    + [(IFParams(1.0, 1.0, 1.0, q, 0.0), 1) for q in (0.5, 1.0, 1.5, 3.0)]
)

# Points for the five-parameter entropy formula against the subfamily forms.
IF1_ENTROPY_POINTS = tuple(
    IFParams(0.0, b, c, q, 0.0)
    for b, c, q in [
        (1.0, 1.0, 1.0), (2.0, 1.0, 0.5), (0.5, 2.0, 3.0), (3.0, 0.5, 2.0),
        (-1.0, 1.0, 1.0), (-2.5, 3.0, 0.7), (-0.5, 1.0, 4.0), (1.5, 1.0, 0.3),
        (-4.0, 2.0, 2.0), (0.8, 0.3, 1.2),
    ]
)
IF3_ENTROPY_POINTS = tuple(
    IFParams(p, 1.0, c, q, 0.0)
    for p, c, q in [
        (0.5, 1.0, 1.0), (1.0, 1.0, 2.0), (2.0, 2.0, 0.5), (5.0, 1.0, 3.0),
        (10.0, 0.5, 1.0), (100.0, 1.0, 2.0), (0.1, 1.0, 0.4), (3.0, 3.0, 1.5),
        (20.0, 1.0, 0.8), (1000.0, 1.0, 5.0),
    ]
)

# Light-tailed subfamily points so that several moment orders are finite.
MOMENT_EXTRA = (
    IFParams(0.0, 3.0, 1.0, 4.0, 0.0),
    IFParams(0.0, -6.0, 2.0, 1.0, 1.0),
    IFParams(INF, -1.5, 1.0, 2.0, 1.0),
    IFParams(INF, 2.0, 0.5, 4.0, 0.0),
    IFParams(3.0, 1.0, 1.0, 6.0, 1.0),
    IFParams(50.0, 1.0, 2.0, 8.0, 0.0),
)
