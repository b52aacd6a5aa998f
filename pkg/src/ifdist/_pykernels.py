"""Pure Python / NumPy implementation of the numerical kernels.

This module is the reference fallback for :mod:`ifdist._ckernels`. Both expose
the same functions with the same semantics; :mod:`ifdist._backend` picks one at
import time.

Density kernels work on the standardized variable ``s = (x - x0) / c`` and take
``ls = log(s)`` so that neither tail ever overflows. ``mode`` is one of
``IF1, IF2, IF3, GENERAL`` (0..3).
"""
import math

import numpy as np

from ifdist._logmath import (
    log1mexp as _log1mexp,
    log1mexp_of_log as _log1mexp_of_log,
    log1pexp as _log1pexp,
    log_expm1 as _log_expm1,
    log_log1pexp as _log_log1pexp,
)

IF1, IF2, IF3, GENERAL = 0, 1, 2, 3

EULER_GAMMA = 0.57721566490153286061
HALF_LOG_2PI = 0.91893853320467274178

# zeta(n) - 1 for n = 2..30
_ZETA_M1 = (
    0.64493406684822643647,
    0.2020569031595942854,
    0.082323233711138191516,
    0.036927755143369926331,
    0.017343061984449139715,
    0.0083492773819228268398,
    0.0040773561979443393787,
    0.0020083928260822144179,
    0.00099457512781808533715,
    0.0004941886041194645587,
    0.00024608655330804829864,
    0.00012271334757848914675,
    0.000061248135058704829259,
    0.000030588236307020493552,
    0.000015282259408651871733,
    7.6371976378997622736e-6,
    3.8172932649998398565e-6,
    1.9082127165539389257e-6,
    9.5396203387279611315e-7,
    4.7693298678780646312e-7,
    2.3845050272773299e-7,
    1.1921992596531107307e-7,
    5.9608189051259479612e-8,
    2.9803503514652280186e-8,
    1.4901554828365041235e-8,
    7.450711789835429492e-9,
    3.7253340247884570548e-9,
    1.8626597235130490064e-9,
    9.3132743241966818287e-10,
)

# B_2k / (2k (2k - 1)), k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

# B_2k / (2k), k = 1..7
_PSI_ASYM = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def _lgamma2(z):
    """log Gamma(2 + z) for |z| <= 0.5 (power series in zeta(n) - 1)."""
    acc = 0.0
    zn = -z
    for n, zm1 in enumerate(_ZETA_M1, start=2):
        zn *= -z
        acc += zm1 * zn / n
    return z * (1.0 - EULER_GAMMA) + acc


def _stirling_tail(x):
    """Asymptotic correction log Gamma(x) - Stirling's leading terms, x >= 12."""
    r = 1.0 / x
    r2 = r * r
    acc = 0.0
    for coef in reversed(_STIRLING):
        acc = acc * r2 + coef
    return acc * r


def ln_gamma(x):
    if x < 0.5:
        return _lgamma2(x) - math.log1p(x) - math.log(x)
    if x < 1.5:
        z = x - 1.0
        return _lgamma2(z) - math.log1p(z)
    if x < 2.5:
        return _lgamma2(x - 2.0)
    if x < 12.0:
        prod = 1.0
        while x >= 2.5:
            x -= 1.0
            prod *= x
        return math.log(prod) + _lgamma2(x - 2.0)
    return (x - 0.5) * math.log(x) - x + HALF_LOG_2PI + _stirling_tail(x)


def _psi_asym_minus_log(x):
    r2 = 1.0 / (x * x)
    acc = 0.0
    for coef in reversed(_PSI_ASYM):
        acc = acc * r2 + coef
    return -0.5 / x - acc * r2


def psi_minus_log(x):
    """digamma(x) - log(x), accurate for large x where both terms are large."""
    if x >= 10.0:
        return _psi_asym_minus_log(x)
    return digamma(x) - math.log(x)


def digamma(x):
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    return acc + math.log(x) + _psi_asym_minus_log(x)


def _stirling_ratio(a, b):
    """log Gamma(b) - log Gamma(a + b) for b >= 12."""
    return (
        a
        - a * math.log(b)
        - (a + b - 0.5) * math.log1p(a / b)
        + _stirling_tail(b)
        - _stirling_tail(a + b)
    )


def log_beta(a, b):
    if a > b:
        a, b = b, a
    if b < 12.0:
        return ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
    return ln_gamma(a) + _stirling_ratio(a, b)


# -- density kernels -----------------------------------------------------------

def _tail_logs(mode, p, b, q, ls):
    """Return (log G, log(1 - w)) with w = G^-q / (p + 1), finite-p modes."""
    if mode == IF1:
        la = 0.0
        t = b * ls
    else:
        la = -math.log1p(p) / q
        t = (ls if mode == IF3 else b * ls) - la
    big_l = _log1pexp(t)
    log_l = _log_log1pexp(t)
    return la + big_l, _log1mexp_of_log(math.log(q) + log_l)


def log_pdf_std(mode, p, b, q, ls):
    ls = np.asarray(ls, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if mode == IF2:
            return math.log(abs(b) * q) - (b * q + 1.0) * ls - np.exp(-b * q * ls)
        log_g, log_1mw = _tail_logs(mode, p, b, q, ls)
        if mode == IF3:
            out = math.log(q) - (q + 1.0) * log_g
        else:
            out = math.log(abs(b) * q) + (b - 1.0) * ls - (q + 1.0) * log_g
        if mode != IF1 and p > 0.0:
            out = out + p * log_1mw
        return out


def log_cdf_std(mode, p, b, q, ls, upper):
    """log F(s) (``upper`` false) or log(1 - F(s)) (``upper`` true)."""
    ls = np.asarray(ls, dtype=float)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if mode == IF2:
            lz = -b * q * ls
            near, far = -np.exp(lz), _log1mexp_of_log(lz)
        else:
            _, log_1mw = _tail_logs(mode, p, b, q, ls)
            near = (p + 1.0) * log_1mw
            far = _log1mexp(-near)
        # near: the branch whose value is 1 at s -> inf for b > 0
        if b > 0.0:
            return far if upper else near
        return near if upper else far


def log_quantile_std(mode, p, b, q, lu, l1mu):
    lu = np.asarray(lu, dtype=float)
    l1mu = np.asarray(l1mu, dtype=float)
    lv = lu if b > 0.0 else l1mu
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        if mode == IF2:
            return -np.log(-lv) / (b * q)
        la = 0.0 if mode == IF1 else -math.log1p(p) / q
        bb = 1.0 if mode == IF3 else b
        log_w = _log1mexp(-lv / (p + 1.0))
        return (la + _log_expm1(-log_w / q)) / bb
