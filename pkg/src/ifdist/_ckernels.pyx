# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels; drop-in for :mod:`ifdist._pykernels`."""
import numpy as np

from libc.math cimport exp, expm1, fabs, log, log1p, INFINITY

cdef enum:
    IF1 = 0
    IF2 = 1
    IF3 = 2
    GENERAL = 3

cdef double EULER_GAMMA = 0.57721566490153286061
cdef double HALF_LOG_2PI = 0.91893853320467274178
cdef double LN2 = 0.6931471805599453

cdef double[29] _ZETA_M1 = [
    0.64493406684822643647, 0.2020569031595942854, 0.082323233711138191516,
    0.036927755143369926331, 0.017343061984449139715, 0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    0.000061248135058704829259, 0.000030588236307020493552, 0.000015282259408651871733,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9, 3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10,
]

cdef double[8] _STIRLING = [
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
]

cdef double[7] _PSI_ASYM = [
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
]


cdef inline double _lgamma2(double z) noexcept nogil:
    cdef double acc = 0.0, zn = -z
    cdef int n
    for n in range(29):
        zn *= -z
        acc += _ZETA_M1[n] * zn / (n + 2)
    return z * (1.0 - EULER_GAMMA) + acc


cdef inline double _stirling_tail(double x) noexcept nogil:
    cdef double r = 1.0 / x
    cdef double r2 = r * r
    cdef double acc = 0.0
    cdef int k
    for k in range(7, -1, -1):
        acc = acc * r2 + _STIRLING[k]
    return acc * r


cdef double _ln_gamma(double x) noexcept nogil:
    cdef double prod, z
    if x < 0.5:
        return _lgamma2(x) - log1p(x) - log(x)
    if x < 1.5:
        z = x - 1.0
        return _lgamma2(z) - log1p(z)
    if x < 2.5:
        return _lgamma2(x - 2.0)
    if x < 12.0:
        prod = 1.0
        while x >= 2.5:
            x -= 1.0
            prod *= x
        return log(prod) + _lgamma2(x - 2.0)
    return (x - 0.5) * log(x) - x + HALF_LOG_2PI + _stirling_tail(x)


cdef inline double _psi_asym_minus_log(double x) noexcept nogil:
    cdef double r2 = 1.0 / (x * x)
    cdef double acc = 0.0
    cdef int k
    for k in range(6, -1, -1):
        acc = acc * r2 + _PSI_ASYM[k]
    return -0.5 / x - acc * r2


cdef double _digamma(double x) noexcept nogil:
    cdef double acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    return acc + log(x) + _psi_asym_minus_log(x)


def ln_gamma(double x):
    return _ln_gamma(x)


def digamma(double x):
    return _digamma(x)


def psi_minus_log(double x):
    if x >= 10.0:
        return _psi_asym_minus_log(x)
    return _digamma(x) - log(x)


def log_beta(double a, double b):
    cdef double t
    if a > b:
        t = a
        a = b
        b = t
    if b < 12.0:
        return _ln_gamma(a) + _ln_gamma(b) - _ln_gamma(a + b)
    return (_ln_gamma(a) + a - a * log(b) - (a + b - 0.5) * log1p(a / b)
            + _stirling_tail(b) - _stirling_tail(a + b))


# -- log-space helpers ---------------------------------------------------------

cdef inline double _log1pexp(double t) noexcept nogil:
    if t > 0.0:
        return t + log1p(exp(-t))
    return log1p(exp(t))


cdef inline double _log_log1pexp(double t) noexcept nogil:
    if t < -37.0:
        return t
    return log(_log1pexp(t))


cdef inline double _log1mexp(double y) noexcept nogil:
    if y < LN2:
        return log(-expm1(-y))
    return log1p(-exp(-y))


cdef inline double _log1mexp_of_log(double ly) noexcept nogil:
    if ly < -37.0:
        return ly
    return _log1mexp(exp(ly))


cdef inline double _log_expm1(double y) noexcept nogil:
    if y > 35.0:
        return y + log1p(-exp(-y))
    return log(expm1(y))


cdef inline void _tail_logs(int mode, double la, double b, double lq, double ls,
                            bint want_1mw, double *log_g, double *log_1mw) noexcept nogil:
    cdef double t, lg
    if mode == IF1:
        t = b * ls
    elif mode == IF3:
        t = ls - la
    else:
        t = b * ls - la
    lg = _log1pexp(t)
    log_g[0] = la + lg
    if want_1mw:
        log_1mw[0] = _log1mexp_of_log(lq + (t if t < -37.0 else log(lg)))


# -- density kernels -----------------------------------------------------------

def log_pdf_std(int mode, double p, double b, double q, ls_in):
    cdef double[::1] ls = np.ascontiguousarray(ls_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = ls.shape[0], i
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double lbq = log(fabs(b) * q), lq = log(q)
    cdef double la = 0.0 if mode == IF1 else -log1p(p) / q
    cdef bint want_1mw = mode != IF1 and p > 0.0
    cdef double log_g, log_1mw = 0.0, v
    with nogil:
        for i in range(n):
            if mode == IF2:
                out[i] = lbq - (b * q + 1.0) * ls[i] - exp(-b * q * ls[i])
                continue
            _tail_logs(mode, la, b, lq, ls[i], want_1mw, &log_g, &log_1mw)
            if mode == IF3:
                v = lq - (q + 1.0) * log_g
            else:
                v = lbq + (b - 1.0) * ls[i] - (q + 1.0) * log_g
            if want_1mw:
                v += p * log_1mw
            out[i] = v
    return out_arr.reshape(np.shape(ls_in))


def log_cdf_std(int mode, double p, double b, double q, ls_in, bint upper):
    cdef double[::1] ls = np.ascontiguousarray(ls_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = ls.shape[0], i
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double log_g, log_1mw, near, far, lz
    cdef double lq = log(q), la = 0.0 if mode == IF1 else -log1p(p) / q
    cdef bint take_near = (b > 0.0) != upper
    with nogil:
        for i in range(n):
            if mode == IF2:
                lz = -b * q * ls[i]
                near = -exp(lz)
                far = _log1mexp_of_log(lz)
            else:
                _tail_logs(mode, la, b, lq, ls[i], True, &log_g, &log_1mw)
                near = (p + 1.0) * log_1mw
                far = _log1mexp(-near) if near < 0.0 else -INFINITY
            out[i] = near if take_near else far
    return out_arr.reshape(np.shape(ls_in))


def log_quantile_std(int mode, double p, double b, double q, lu_in, l1mu_in):
    cdef double[::1] lu = np.ascontiguousarray(lu_in, dtype=np.float64).ravel()
    cdef double[::1] l1mu = np.ascontiguousarray(l1mu_in, dtype=np.float64).ravel()
    cdef Py_ssize_t n = lu.shape[0], i
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef double la = 0.0, bb = b, lv, log_w
    if mode != IF1:
        la = -log1p(p) / q
    if mode == IF3:
        bb = 1.0
    with nogil:
        for i in range(n):
            lv = lu[i] if b > 0.0 else l1mu[i]
            if mode == IF2:
                out[i] = -log(-lv) / (b * q)
                continue
            log_w = _log1mexp(-lv / (p + 1.0))
            out[i] = (la + _log_expm1(-log_w / q)) / bb
    return out_arr.reshape(np.shape(lu_in))
