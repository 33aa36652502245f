"""Numba backend: compiled elementwise kernels for the relaxation functions.

Double-double compensated arithmetic (Dekker splits, no FMA requirement) keeps
the power-series round-off near exp(w)*1e-32, which is what makes the series
usable out to w = x**(1/alpha) ~ 34.  fastmath must stay off: it would license
reassociation that destroys the error-free transformations.
"""
from __future__ import annotations

import numpy as np
from numba import njit, prange

_SPLIT = 134217729.0  # 2**27 + 1


@njit(cache=True, inline="always")
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit(cache=True, inline="always")
def _fast_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


@njit(cache=True, inline="always")
def _two_prod(a, b):
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


@njit(cache=True, inline="always")
def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    return _fast_two_sum(s, e + (al + bl))


@njit(cache=True, inline="always")
def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    return _fast_two_sum(p, e + (ah * bl + al * bh))


@njit(cache=True, inline="always")
def _dd_mul_d(ah, al, b):
    p, e = _two_prod(ah, b)
    return _fast_two_sum(p, e + al * b)


@njit(cache=True)
def _series_kmax(alpha, w, kcap):
    if w <= 1.0:
        k = int(40.0 / max(alpha, 1e-3)) + 8
        if k < 8:
            k = 8
        return min(kcap, k)
    u = w
    while u * (np.log(w / u) + 1.0) > -40.0:
        u *= 1.08
        if u > 4e4:
            break
    k = int(u / alpha) + 8
    return min(kcap, k)


@njit(cache=True)
def _ml_series(x, c_hi, c_lo, kmax):
    """sum_{k=0}^{kmax} (-x)^k / Gamma(alpha k + 1) in double-double."""
    s_hi = c_hi[0]
    s_lo = c_lo[0]
    p_hi = 1.0
    p_lo = 0.0
    for k in range(1, kmax + 1):
        p_hi, p_lo = _dd_mul_d(p_hi, p_lo, -x)
        t_hi, t_lo = _dd_mul(p_hi, p_lo, c_hi[k], c_lo[k])
        s_hi, s_lo = _dd_add(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


@njit(cache=True)
def _ml_series_m1(x, c_hi, c_lo, kmax):
    """Same series without the k = 0 term: E_alpha(-x) - 1 free of cancellation."""
    s_hi = 0.0
    s_lo = 0.0
    p_hi = 1.0
    p_lo = 0.0
    for k in range(1, kmax + 1):
        p_hi, p_lo = _dd_mul_d(p_hi, p_lo, -x)
        t_hi, t_lo = _dd_mul(p_hi, p_lo, c_hi[k], c_lo[k])
        s_hi, s_lo = _dd_add(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


@njit(cache=True)
def _ml_asym(x, alpha, asym, lgam, has_exp, cphi, sphi):
    """Algebraic expansion in 1/x, truncated where the term envelope turns."""
    lnx = np.log(x)
    inv = 1.0 / x
    s = 0.0
    prev_env = np.inf
    p = 1.0
    for j in range(1, asym.shape[0]):
        env = lgam[j] - j * lnx
        if env > prev_env:
            break
        prev_env = env
        p *= inv
        term = asym[j] * p
        if j % 2 == 1:
            s += term
        else:
            s -= term
        if env < -46.0 + np.log(max(abs(s), 1e-300)):
            break
    if has_exp:
        w = x ** (1.0 / alpha)
        s += (2.0 / alpha) * np.exp(w * cphi) * np.cos(w * sphi)
    return s


@njit(cache=True)
def _cal_e_series(x, alpha, c_hi, c_lo, kmax):
    """(alpha/x) * sum_{k>=1} (-1)^k k x^(alpha k) / Gamma(alpha k + 1) in double-double."""
    xa = x ** alpha
    s_hi = 0.0
    s_lo = 0.0
    p_hi = 1.0
    p_lo = 0.0
    for k in range(1, kmax + 1):
        p_hi, p_lo = _dd_mul_d(p_hi, p_lo, -xa)
        t_hi, t_lo = _dd_mul(p_hi, p_lo, c_hi[k], c_lo[k])
        t_hi, t_lo = _dd_mul_d(t_hi, t_lo, float(k))
        s_hi, s_lo = _dd_add(s_hi, s_lo, t_hi, t_lo)
    return (alpha / x) * (s_hi + s_lo)


@njit(cache=True)
def _cal_e_asym(x, alpha, asym, lgam, has_exp, cphi, sphi):
    lnx = np.log(x)
    r = np.exp(-alpha * lnx)
    s = 0.0
    prev_env = np.inf
    p = 1.0
    for j in range(1, asym.shape[0]):
        aj = alpha * j
        env = np.log(aj) + lgam[j] - (aj + 1.0) * lnx
        if env > prev_env:
            break
        prev_env = env
        p *= r
        mag = aj * asym[j] * p / x
        if j % 2 == 1:
            s -= mag
        else:
            s += mag
        if env < -46.0 + np.log(max(abs(s), 1e-300)):
            break
    if has_exp:
        s += (2.0 / alpha) * np.exp(x * cphi) * np.cos(x * sphi + np.pi / alpha)
    return s


@njit(cache=True, parallel=True)
def ml_neg_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    """E_alpha(-x) elementwise for x >= 0, alpha != 1."""
    out = np.empty_like(x)
    inv_alpha = 1.0 / alpha
    kcap = c_hi.shape[0] - 1
    for i in prange(x.shape[0]):
        xi = x[i]
        if xi == 0.0:
            out[i] = 1.0
            continue
        w = xi ** inv_alpha
        if w <= w_switch:
            out[i] = _ml_series(xi, c_hi, c_lo, _series_kmax(alpha, w, kcap))
        else:
            out[i] = _ml_asym(xi, alpha, asym, lgam, has_exp, cphi, sphi)
    return out


@njit(cache=True, parallel=True)
def ml_neg_m1_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    """E_alpha(-x) - 1, accurate in absolute and relative sense down to x -> 0."""
    out = np.empty_like(x)
    inv_alpha = 1.0 / alpha
    kcap = c_hi.shape[0] - 1
    for i in prange(x.shape[0]):
        xi = x[i]
        if xi == 0.0:
            out[i] = 0.0
            continue
        w = xi ** inv_alpha
        if w <= w_switch:
            out[i] = _ml_series_m1(xi, c_hi, c_lo, _series_kmax(alpha, w, kcap))
        else:
            out[i] = _ml_asym(xi, alpha, asym, lgam, has_exp, cphi, sphi) - 1.0
    return out


@njit(cache=True, parallel=True)
def cal_e_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    """calE_alpha(x) elementwise for x > 0, alpha != 1."""
    out = np.empty_like(x)
    kcap = c_hi.shape[0] - 1
    for i in prange(x.shape[0]):
        xi = x[i]
        if xi <= w_switch:
            out[i] = _cal_e_series(xi, alpha, c_hi, c_lo, _series_kmax(alpha, xi, kcap))
        else:
            out[i] = _cal_e_asym(xi, alpha, asym, lgam, has_exp, cphi, sphi)
    return out
