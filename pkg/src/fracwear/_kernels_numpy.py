"""Pure-NumPy backend: vectorised twin of the numba kernels.

Same algorithms (double-double series, envelope-truncated asymptotics) written
as whole-array operations so the package works with numba disabled
(FRACWEAR_DISABLE_NUMBA=1) at reduced speed.
"""
from __future__ import annotations

import numpy as np

from .tables import series_kmax

_SPLIT = 134217729.0


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _fast_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    return _fast_two_sum(s, e + (al + bl))


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    return _fast_two_sum(p, e + (ah * bl + al * bh))


def _dd_mul_d(ah, al, b):
    p, e = _two_prod(ah, b)
    return _fast_two_sum(p, e + al * b)


def _series_block(z, alpha, c_hi, c_lo, weight_k, skip_k0):
    """DD sum over k of weight_k(k) * z^k * c_k for a whole block of z values."""
    n = z.shape[0]
    if n == 0:
        return np.empty(0)
    wmax = float(np.max(np.abs(z))) if z.size else 0.0
    # z is -x for the ml series and -x**alpha for the cal-e series; the term
    # envelope argument is |z|^(1/alpha) in both cases.
    kmax = series_kmax(alpha, max(np.abs(wmax), 1e-30) ** (1.0 / alpha), len(c_hi) - 1)
    if skip_k0:
        s_hi = np.zeros(n)
        s_lo = np.zeros(n)
    else:
        s_hi = np.full(n, c_hi[0])
        s_lo = np.full(n, c_lo[0])
    p_hi = np.ones(n)
    p_lo = np.zeros(n)
    for k in range(1, kmax + 1):
        p_hi, p_lo = _dd_mul_d(p_hi, p_lo, z)
        t_hi, t_lo = _dd_mul(p_hi, p_lo, c_hi[k], c_lo[k])
        if weight_k:
            t_hi, t_lo = _dd_mul_d(t_hi, t_lo, float(k))
        s_hi, s_lo = _dd_add(s_hi, s_lo, t_hi, t_lo)
    return s_hi + s_lo


def _ml_asym_block(x, alpha, asym, lgam, has_exp, cphi, sphi):
    n = x.shape[0]
    if n == 0:
        return np.empty(0)
    lnx = np.log(x)
    inv = 1.0 / x
    s = np.zeros(n)
    prev_env = np.full(n, np.inf)
    p = np.ones(n)
    active = np.ones(n, dtype=bool)
    for j in range(1, asym.shape[0]):
        env = lgam[j] - j * lnx
        active &= env <= prev_env
        if not active.any():
            break
        prev_env = np.where(active, env, prev_env)
        p = p * inv
        term = np.where(active, asym[j] * p, 0.0)
        s = s + (term if j % 2 == 1 else -term)
        active &= env >= -46.0 + np.log(np.maximum(np.abs(s), 1e-300))
    if has_exp:
        w = x ** (1.0 / alpha)
        s = s + (2.0 / alpha) * np.exp(w * cphi) * np.cos(w * sphi)
    return s


def _cal_e_asym_block(x, alpha, asym, lgam, has_exp, cphi, sphi):
    n = x.shape[0]
    if n == 0:
        return np.empty(0)
    lnx = np.log(x)
    r = np.exp(-alpha * lnx)
    s = np.zeros(n)
    prev_env = np.full(n, np.inf)
    p = np.ones(n)
    active = np.ones(n, dtype=bool)
    for j in range(1, asym.shape[0]):
        aj = alpha * j
        env = np.log(aj) + lgam[j] - (aj + 1.0) * lnx
        active &= env <= prev_env
        if not active.any():
            break
        prev_env = np.where(active, env, prev_env)
        p = p * r
        mag = np.where(active, aj * asym[j] * p / x, 0.0)
        s = s + (mag if j % 2 == 0 else -mag)
        active &= env >= -46.0 + np.log(np.maximum(np.abs(s), 1e-300))
    if has_exp:
        s = s + (2.0 / alpha) * np.exp(x * cphi) * np.cos(x * sphi + np.pi / alpha)
    return s


def ml_neg_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    out = np.empty_like(x)
    w = x ** (1.0 / alpha)
    ser = w <= w_switch
    out[ser] = _series_block(-x[ser], alpha, c_hi, c_lo, weight_k=False, skip_k0=False)
    out[~ser] = _ml_asym_block(x[~ser], alpha, asym, lgam, has_exp, cphi, sphi)
    out[x == 0.0] = 1.0
    return out


def ml_neg_m1_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    out = np.empty_like(x)
    w = x ** (1.0 / alpha)
    ser = w <= w_switch
    out[ser] = _series_block(-x[ser], alpha, c_hi, c_lo, weight_k=False, skip_k0=True)
    out[~ser] = _ml_asym_block(x[~ser], alpha, asym, lgam, has_exp, cphi, sphi) - 1.0
    out[x == 0.0] = 0.0
    return out


def cal_e_arr(x, alpha, c_hi, c_lo, asym, lgam, w_switch, has_exp, cphi, sphi):
    out = np.empty_like(x)
    ser = x <= w_switch
    xs = x[ser]
    block = _series_block(-(xs**alpha), alpha, c_hi, c_lo, weight_k=True, skip_k0=True)
    out[ser] = (alpha / xs) * block
    out[~ser] = _cal_e_asym_block(x[~ser], alpha, asym, lgam, has_exp, cphi, sphi)
    return out
