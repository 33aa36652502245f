"""Per-order coefficient tables for the relaxation kernel functions.

The power series of E_alpha(-x) suffers catastrophic cancellation: the largest
term grows like exp(x**(1/alpha)) while the sum stays algebraically small, so
the 1/Gamma(alpha*k + 1) coefficients must be known well beyond double
precision for the compensated summation to pay off.  They are generated once
per alpha with mpmath and stored as double-double (hi, lo) pairs; the hot
evaluation loops never touch mpmath.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SERIES_KMAX = 300      # cap on power-series terms
ASYM_JMAX = 180        # cap on asymptotic-series terms
_BUILD_DPS = 50


@dataclass(frozen=True)
class SeriesTables:
    """Coefficient tables for one fractional order.

    c_hi/c_lo: 1/Gamma(alpha*k + 1), k = 0..SERIES_KMAX, split hi+lo.
    asym:      1/Gamma(1 - alpha*j), j = 0..ASYM_JMAX (signed; exactly 0 at poles).
    lgam:      lgamma(alpha*j) for the envelope-based truncation rule.
    w_switch:  series/asymptotic crossover in the variable w = x**(1/alpha).
    cphi/sphi: cos and sin of pi/alpha, used by the oscillatory term for alpha > 1.
    """

    alpha: float
    c_hi: np.ndarray
    c_lo: np.ndarray
    asym: np.ndarray
    lgam: np.ndarray
    w_switch: float
    cphi: float
    sphi: float

    @property
    def has_exp_term(self) -> bool:
        return self.alpha > 1.0


def series_kmax(alpha: float, w: float) -> int:
    """Terms needed for the defining series at w = x**(1/alpha).

    The k-th term magnitude is exp(u*ln w - lgamma(u+1)) with u = alpha*k;
    we walk u outward until the log-term drops 40 nats below unity.
    """
    if w <= 1.0:
        return min(SERIES_KMAX, max(8, int(40.0 / max(alpha, 1e-3)) + 8))
    u = w
    while u * (math.log(w / u) + 1.0) > -40.0:
        u *= 1.08
        if u > 4e4:
            break
    return min(SERIES_KMAX, int(u / alpha) + 8)


def _switch_point(alpha: float) -> float:
    # Largest w the capped series can resolve: the term envelope must fall
    # 40 nats below its peak within SERIES_KMAX terms.  34 keeps the
    # double-double round-off (~exp(w)*1e-32) under 1e-13 absolute.
    u = SERIES_KMAX * alpha
    return float(min(34.0, max(12.0, u * math.exp(-1.0 - 40.0 / u))))


@lru_cache(maxsize=64)
def tables_for(alpha: float) -> SeriesTables:
    """Build (or fetch cached) coefficient tables for a fractional order."""
    import mpmath as mp

    with mp.workdps(_BUILD_DPS):
        am = mp.mpf(alpha)  # exact binary value of the double
        c_hi = np.empty(SERIES_KMAX + 1)
        c_lo = np.empty(SERIES_KMAX + 1)
        for k in range(SERIES_KMAX + 1):
            v = mp.rgamma(am * k + 1)
            hi = float(v)
            c_hi[k] = hi
            c_lo[k] = float(v - hi)
        asym = np.zeros(ASYM_JMAX + 1)
        lgam = np.zeros(ASYM_JMAX + 1)
        for j in range(1, ASYM_JMAX + 1):
            asym[j] = float(mp.rgamma(1 - am * j))
            lgam[j] = math.lgamma(alpha * j)
    return SeriesTables(
        alpha=alpha,
        c_hi=c_hi,
        c_lo=c_lo,
        asym=asym,
        lgam=lgam,
        w_switch=_switch_point(alpha),
        cphi=math.cos(math.pi / alpha),
        sphi=math.sin(math.pi / alpha),
    )
