"""Closed-form growth asymptotics and their empirical verification:
Hardy-Ramanujan, the two-term Bessel-I model, derivative-condition checks
for exponential-polynomial growth, and least-squares model fitting.

All closed forms are evaluated with mpmath (>= 30 significant digits);
double precision overflows e^(pi sqrt(2n/3)) long before n = 10^5.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from mpmath import mp, mpf, workdps

__all__ = [
    "Verdict",
    "GrowthModel",
    "GoodVerdict",
    "hardy_ramanujan",
    "bessel_i_asymptotic",
    "coefficient_asymptotic_model",
    "good_check_powerlaw",
    "vdk_check_numeric",
    "fit_growth_model",
]

_DPS = 40


def _workdps():
    # at least 30 significant digits; follows a raised ambient precision
    return workdps(max(_DPS, mp.dps))


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class GrowthModel:
    """a(n) ~ C * n^beta * exp(A * n^gamma); logC = ln C."""

    logC: float
    beta: float
    A: float
    gamma: float
    residual: float = 0.0

    def log_value(self, n) -> mpf:
        with _workdps():
            n = mpf(n)
            return self.logC + self.beta * mp.log(n) + self.A * n**self.gamma


@dataclass(frozen=True)
class GoodVerdict:
    h: int
    cond1: Verdict
    cond2: Verdict
    cond3: Verdict
    trace: dict = field(default_factory=dict)


def hardy_ramanujan(n: int):
    """(1/(4 n sqrt 3)) * exp(pi sqrt(2n/3)), as an mpf."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with _workdps():
        n = mpf(n)
        return mp.exp(mp.pi * mp.sqrt(2 * n / 3)) / (4 * n * mp.sqrt(3))


def hr_growth_model() -> GrowthModel:
    """The Hardy-Ramanujan growth model for p(n)."""
    return GrowthModel(
        logC=-math.log(4 * math.sqrt(3)),
        beta=-1.0,
        A=math.pi * math.sqrt(2.0 / 3.0),
        gamma=0.5,
    )


def bessel_i_asymptotic(alpha: float, x, terms: int = 2):
    """The printed large-x model for I_alpha(x): e^x/sqrt(2 pi x), with the
    optional single correction factor 1 + (1-2a)(1+2a)/(8x)."""
    if terms not in (1, 2):
        raise ValueError("terms must be 1 or 2")
    with _workdps():
        x = mpf(x)
        if x <= 0:
            raise ValueError("x must be positive")
        main = mp.exp(x) / mp.sqrt(2 * mp.pi * x)
        if terms == 1:
            return main
        a = mpf(alpha)
        return main * (1 + (1 - 2 * a) * (1 + 2 * a) / (8 * x))


def coefficient_asymptotic_model(k_weight: float, K: float, alpha: float, n: int):
    """K * n^((k-1)/2) * I_(1-k)(alpha sqrt(n)), Bessel part in two-term
    asymptotic form; K and alpha are free (fit or user-supplied)."""
    if K <= 0 or alpha <= 0 or n < 1:
        raise ValueError("require K > 0, alpha > 0, n >= 1")
    with _workdps():
        nn = mpf(n)
        return K * nn ** ((mpf(k_weight) - 1) / 2) * bessel_i_asymptotic(
            1 - mpf(k_weight), mpf(alpha) * mp.sqrt(nn), 2
        )


def good_check_powerlaw(model: GrowthModel) -> GoodVerdict:
    """Analytic h=1 verdict for c(n) = A n^gamma, b(n) = C n^beta.

    Decided by exact parameter inequalities; never INCONCLUSIVE.
    c'(n) = A*gamma*n^(gamma-1) vanishes identically when A = 0 or
    gamma = 0, which satisfies the monotone-to-zero condition vacuously
    but kills the n|c'(n)| -> infinity condition.
    """
    A, g, b = model.A, model.gamma, model.beta
    degenerate = A == 0 or g == 0
    cond1 = Verdict.PASS if degenerate or (A > 0 and 0 < g < 1) else Verdict.FAIL
    cond2 = Verdict.PASS if A > 0 and g > 0 else Verdict.FAIL
    cond3 = Verdict.PASS if (A > 0 and g > 0) or b == 0 else Verdict.FAIL
    return GoodVerdict(
        h=1,
        cond1=cond1,
        cond2=cond2,
        cond3=cond3,
        trace={"A": A, "gamma": g, "beta": b},
    )


def _finite_differences(values, h):
    d = list(values)
    for _ in range(h):
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
    return d


def vdk_check_numeric(f, h: int, samples, tol: float = 1e-9) -> GoodVerdict:
    """Sampled van-der-Corput-style check on the h-th differences of f.

    cond1: |diff| decreases monotonically and falls well below its first
    value.  cond2: n*|diff| increases monotonically and grows past a 5x
    factor.  Non-monotone trends within tol give INCONCLUSIVE.
    """
    grid = [int(n) for n in samples]
    if len(grid) < 10:
        raise ValueError("grid too small")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be strictly increasing")
    if h < 1:
        raise ValueError("h must be >= 1")
    diffs = []
    for n in grid:
        window = [float(f(n + i)) for i in range(h + 1)]
        diffs.append(abs(_finite_differences(window, h)[0]))
    scaled = [n * d for n, d in zip(grid, diffs)]

    def trend(vals):
        dec = all(b <= a + tol for a, b in zip(vals, vals[1:]))
        inc = all(b >= a - tol for a, b in zip(vals, vals[1:]))
        return dec, inc

    dec1, inc1 = trend(diffs)
    if all(d <= tol for d in diffs):
        cond1 = Verdict.PASS  # identically ~0 trivially tends to 0
    elif dec1 and diffs[-1] <= diffs[0] / 2:
        cond1 = Verdict.PASS
    elif dec1 or inc1:
        cond1 = Verdict.FAIL
    else:
        cond1 = Verdict.INCONCLUSIVE

    dec2, inc2 = trend(scaled)
    if inc2 and scaled[0] > 0 and scaled[-1] >= 5 * scaled[0]:
        cond2 = Verdict.PASS
    elif dec2 or (inc2 and scaled[-1] < 2 * max(scaled[0], tol)):
        cond2 = Verdict.FAIL
    else:
        cond2 = Verdict.INCONCLUSIVE

    return GoodVerdict(
        h=h,
        cond1=cond1,
        cond2=cond2,
        cond3=Verdict.PASS,  # analytic-mode condition; not sampled here
        trace={"grid": grid, "diffs": diffs, "scaled": scaled},
    )


def fit_growth_model(seq, gamma: float, n_range) -> GrowthModel:
    """Least squares for log a(n) ~ logC + beta ln n + A n^gamma, gamma
    fixed; logs computed in extended precision before the solve."""
    ns = [int(n) for n in n_range]
    if len(ns) < 3:
        raise ValueError("range too short")
    ys = []
    with _workdps():
        for n in ns:
            a = seq.term(n) if hasattr(seq, "term") else seq(n)
            if a <= 0:
                raise ValueError("terms must be positive on the fit range")
            ys.append(float(mp.log(a)))
    narr = np.array(ns, dtype=float)
    X = np.column_stack([np.ones_like(narr), np.log(narr), narr**gamma])
    if np.linalg.matrix_rank(X) < 3:
        raise ValueError("singular design matrix")
    coef, res, _rank, _sv = np.linalg.lstsq(X, np.array(ys), rcond=None)
    residual = float(res[0]) if len(res) else 0.0
    return GrowthModel(
        logC=float(coef[0]),
        beta=float(coef[1]),
        A=float(coef[2]),
        gamma=float(gamma),
        residual=residual,
    )
