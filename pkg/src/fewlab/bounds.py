"""Closed-form reference bounds on positive zero counts of fewnomial systems."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "khovanskii",
    "khovanskii_log2",
    "bihan_sottile",
    "main_bound",
    "univariate_bound",
    "BoundReport",
    "bound_report",
]

_LOG2_OVERFLOW = 300 * math.log2(10)  # report log2 above 1e300


def khovanskii_log2(n: int, t: int) -> float:
    """log2 of the Khovanskii bound 2^C(t-1,2) * (n+1)^(t-1)."""
    if n < 1 or t < 1:
        raise ValueError("n and t must be >= 1")
    return math.comb(t - 1, 2) + (t - 1) * math.log2(n + 1)

def khovanskii(n: int, t: int) -> float:
    """Khovanskii's bound; inf when it exceeds float range (use the log2 form)."""
    lg = khovanskii_log2(n, t)
    if lg > 1023:
        return math.inf
    return 2.0 ** lg


def bihan_sottile(n: int, t: int) -> float:
    """The (e^2+3)/4 * 2^C(t-n-1,2) * n^(t-n-1) bound; requires t >= n+1."""
    if t < n + 1:
        raise ValueError("bihan_sottile requires t >= n+1")
    return (math.e**2 + 3) / 4 * 2.0 ** math.comb(t - n - 1, 2) * float(n) ** (t - n - 1)


def main_bound(n: int, t: int) -> float:
    """Expected-count bound C(t,n) / 2^(n-1); zero when t < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if t < n:
        return 0.0
    return math.comb(t, n) / 2.0 ** (n - 1)


def univariate_bound(t: int) -> float:
    """Expected-count bound (2/pi) * sqrt(t) * ln(t) for unit variances, n=1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return (2.0 / math.pi) * math.sqrt(t) * math.log(t)


@dataclass(frozen=True)
class BoundReport:
    n: int
    t: int
    descartes: float
    khovanskii: float
    khovanskii_log2: float
    bihan_sottile: float | None
    main: float
    univariate_expected: float | None


def bound_report(n: int, t: int) -> BoundReport:
    """All closed-form bounds for a given (n, t), for report comparison columns."""
    return BoundReport(
        n=n,
        t=t,
        descartes=float(t - 1) if n == 1 else math.nan,
        khovanskii=khovanskii(n, t),
        khovanskii_log2=khovanskii_log2(n, t),
        bihan_sottile=bihan_sottile(n, t) if t >= n + 1 else None,
        main=main_bound(n, t),
        univariate_expected=univariate_bound(t) if n == 1 else None,
    )
