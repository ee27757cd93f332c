"""Certified positive-root counting for sparse univariate polynomials.

Coefficients (doubles) are treated as exact dyadic rationals, so "number of
simple roots in (0, oo)" is a well-posed exact question.  The counter runs an
interval bisection on [lower Cauchy bound, upper Cauchy bound]: a cell is
discarded when an outward-rounded enclosure of p excludes zero, and certified
monotone when an enclosure of p' excludes zero, in which case endpoint signs
decide whether the cell isolates exactly one simple root.  Enclosures are the
intersection of the naive term-range form and a mean-value centered form; the
latter is what keeps dense high-degree supports affordable.  Endpoint signs
that float arithmetic cannot certify fall back to exact dyadic evaluation.
The global Descartes sign-change count caps the search and stops it early.

The engine is vectorized across a whole batch of coefficient vectors sharing
one support, which is what makes large Monte Carlo runs affordable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "SparsePoly",
    "RootCount",
    "sign_changes",
    "count_positive_roots",
    "count_in_unit_interval",
    "count_batch",
]

_EPS = np.finfo(float).eps
_REL_WIDTH_LIMIT = 2.0 ** -60
_MAX_LEVELS = 500


@dataclass(frozen=True)
class SparsePoly:
    """A sparse polynomial given by increasing integer exponents and nonzero coefficients."""

    exponents: tuple[int, ...]
    coefficients: tuple[float, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.exponents)
        c = tuple(float(x) for x in self.coefficients)
        if len(e) != len(c) or len(e) == 0:
            raise ValueError("exponents and coefficients must align and be nonempty")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise ValueError("exponents must be strictly increasing")
        if any(x == 0 or not math.isfinite(x) for x in c):
            raise ValueError("coefficients must be nonzero and finite")
        object.__setattr__(self, "exponents", e)
        object.__setattr__(self, "coefficients", c)

    @property
    def t(self) -> int:
        return len(self.exponents)

    def normalized(self) -> "SparsePoly":
        lo = self.exponents[0]
        return SparsePoly(tuple(e - lo for e in self.exponents), self.coefficients)

    def reflected(self) -> "SparsePoly":
        """p(1/x) times a monomial: support negated then renormalized."""
        e = tuple(-x for x in reversed(self.exponents))
        c = tuple(reversed(self.coefficients))
        return SparsePoly(tuple(x - e[0] for x in e), c)

    def __call__(self, x: float) -> float:
        return float(sum(c * float(x) ** e for e, c in zip(self.exponents, self.coefficients)))


@dataclass
class RootCount:
    count: int
    intervals: list[tuple[float, float]] = field(default_factory=list)
    degenerate_flag: bool = False


def sign_changes(coefficients) -> int:
    """Number of sign alternations in the nonzero subsequence."""
    signs = [1 if c > 0 else -1 for c in coefficients if c != 0]
    if not signs:
        raise ValueError("all coefficients are zero: polynomial is undefined")
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _exact_sign(exponents: np.ndarray, coeffs: np.ndarray, x: float) -> int:
    """Exact sign of sum c_i x^e_i with x and c_i read as dyadic rationals."""
    xf = Fraction(x)
    total = Fraction(0)
    for e, c in zip(exponents, coeffs):
        if c != 0.0:
            total += Fraction(c) * xf ** int(e)
    return (total > 0) - (total < 0)


class _Frame:
    """Precomputed logs/signs for one polynomial family (p, p' or p'')."""

    def __init__(self, C: np.ndarray, expo: np.ndarray):
        self.C = C
        self.e = expo
        with np.errstate(divide="ignore"):
            self.L = np.log(np.abs(C))
        self.sgn = np.sign(C)


class _Engine:
    """Batched isolation for many coefficient rows over one exponent set."""

    def __init__(self, exponents: np.ndarray, coeffs: np.ndarray, upper: float = math.inf):
        exponents = np.asarray(exponents, dtype=np.int64)
        order = np.argsort(exponents)
        e = (exponents[order] - exponents[order][0]).astype(float)
        C = np.asarray(coeffs, dtype=float)[:, order]
        self.N, self.t = C.shape
        self.upper = upper
        self.p = _Frame(C, e)
        self.dp = _Frame(C * e, e - 1)
        self.ddp = _Frame(C * e * (e - 1), e - 2)
        self.emax = max(float(e.max()), 1.0)
        self.counts = np.zeros(self.N, dtype=np.int64)
        self.flags = np.zeros(self.N, dtype=bool)
        self.intervals: list[list[tuple[float, float]]] = [[] for _ in range(self.N)]

    def _slop_factor(self, la, lb):
        scale = np.maximum(np.maximum(np.abs(la), np.abs(lb)), 1.0)
        return _EPS * (self.t + 8 + 4.0 * self.emax * scale)

    def _interval(self, fr: _Frame, trial, la, lb):
        """Naive scaled enclosure [lo, hi]*exp(m) of fr over [a, b], plus slop."""
        L = fr.L[trial]
        hi_log = L + fr.e * lb[:, None]
        lo_log = L + fr.e * la[:, None]
        m = hi_log.max(axis=1)
        m = np.where(np.isfinite(m), m, 0.0)
        ub = np.exp(hi_log - m[:, None])
        ua = np.exp(lo_log - m[:, None])
        s = fr.sgn[trial]
        lo = np.where(s > 0, ua, -ub).sum(axis=1)
        hi = np.where(s > 0, ub, -ua).sum(axis=1)
        slop = self._slop_factor(la, lb) * ub.sum(axis=1)
        return lo - slop, hi + slop, m

    def _point(self, fr: _Frame, trial, lx):
        """Scaled value val*exp(m) with error bound err*exp(m) at points x."""
        L = fr.L[trial] + fr.e * lx[:, None]
        m = L.max(axis=1)
        m = np.where(np.isfinite(m), m, 0.0)
        u = np.exp(L - m[:, None])
        val = (fr.sgn[trial] * u).sum(axis=1)
        err = self._slop_factor(lx, lx) * u.sum(axis=1)
        return val, err, m

    def _centered(self, fr, dfr, trial, a, b, la, lb, dlo=None, dhi=None, dm=None):
        """Mean-value enclosure of fr over [a,b] via its derivative family dfr."""
        c = 0.5 * (a + b)
        w = 0.5 * (b - a)
        lc = np.log(c)
        val, err, m = self._point(fr, trial, lc)
        if dlo is None:
            dlo, dhi, dm = self._interval(dfr, trial, la, lb)
        with np.errstate(over="ignore"):
            rad = w * np.maximum(np.abs(dlo), np.abs(dhi)) * np.exp(dm - m)
        lo = val - err - rad
        hi = val + err + rad
        return lo, hi

    def _point_sign(self, trial, x):
        """Certified sign of p at points x; exact dyadic fallback when ambiguous."""
        lx = np.log(x)
        val, err, _ = self._point(self.p, trial, lx)
        out = np.where(val > err, 1, np.where(val < -err, -1, -2)).astype(np.int64)
        for i in np.nonzero(out == -2)[0]:
            out[i] = _exact_sign(self.p.e.astype(np.int64), self.p.C[trial[i]], float(x[i]))
        return out

    def run(self):
        sgn = self.p.sgn
        if (np.abs(sgn).sum(axis=1) == 0).any():
            raise ValueError("a coefficient row is identically zero")

        # Descartes sign-change cap per trial
        V = np.zeros(self.N, dtype=np.int64)
        for i in range(self.N):
            nz = sgn[i][sgn[i] != 0]
            V[i] = np.count_nonzero(nz[1:] != nz[:-1])

        # Cauchy bounds relative to the leading/trailing nonzero terms
        absC = np.abs(self.p.C)
        B = np.ones(self.N)
        lo_bound = np.ones(self.N)
        for i in range(self.N):
            nz = np.nonzero(sgn[i])[0]
            if len(nz) < 2 or V[i] == 0:
                V[i] = 0
                continue
            lead, trail = nz[-1], nz[0]
            B[i] = 1.0 + absC[i, nz[:-1]].max() / absC[i, lead]
            lo_bound[i] = 1.0 / (1.0 + absC[i, nz[1:]].max() / absC[i, trail])

        hi0 = np.minimum(B, self.upper)
        active = (V > 0) & (lo_bound < hi0)
        trial = np.nonzero(active)[0]
        a = lo_bound[trial].copy()
        b = hi0[trial].copy()

        for _level in range(_MAX_LEVELS):
            if len(trial) == 0:
                break
            la, lb = np.log(a), np.log(b)
            plo, phi, _ = self._interval(self.p, trial, la, lb)
            dlo, dhi, dm = self._interval(self.dp, trial, la, lb)
            clo, chi = self._centered(self.p, self.dp, trial, a, b, la, lb, dlo, dhi, dm)
            plo = np.maximum(plo, clo)
            phi = np.minimum(phi, chi)
            keep = ~((plo > 0) | (phi < 0))
            trial, a, b, la, lb = trial[keep], a[keep], b[keep], la[keep], lb[keep]
            dlo, dhi = dlo[keep], dhi[keep]
            if len(trial) == 0:
                break

            cdlo, cdhi = self._centered(self.dp, self.ddp, trial, a, b, la, lb)
            # dlo/dhi and cdlo/cdhi live in different scale frames; a sign
            # verdict from either one is valid, so test them separately.
            mono = (dlo > 0) | (dhi < 0) | (cdlo > 0) | (cdhi < 0)

            if mono.any():
                mt, ma, mb = trial[mono], a[mono], b[mono]
                sa = self._point_sign(mt, ma)
                sb = self._point_sign(mt, mb)
                for k in range(len(mt)):
                    i = int(mt[k])
                    if sa[k] == 0 and sb[k] == 0:
                        self.flags[i] = True
                    elif sa[k] == 0 or sa[k] * sb[k] < 0:
                        self.counts[i] += 1
                        lo_pt = float(ma[k]) if sa[k] != 0 else float(ma[k]) * (1 - 2.0**-50)
                        self.intervals[i].append((lo_pt, float(mb[k])))

            # split the undecided cells
            ut, ua, ub = trial[~mono], a[~mono], b[~mono]
            too_small = (ub - ua) <= _REL_WIDTH_LIMIT * ub
            if too_small.any():
                self.flags[ut[too_small]] = True
            ut, ua, ub = ut[~too_small], ua[~too_small], ub[~too_small]
            mid = np.where(ub / ua > 4.0, np.sqrt(ua * ub), 0.5 * (ua + ub))
            trial = np.concatenate([ut, ut])
            a = np.concatenate([ua, mid])
            b = np.concatenate([mid, ub])

            # Descartes early stop: a trial with count == sign changes is done
            open_trials = self.counts[trial] < V[trial]
            trial, a, b = trial[open_trials], a[open_trials], b[open_trials]
        else:
            self.flags[np.unique(trial)] = True

        return self.counts, self.flags, self.intervals


def count_batch(exponents, coeff_matrix, domain: str = "positive"):
    """Certified root counts for many coefficient rows over one support.

    domain: "positive" for (0, oo), "unit" for (0, 1); a root exactly at 1 is
    excluded.  Returns (counts, degenerate_flags, intervals).
    """
    if domain not in ("positive", "unit"):
        raise ValueError("domain must be 'positive' or 'unit'")
    upper = math.inf if domain == "positive" else 1.0
    eng = _Engine(np.asarray(exponents), np.atleast_2d(np.asarray(coeff_matrix, dtype=float)), upper)
    return eng.run()


def _single(p: SparsePoly, domain: str) -> RootCount:
    q = p.normalized()
    counts, flags, intervals = count_batch(
        np.array(q.exponents), np.array(q.coefficients)[None, :], domain
    )
    return RootCount(count=int(counts[0]), intervals=intervals[0], degenerate_flag=bool(flags[0]))


def count_positive_roots(p: SparsePoly) -> RootCount:
    """Count distinct simple roots of p in (0, oo), with isolating intervals."""
    return _single(p, "positive")


def count_in_unit_interval(p: SparsePoly) -> RootCount:
    """Count distinct simple roots of p in (0, 1); a root at 1 is excluded."""
    return _single(p, "unit")
