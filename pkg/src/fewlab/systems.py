"""Core data types: supports, variance systems, sampled fewnomial systems.

Monomials are always evaluated in the log domain (``exp`` of linear forms in
``log x``) so that sparse supports with large exponents stay representable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .rng import gaussian_matrix

__all__ = [
    "Support",
    "VarianceSystem",
    "FewnomialSystem",
    "LogPoint",
    "evaluate",
    "evaluate_log",
    "sample",
    "normalize_laurent",
    "reflect_support",
]


@dataclass(frozen=True)
class Support:
    """A finite set of integer exponent vectors, canonically (lex) ordered."""

    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.exponents) == 0:
            raise ValueError("support must contain at least one exponent vector")
        dims = {len(a) for a in self.exponents}
        if len(dims) != 1:
            raise ValueError("exponent vectors have inconsistent dimension")
        canon = tuple(sorted(tuple(int(c) for c in a) for a in self.exponents))
        if len(set(canon)) != len(canon):
            raise ValueError("exponent vectors must be distinct")
        object.__setattr__(self, "exponents", canon)

    @classmethod
    def from_vectors(cls, vectors) -> "Support":
        vecs = []
        for v in vectors:
            if np.isscalar(v) or isinstance(v, (int, np.integer)):
                vecs.append((int(v),))
            else:
                vecs.append(tuple(int(c) for c in v))
        return cls(tuple(vecs))

    @property
    def n(self) -> int:
        return len(self.exponents[0])

    @property
    def t(self) -> int:
        return len(self.exponents)

    def array(self) -> np.ndarray:
        """The t x n integer exponent matrix (row per monomial)."""
        return np.array(self.exponents, dtype=np.int64).reshape(self.t, self.n)


@dataclass(frozen=True)
class VarianceSystem:
    """Strictly positive per-monomial standard deviations, in support order."""

    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if len(w) == 0 or any(not (x > 0) or not math.isfinite(x) for x in w):
            raise ValueError("weights must be finite and strictly positive")
        object.__setattr__(self, "weights", w)

    @classmethod
    def unit(cls, t: int) -> "VarianceSystem":
        return cls((1.0,) * t)

    @classmethod
    def kostlan(cls, d: int) -> "VarianceSystem":
        """sqrt-binomial weights for the dense univariate support {0, ..., d}."""
        return cls(tuple(math.sqrt(math.comb(d, a)) for a in range(d + 1)))

    @property
    def t(self) -> int:
        return len(self.weights)

    def array(self) -> np.ndarray:
        return np.array(self.weights, dtype=float)


@dataclass(frozen=True)
class FewnomialSystem:
    """A sampled system: n equations sharing a support and variance system."""

    support: Support
    sigma: VarianceSystem
    coefficients: np.ndarray  # shape (n, t)

    def __post_init__(self):
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.shape != (self.support.n, self.support.t):
            raise ValueError(
                f"coefficient matrix must be {self.support.n} x {self.support.t}, "
                f"got {coeffs.shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        coeffs = coeffs.copy()
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)
        if self.sigma.t != self.support.t:
            raise ValueError("variance system length must match support cardinality")

    @property
    def n(self) -> int:
        return self.support.n

    @property
    def t(self) -> int:
        return self.support.t

    def to_json(self) -> str:
        doc = {
            "n": self.support.n,
            "exponents": [list(a) for a in self.support.exponents],
            "sigma": list(self.sigma.weights),
            "coefficients": self.coefficients.tolist(),
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "FewnomialSystem":
        doc = json.loads(text)
        support = Support.from_vectors(doc["exponents"])
        if support.n != doc["n"]:
            raise ValueError("declared n does not match exponent vectors")
        return cls(support, VarianceSystem(tuple(doc["sigma"])), np.array(doc["coefficients"]))


@dataclass(frozen=True)
class LogPoint:
    """A point of the positive orthant given by its componentwise logarithm."""

    y: tuple[float, ...]

    def __post_init__(self):
        y = tuple(float(v) for v in self.y)
        if any(not math.isfinite(v) for v in y):
            raise ValueError("log-coordinates must be finite")
        object.__setattr__(self, "y", y)

    def x(self) -> np.ndarray:
        return np.exp(np.array(self.y))


def evaluate_log(system: FewnomialSystem, y: np.ndarray) -> np.ndarray:
    """Evaluate the system at x = exp(y), overflow-safe via max-rescaling."""
    y = np.asarray(y, dtype=float)
    A = system.support.array()
    logterms = np.log(system.sigma.array()) + A @ y  # (t,)
    m = logterms.max()
    scaled = system.coefficients @ np.exp(logterms - m)  # (n,)
    return scaled * math.exp(m)


def evaluate(system: FewnomialSystem, x) -> np.ndarray:
    """Evaluate (f_1(x), ..., f_n(x)) at a strictly positive point."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.shape != (system.n,):
        raise ValueError(f"point must have {system.n} coordinates")
    if not np.all(x > 0):
        raise ValueError("all coordinates of x must be strictly positive")
    return evaluate_log(system, np.log(x))


def sample(support: Support, sigma: VarianceSystem, seed: int) -> FewnomialSystem:
    """Draw the n x t coefficient matrix i.i.d. N(0,1), keyed by the seed.

    Entry (i, j) is a fixed function of (seed, i, j): the Philox stream is
    keyed by the seed and the matrix is filled in row-major order, so the
    same seed reproduces the same system bitwise on any platform.
    """
    if sigma.t != support.t:
        raise ValueError("variance system length must match support cardinality")
    coeffs = gaussian_matrix(seed, (0,), (support.n, support.t))
    return FewnomialSystem(support, sigma, coeffs)


def normalize_laurent(support: Support) -> Support:
    """Translate a univariate support so its minimum exponent is zero."""
    if support.n != 1:
        raise ValueError("normalize_laurent only applies to univariate supports")
    lo = min(a[0] for a in support.exponents)
    return Support.from_vectors([a[0] - lo for a in support.exponents])


def reflect_support(support: Support) -> Support:
    """The support of f(1/x): negate every exponent."""
    if support.n != 1:
        raise ValueError("reflect_support only applies to univariate supports")
    return Support.from_vectors([-a[0] for a in support.exponents])
