"""Shared numeric primitives: tolerance policy, compensated summation, reference constants.

Everything here is pure and immutable; values are safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerance:
    """Accuracy target for quadrature, summation and identity comparison.

    A comparison passes when ``|a - b| <= abs_tol + rel_tol * max(|a|, |b|)``.
    ``max_work`` caps function evaluations (quadrature) or series terms.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_work: int = 2_000_000

    def __post_init__(self):
        if self.abs_tol < 0.0 or self.rel_tol < 0.0:
            raise ValueError("tolerances must be nonnegative")
        if self.abs_tol == 0.0 and self.rel_tol == 0.0:
            raise ValueError("at least one of abs_tol, rel_tol must be positive")
        if self.max_work < 1:
            raise ValueError("max_work must be a positive integer")

    def margin(self, a: float, b: float) -> float:
        return self.abs_tol + self.rel_tol * max(abs(a), abs(b))

    def passes(self, a: float, b: float) -> bool:
        d = abs(a - b)
        return d <= self.margin(a, b) if math.isfinite(d) else False


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class ConstantsTable:
    """Reference constants, 25+ significant decimal digits each.

    Provenance: standard decimal expansions, re-derived from scratch by the
    oracle computations in the test suite (Machin arctangent series for pi,
    binary log series for log2, zeta series with Euler-Maclaurin tails for
    zeta2/zeta3, Euler-transformed odd alternating squares for catalan).
    The literals are rounded to the nearest binary64 on parsing.
    """

    pi: float = 3.141592653589793238462643383279503
    log2: float = 0.6931471805599453094172321214581766
    zeta2: float = 1.644934066848226436472415166646025  # pi^2 / 6
    zeta3: float = 1.202056903159594285399738161511450
    catalan: float = 0.9159655941772190150546035149324


CONSTANTS = ConstantsTable()


def zeta3_reference() -> float:
    """Stored reference value of zeta(3) (Apery's constant)."""
    return CONSTANTS.zeta3


def catalan_reference() -> float:
    """Stored reference value of Catalan's constant."""
    return CONSTANTS.catalan


def compensated_sum(terms) -> float:
    """Sum a finite sequence of floats with error-free-transformation accuracy.

    Backed by ``math.fsum`` (Shewchuk's exact accumulation), so the result is
    the correctly rounded exact sum and permutation invariant.
    """
    return math.fsum(terms)


class NeumaierSum:
    """Streaming compensated accumulator (Neumaier's variant of Kahan summation).

    Keeps the running error term alongside the sum so that long series can be
    accumulated one term at a time with O(eps) total drift.
    """

    __slots__ = ("_s", "_c")

    def __init__(self):
        self._s = 0.0
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c
