"""Least-squares unit size for an equal-step scale.

Each target asks that ``k`` units approximate a just interval ``J``. The
unit ``x`` (in octaves) minimizes

    g(x) = sum_i (k_i * x - log2 J_i) ** 2

whose unique minimizer is ``sum_i k_i log2 J_i / sum_i k_i**2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from carlos_scales.errors import BracketError, DomainError
from carlos_scales.intervals import JustInterval

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Target:
    steps: int
    interval: JustInterval

    def __iter__(self):
        return iter((self.steps, self.interval))


@dataclass(frozen=True)
class TargetSystem:
    """Ordered (step count, just interval) pairs defining the objective.

    The label is descriptive only and takes no part in equality.
    """

    targets: tuple[Target, ...]
    label: str = field(default="", compare=False)

    def __init__(self, targets: Iterable[tuple[int, JustInterval] | Target], label: str = "") -> None:
        ts = tuple(t if isinstance(t, Target) else Target(*t) for t in targets)
        if not ts:
            raise DomainError("a target system needs at least one target")
        for t in ts:
            if not isinstance(t.steps, int) or t.steps < 1:
                raise DomainError(f"step counts must be positive integers, got {t.steps!r}")
            r = t.interval.ratio
            if r.numerator <= r.denominator:
                raise DomainError(f"target {t.interval.name} ({r}) must be wider than unison")
        object.__setattr__(self, "targets", ts)
        object.__setattr__(self, "label", label)

    @property
    def steps(self) -> tuple[int, ...]:
        return tuple(t.steps for t in self.targets)

    @property
    def intervals(self) -> tuple[JustInterval, ...]:
        return tuple(t.interval for t in self.targets)

    def __len__(self) -> int:
        return len(self.targets)


@dataclass(frozen=True)
class DerivedScale:
    """Optimal unit of a target system and the resulting per-target errors.

    ``residuals[i]`` is ``k_i * unit_cents - cents(J_i)``; positive means the
    tempered interval is sharp of just.
    """

    unit_log2: float
    unit_cents: float
    residuals: tuple[float, ...]
    system: TargetSystem

    @property
    def max_abs_deviation(self) -> float:
        return max(abs(r) for r in self.residuals)

    def degree_cents(self, k: int) -> float:
        return k * self.unit_cents


def objective(system: TargetSystem, x: float) -> float:
    """Sum of squared log2 errors of the system at unit size ``x``."""
    if not x > 0:
        raise DomainError(f"unit size must be positive, got {x}")
    total = 0.0
    for k, iv in system.targets:
        d = k * x - iv.log2
        total += d * d
    return total


def _normal_sums(steps: Sequence[int], log2s: Sequence[float]) -> tuple[float, int]:
    # Accumulation order is shared with the sweep kernels; keep them in sync.
    num = 0.0
    den = 0
    for k, lg in zip(steps, log2s):
        num += k * lg
        den += k * k
    return num, den


def optimal_unit(system: TargetSystem) -> DerivedScale:
    """Closed-form minimizer of :func:`objective`."""
    steps = system.steps
    num, den = _normal_sums(steps, [iv.log2 for iv in system.intervals])
    x0 = num / den
    unit_cents = 1200.0 * x0
    residuals = tuple(k * unit_cents - iv.cents for k, iv in system.targets)
    return DerivedScale(x0, unit_cents, residuals, system)


def _exact_objective(steps: Sequence[int], log2s: Sequence[Fraction], x: Fraction) -> Fraction:
    total = Fraction(0)
    for k, lg in zip(steps, log2s):
        d = k * x - lg
        total += d * d
    return total


def numeric_minimize(
    system: TargetSystem,
    bracket: tuple[float, float],
    tol: float = 1e-12,
    max_iter: int = 500,
) -> float:
    """Golden-section minimization of the objective over ``bracket``.

    Independent of the closed form: it only compares objective values. The
    comparisons are made on exact rational evaluations of g (the float log2
    targets converted exactly), so rounding noise in g cannot stall the
    search near the flat bottom of the parabola. Test oracle only.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0 < lo < hi) or not tol > 0:
        raise DomainError(f"need 0 < lo < hi and tol > 0, got {bracket}, {tol}")
    steps = system.steps
    log2s = [Fraction(iv.log2) for iv in system.intervals]

    def g(x: float) -> Fraction:
        return _exact_objective(steps, log2s, Fraction(x))

    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = g(x1), g(x2)
    moved_lo = moved_hi = False
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            moved_hi = True
            x1 = b - INV_PHI * (b - a)
            f1 = g(x1)
        else:
            a, x1, f1 = x1, x2, f2
            moved_lo = True
            x2 = a + INV_PHI * (b - a)
            f2 = g(x2)
    x = 0.5 * (a + b)
    width = max(b - a, tol)
    if not moved_lo and g(lo - width) < g(lo):
        raise BracketError(f"minimizer lies below the bracket {bracket}")
    if not moved_hi and g(hi + width) < g(hi):
        raise BracketError(f"minimizer lies above the bracket {bracket}")
    return x
