"""Octave fit, tolerance gating and exhaustive parameter searches."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from carlos_scales import builders, kernels
from carlos_scales.errors import BoundsRequiredError, DomainError
from carlos_scales.intervals import M2, M3, P5, JustInterval, compose, m3
from carlos_scales.lsq import DerivedScale, TargetSystem, optimal_unit

DEFAULT_TOL_CENTS = 5.0


@dataclass(frozen=True)
class OctaveFit:
    exact_units: float
    nearest_steps: int
    deviation_cents: float  # nearest_steps * unit - 1200, positive = sharp


def octave_fit(scale: DerivedScale) -> OctaveFit:
    """How well a whole number of units approximates the 2:1 octave.

    Halfway cases round up. The step count never drops below 1, so for
    units wider than two octaves the deviation exceeds half a unit.
    """
    unit = scale.unit_cents
    if not unit > 0:
        raise DomainError(f"unit size must be positive, got {unit}")
    exact = 1200.0 / unit
    nearest = max(1, math.floor(exact + 0.5))
    return OctaveFit(exact, nearest, nearest * unit - 1200.0)


def degree_deviation(scale: DerivedScale, steps: int, target_cents: float = 1200.0) -> float:
    """Signed distance in cents from ``steps`` units to ``target_cents``."""
    return steps * scale.unit_cents - target_cents


def tolerance_check(scale: DerivedScale, tol_cents: float = DEFAULT_TOL_CENTS) -> tuple[bool, float]:
    """Return (every |residual| < tol, max |residual|)."""
    if not tol_cents > 0:
        raise DomainError(f"tolerance must be positive, got {tol_cents}")
    worst = scale.max_abs_deviation
    return worst < tol_cents, worst


@dataclass(frozen=True)
class SearchHit:
    params: tuple[int, ...]
    scale: DerivedScale
    octave: OctaveFit
    max_abs_deviation_cents: float
    gcd_trivial: bool


@dataclass(frozen=True)
class Family:
    """A parameterized scale family whose step counts are linear in the parameters.

    ``coeffs[i]`` gives the step count of target ``i`` as a linear form in
    the parameters; ``intervals[i]`` is its just interval.
    """

    name: str
    coeffs: tuple[tuple[int, ...], ...]
    intervals: tuple[JustInterval, ...]
    build: Callable[..., TargetSystem]
    increasing: bool = True

    @property
    def arity(self) -> int:
        return len(self.coeffs[0])

    def steps_matrix(self, params: np.ndarray) -> np.ndarray:
        return np.ascontiguousarray(params @ np.array(self.coeffs, dtype=np.int64).T)


CARLOS2 = Family("carlos2", ((1, 0), (0, 1), (1, 1)), (m3, M3, P5), builders.carlos2)
CARLOS3 = Family("carlos3", ((1, 0, 0), (0, 1, 0), (0, 0, 1)), (m3, M3, P5), builders.carlos3)
PENTATONIC = Family(
    "pentatonic", ((1, 0), (2, 0), (0, 1), (2, 1)), (M2, M3, m3, P5), builders.pentatonic
)


def general_pair_family(ia: JustInterval, ib: JustInterval) -> Family:
    def build(a: int, b: int) -> TargetSystem:
        return builders.general_pair(ia, a, ib, b)

    # validate the pair once, up front
    builders.general_pair(ia, 1, ib, 1)
    return Family(
        f"general_pair[{ia.name},{ib.name}]",
        ((1, 0), (0, 1), (1, 1)),
        (ia, ib, compose(ia, ib)),
        build,
        increasing=False,
    )


FAMILIES = {f.name: f for f in (CARLOS2, CARLOS3, PENTATONIC)}


def _normalize_bounds(bounds: Sequence, arity: int) -> list[tuple[int, int]]:
    if bounds is None or len(bounds) != arity:
        raise BoundsRequiredError(f"need {arity} finite bounds, got {bounds!r}")
    out = []
    for bd in bounds:
        lo, hi = (1, bd) if not isinstance(bd, (tuple, list)) else bd
        for v in (lo, hi):
            if v is None or (isinstance(v, float) and not math.isfinite(v)):
                raise BoundsRequiredError(f"bounds must be finite, got {bd!r}")
        out.append((max(1, int(lo)), int(hi)))
    return out


def enumerate_params(family: Family, bounds: Sequence) -> np.ndarray:
    """All valid parameter tuples within bounds, ordered by (sum, components)."""
    ranges = _normalize_bounds(bounds, family.arity)
    if any(hi < lo for lo, hi in ranges):
        return np.empty((0, family.arity), dtype=np.int64)
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in ranges]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, family.arity)
    if family.increasing and family.arity > 1:
        grid = grid[np.all(grid[:, :-1] < grid[:, 1:], axis=1)]
    keys = [grid[:, j] for j in reversed(range(family.arity))] + [grid.sum(axis=1)]
    return grid[np.lexsort(keys)]


def _gcd_trivial(params: Sequence[int]) -> bool:
    return math.gcd(*params) > 1


def search_generic(
    family: Family,
    bounds: Sequence,
    tol_cents: float = DEFAULT_TOL_CENTS,
    *,
    exclude_gcd_trivial: bool = False,
    where: Callable[[tuple[int, ...]], bool] | None = None,
) -> list[SearchHit]:
    """Exhaustively sweep a family and keep scales within tolerance.

    ``bounds`` holds one entry per parameter: an upper bound (lower bound 1)
    or an inclusive ``(lo, hi)`` pair. ``where`` optionally restricts the
    parameter tuples considered.
    """
    if not tol_cents > 0:
        raise DomainError(f"tolerance must be positive, got {tol_cents}")
    params = enumerate_params(family, bounds)
    if where is not None and len(params):
        params = params[np.fromiter((bool(where(tuple(p))) for p in params.tolist()), bool, len(params))]
    if not len(params):
        return []
    ivs = family.intervals
    _, devs = kernels.sweep(family.steps_matrix(params), [iv.log2 for iv in ivs], [iv.cents for iv in ivs])
    hits = []
    for row in params[devs < tol_cents].tolist():
        p = tuple(row)
        trivial = _gcd_trivial(p)
        if trivial and exclude_gcd_trivial:
            continue
        scale = optimal_unit(family.build(*p))
        hits.append(SearchHit(p, scale, octave_fit(scale), scale.max_abs_deviation, trivial))
    return hits


def search_carlos2(
    a_max: int,
    b_max: int,
    tol_cents: float = DEFAULT_TOL_CENTS,
    exclude_gcd_trivial: bool = False,
) -> list[SearchHit]:
    """All (a,b)-Carlos scales with a <= a_max, a < b <= b_max within tolerance.

    Ordered by ascending (a + b, a).
    """
    if a_max < 1 or b_max < 2:
        raise DomainError(f"need a_max >= 1 and b_max >= 2, got {a_max}, {b_max}")
    return search_generic(CARLOS2, (a_max, b_max), tol_cents, exclude_gcd_trivial=exclude_gcd_trivial)
