"""Closed form versus golden-section oracle over random target systems."""
from __future__ import annotations

import random
from dataclasses import dataclass

from carlos_scales.intervals import builtin_intervals
from carlos_scales.lsq import TargetSystem, numeric_minimize, optimal_unit

ORACLE_BRACKET = (1e-4, 1.5)  # holds every minimizer with steps <= 100 and targets <= 2/1


def random_system(rng: random.Random, max_targets: int = 6, max_steps: int = 100) -> TargetSystem:
    pool = [iv for iv in builtin_intervals() if iv.ratio.numerator > iv.ratio.denominator]
    n = rng.randint(1, max_targets)
    return TargetSystem([(rng.randint(1, max_steps), rng.choice(pool)) for _ in range(n)], "random")


@dataclass(frozen=True)
class OracleSummary:
    count: int
    max_discrepancy: float  # |closed form - oracle|, log2 units
    max_stationarity: float  # |sum k_i (k_i x0 - log2 J_i)|, log2 units
    worst_system: TargetSystem | None


def oracle_check(count: int = 1000, seed: int = 0, tol: float = 1e-12) -> OracleSummary:
    rng = random.Random(seed)
    worst = 0.0
    worst_sys = None
    stat = 0.0
    for _ in range(count):
        system = random_system(rng)
        scale = optimal_unit(system)
        x = numeric_minimize(system, ORACLE_BRACKET, tol)
        d = abs(x - scale.unit_log2)
        if d >= worst:
            worst, worst_sys = d, system
        s = 0.0
        for k, iv in system.targets:
            s += k * (k * scale.unit_log2 - iv.log2)
        stat = max(stat, abs(s))
    return OracleSummary(count, worst, stat, worst_sys)
