"""Target systems for the named scale families."""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from carlos_scales.errors import DegeneratePairError, DomainError, ParameterOrderError, SpecParseError
from carlos_scales.intervals import M2, M3, P5, JustInterval, catalog, compose, m3, parse_interval
from carlos_scales.lsq import TargetSystem


def _check_positive(*params: int) -> None:
    for p in params:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise DomainError(f"step counts must be positive integers, got {p!r}")


def _check_increasing(*params: int) -> None:
    if any(x >= y for x, y in zip(params, params[1:])):
        raise ParameterOrderError(f"parameters must be strictly increasing, got {params}")


def carlos2(a: int, b: int) -> TargetSystem:
    """m3 at ``a`` units, M3 at ``b``, P5 at ``a + b``."""
    _check_positive(a, b)
    _check_increasing(a, b)
    return TargetSystem([(a, m3), (b, M3), (a + b, P5)], f"({a},{b})-Carlos")


def carlos3(a: int, b: int, c: int) -> TargetSystem:
    """Like :func:`carlos2` but with the fifth at an independent ``c`` units."""
    _check_positive(a, b, c)
    _check_increasing(a, b, c)
    return TargetSystem([(a, m3), (b, M3), (c, P5)], f"({a},{b},{c})-Carlos")


def general_pair(ia: JustInterval, a: int, ib: JustInterval, b: int) -> TargetSystem:
    """``ia`` at ``a`` units, ``ib`` at ``b`` units and their sum at ``a + b``.

    No ordering is imposed on ``a`` and ``b``.
    """
    _check_positive(a, b)
    if ia.ratio == ib.ratio:
        raise DegeneratePairError(f"{ia.name} and {ib.name} have the same ratio {ia.ratio}")
    return TargetSystem(
        [(a, ia), (b, ib), (a + b, compose(ia, ib))],
        f"{{{ia.name},{ib.name}}}-({a},{b})",
    )


def pentatonic(a: int, b: int) -> TargetSystem:
    """M2 at ``a``, M3 at ``2a``, m3 at ``b``, P5 at ``2a + b``.

    The major sixth (``3a + b``) is left out on purpose: it is the inversion
    of the minor third already targeted.
    """
    _check_positive(a, b)
    _check_increasing(a, b)
    return TargetSystem(
        [(a, M2), (2 * a, M3), (b, m3), (2 * a + b, P5)],
        f"({a},{b})-pentatonic",
    )


def custom_system(spec: Iterable[tuple[int, str]], label: str = "custom") -> TargetSystem:
    targets = []
    for steps, token in spec:
        if not isinstance(steps, int) or isinstance(steps, bool) or steps < 1:
            raise SpecParseError(f"step count must be a positive integer, got {steps!r}", str(steps))
        targets.append((steps, parse_interval(token)))
    if not targets:
        raise SpecParseError("empty system", "")
    try:
        return TargetSystem(targets, label)
    except DomainError as exc:
        raise SpecParseError(str(exc)) from None


def parse_system(text: str, label: str | None = None) -> TargetSystem:
    """Parse ``"<k>:<interval>,..."``, e.g. ``"4:m3,5:M3,9:P5"``."""
    pairs = []
    for item in text.split(","):
        item = item.strip()
        steps, sep, token = item.partition(":")
        if not sep or not token.strip():
            raise SpecParseError(f"expected <steps>:<interval>, got {item!r}", item)
        try:
            k = int(steps)
        except ValueError:
            raise SpecParseError(f"bad step count {steps!r}", steps) from None
        pairs.append((k, token.strip()))
    return custom_system(pairs, label or text.replace(" ", ""))


def system_from_json(data: str | Sequence[dict], label: str | None = None) -> TargetSystem:
    """Build a system from ``[{"steps": 4, "interval": "m3"}, ...]``."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SpecParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise SpecParseError("system JSON must be an array of {steps, interval} objects")
    pairs = []
    for obj in data:
        if not isinstance(obj, dict) or "steps" not in obj or "interval" not in obj:
            raise SpecParseError(f"bad system entry {obj!r}", json.dumps(obj))
        pairs.append((obj["steps"], str(obj["interval"])))
    return custom_system(pairs, label or "custom")


def system_to_json(system: TargetSystem) -> list[dict]:
    names = catalog()
    return [
        {"steps": k, "interval": iv.name if names.get(iv.name) == iv else str(iv.ratio)}
        for k, iv in system.targets
    ]
