"""Just intervals as exact frequency ratios.

Ratios are kept as exact integers; floating point only appears when an
interval is converted to cents or to log2-octave units.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from carlos_scales.errors import DomainError, SpecParseError

LN2 = math.log(2.0)
COMPOSE_SEP = "⊕"  # circled plus


@dataclass(frozen=True)
class Ratio:
    """Positive rational frequency ratio stored in lowest terms."""

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        n, d = self.numerator, self.denominator
        if not isinstance(n, int) or not isinstance(d, int):
            raise TypeError("ratio terms must be integers")
        if n < 1 or d < 1:
            raise DomainError(f"ratio terms must be positive, got {n}/{d}")
        g = math.gcd(n, d)
        if g != 1:
            object.__setattr__(self, "numerator", n // g)
            object.__setattr__(self, "denominator", d // g)

    @classmethod
    def parse(cls, text: str) -> "Ratio":
        m = re.fullmatch(r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?", text)
        if m is None:
            raise SpecParseError(f"not a ratio: {text!r}", text)
        try:
            return cls(int(m.group(1)), int(m.group(2) or 1))
        except DomainError as exc:
            raise SpecParseError(str(exc), text) from None

    def __mul__(self, other: "Ratio") -> "Ratio":
        if not isinstance(other, Ratio):
            return NotImplemented
        return Ratio(self.numerator * other.numerator, self.denominator * other.denominator)

    def __truediv__(self, other: "Ratio") -> "Ratio":
        if not isinstance(other, Ratio):
            return NotImplemented
        return Ratio(self.numerator * other.denominator, self.denominator * other.numerator)

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def log2_ratio(r: Ratio) -> float:
    """Size of `r` in octaves."""
    return (math.log(r.numerator) - math.log(r.denominator)) / LN2


def cents(r: Ratio) -> float:
    """Size of `r` in cents (1200 per octave)."""
    return 1200.0 * log2_ratio(r)


@dataclass(frozen=True)
class JustInterval:
    name: str
    ratio: Ratio

    @property
    def cents(self) -> float:
        return cents(self.ratio)

    @property
    def log2(self) -> float:
        return log2_ratio(self.ratio)

    def __str__(self) -> str:
        return self.name


_BUILTINS = {
    "P1": Ratio(1, 1),
    "M2": Ratio(9, 8),
    "m3": Ratio(6, 5),
    "M3": Ratio(5, 4),
    "P4": Ratio(4, 3),
    "P5": Ratio(3, 2),
    "m6": Ratio(8, 5),
    "M6": Ratio(5, 3),
    "m7": Ratio(16, 9),
    "P8": Ratio(2, 1),
}
_catalog: dict[str, JustInterval] = {k: JustInterval(k, v) for k, v in _BUILTINS.items()}
_by_ratio: dict[Ratio, JustInterval] = {iv.ratio: iv for iv in _catalog.values()}

M2, m3, M3 = _catalog["M2"], _catalog["m3"], _catalog["M3"]
P4, P5, M6, P8 = _catalog["P4"], _catalog["P5"], _catalog["M6"], _catalog["P8"]


def catalog() -> dict[str, JustInterval]:
    """Snapshot of the interval catalog, keyed by name."""
    return dict(_catalog)


def builtin_intervals() -> list[JustInterval]:
    """The fixed built-in intervals, narrowest first."""
    return sorted((_catalog[k] for k in _BUILTINS), key=lambda iv: iv.ratio.as_fraction())


def register_interval(name: str, ratio: Ratio) -> JustInterval:
    """Add a named interval to the catalog.

    Built-in names cannot be redefined, and a ratio may carry only one
    catalog name.
    """
    if name in _BUILTINS:
        raise DomainError(f"cannot redefine built-in interval {name}")
    if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
        raise DomainError(f"invalid interval name {name!r}")
    existing = _by_ratio.get(ratio)
    if existing is not None and existing.name != name:
        raise DomainError(f"ratio {ratio} already named {existing.name}")
    iv = JustInterval(name, ratio)
    _catalog[name] = iv
    _by_ratio[ratio] = iv
    return iv


def lookup(name: str) -> JustInterval:
    try:
        return _catalog[name]
    except KeyError:
        raise SpecParseError(f"unknown interval {name!r}", name) from None


def from_ratio(r: Ratio, fallback_name: str | None = None) -> JustInterval:
    """Interval for `r`, named from the catalog when the ratio matches exactly."""
    hit = _by_ratio.get(r)
    if hit is not None:
        return hit
    return JustInterval(fallback_name or str(r), r)


def parse_interval(token: str) -> JustInterval:
    """Parse a case-sensitive catalog name ("P5") or a literal ratio ("7/4")."""
    token = token.strip()
    if token in _catalog:
        return _catalog[token]
    if token and token[0].isdigit():
        return from_ratio(Ratio.parse(token))
    raise SpecParseError(f"unknown interval {token!r}", token)


def compose(i: JustInterval, j: JustInterval) -> JustInterval:
    """Stack two intervals; the ratios multiply."""
    return from_ratio(i.ratio * j.ratio, f"{i.name}{COMPOSE_SEP}{j.name}")


def invert(i: JustInterval) -> JustInterval:
    """Octave complement of an interval no larger than an octave."""
    r = i.ratio
    if r.numerator < r.denominator or r.numerator > 2 * r.denominator:
        raise DomainError(f"inversion needs a ratio in [1, 2], got {r}")
    return from_ratio(Ratio(2) / r, f"inv({i.name})")


def is_inversion_pair(i: JustInterval, j: JustInterval) -> bool:
    return i.ratio * j.ratio == Ratio(2)
