"""Reports, tables and Scala .scl export."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

from carlos_scales import builders
from carlos_scales.analysis import OctaveFit, octave_fit
from carlos_scales.errors import DomainError, SpecParseError
from carlos_scales.intervals import is_inversion_pair
from carlos_scales.lsq import DerivedScale, optimal_unit

# (a, b) pairs of the published results table, in published order
PAPER_TABLE_PARAMS = (
    (4, 5), (5, 6), (9, 11), (13, 16), (14, 17), (17, 21), (19, 23), (21, 25), (21, 26),
)
SCALE_NAMES = {"(4,5)-Carlos": "alpha scale", "(5,6)-Carlos": "beta scale", "(9,11)-Carlos": "gamma scale"}


@dataclass(frozen=True)
class Residual:
    interval: str
    steps: int
    cents_dev: float


@dataclass(frozen=True)
class ScaleReport:
    label: str
    params: tuple[int, ...]
    unit_cents: float
    residuals: tuple[Residual, ...]
    octave: OctaveFit
    flags: dict = field(default_factory=dict, hash=False)

    @property
    def gcd_trivial(self) -> bool:
        return bool(self.flags.get("gcd_trivial", False))

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "params": list(self.params),
            "unit_cents": self.unit_cents,
            "residuals": [asdict(r) for r in self.residuals],
            "octave": asdict(self.octave),
            "flags": {
                "gcd_trivial": bool(self.flags.get("gcd_trivial", False)),
                "inversion_pair_warning": bool(self.flags.get("inversion_pair_warning", False)),
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScaleReport":
        try:
            return cls(
                label=d["label"],
                params=tuple(int(p) for p in d["params"]),
                unit_cents=float(d["unit_cents"]),
                residuals=tuple(
                    Residual(r["interval"], int(r["steps"]), float(r["cents_dev"])) for r in d["residuals"]
                ),
                octave=OctaveFit(
                    float(d["octave"]["exact_units"]),
                    int(d["octave"]["nearest_steps"]),
                    float(d["octave"]["deviation_cents"]),
                ),
                flags={
                    "gcd_trivial": bool(d["flags"]["gcd_trivial"]),
                    "inversion_pair_warning": bool(d["flags"]["inversion_pair_warning"]),
                },
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecParseError(f"malformed report: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ScaleReport":
        return cls.from_dict(json.loads(text))


def make_report(scale: DerivedScale, params: Sequence[int] = ()) -> ScaleReport:
    system = scale.system
    ivs = system.intervals
    inversion = any(is_inversion_pair(x, y) for i, x in enumerate(ivs) for y in ivs[i + 1:])
    return ScaleReport(
        label=system.label,
        params=tuple(params),
        unit_cents=scale.unit_cents,
        residuals=tuple(
            Residual(iv.name, k, r) for (k, iv), r in zip(system.targets, scale.residuals)
        ),
        octave=octave_fit(scale),
        flags={
            "gcd_trivial": len(params) > 1 and math.gcd(*params) > 1,
            "inversion_pair_warning": inversion,
        },
    )


def paper_table_reports() -> list[ScaleReport]:
    return [make_report(optimal_unit(builders.carlos2(a, b)), (a, b)) for a, b in PAPER_TABLE_PARAMS]


def _signed(v: float, places: int = 3) -> str:
    v = round(v, places)
    if v == 0:
        v = 0.0  # no "-0.000"
    return f"{v:+.{places}f}"


def _columns(reports: Sequence[ScaleReport]) -> list[str]:
    cols: list[str] = []
    for rep in reports:
        for r in rep.residuals:
            if r.interval not in cols:
                cols.append(r.interval)
    return cols


def _notes(rep: ScaleReport) -> str:
    notes = []
    if rep.label in SCALE_NAMES:
        notes.append(SCALE_NAMES[rep.label])
    if rep.flags.get("gcd_trivial"):
        notes.append("gcd-trivial")
    if rep.flags.get("inversion_pair_warning"):
        notes.append("inversion pair")
    return "; ".join(notes)


def _params_text(rep: ScaleReport) -> str:
    return "(" + ",".join(map(str, rep.params)) + ")" if rep.params else rep.label


def render_table(reports: Sequence[ScaleReport], format: str = "table") -> str:
    """Render reports as an aligned text table, CSV or JSON.

    The text table rounds to 3 places (2 for units per octave); CSV and
    JSON keep full double precision.
    """
    if not reports:
        raise DomainError("nothing to render")
    if format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    cols = _columns(reports)
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            ["label", "params", "unit_cents"]
            + [f"{c}_dev" for c in cols]
            + ["units_per_octave", "octave_steps", "octave_dev", "gcd_trivial", "inversion_pair_warning"]
        )
        for rep in reports:
            devs = {r.interval: r.cents_dev for r in rep.residuals}
            w.writerow(
                [rep.label, " ".join(map(str, rep.params)), repr(rep.unit_cents)]
                + [repr(devs[c]) if c in devs else "" for c in cols]
                + [
                    repr(rep.octave.exact_units),
                    rep.octave.nearest_steps,
                    repr(rep.octave.deviation_cents),
                    int(rep.gcd_trivial),
                    int(bool(rep.flags.get("inversion_pair_warning"))),
                ]
            )
        return buf.getvalue()
    if format != "table":
        raise DomainError(f"unknown format {format!r}")

    header = ["params", "unit size"] + [f"{c} dev" for c in cols] + ["units/oct", "oct steps", "oct dev", "notes"]
    rows = []
    for rep in reports:
        devs = {r.interval: r.cents_dev for r in rep.residuals}
        rows.append(
            [_params_text(rep), f"{rep.unit_cents:.3f}"]
            + [_signed(devs[c]) if c in devs else "" for c in cols]
            + [
                f"{rep.octave.exact_units:.2f}",
                str(rep.octave.nearest_steps),
                _signed(rep.octave.deviation_cents),
                _notes(rep),
            ]
        )
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    lines = []
    for n, row in enumerate([header] + rows):
        cells = [row[0].ljust(widths[0])]
        cells += [c.rjust(w) for c, w in zip(row[1:-1], widths[1:-1])]
        cells.append(row[-1].ljust(widths[-1]))
        lines.append("  ".join(cells).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def export_scl(scale: DerivedScale, steps: int, description: str = "", name: str | None = None) -> str:
    """Scala scale file with ``steps`` equal units.

    The last degree (the repeat interval) is ``steps`` units, which for
    these scales is generally not a 2:1 octave.
    """
    if not isinstance(steps, int) or steps < 1:
        raise DomainError(f"steps must be a positive integer, got {steps!r}")
    description = " ".join((description or scale.system.label or "equal-step scale").split())
    lines = []
    if name:
        lines.append(f"! {name}")
        lines.append("!")
    lines.append(description)
    lines.append(f" {steps}")
    lines.append("!")
    for k in range(1, steps + 1):
        lines.append(f" {k * scale.unit_cents:.5f}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SclFile:
    description: str
    pitches: tuple[float, ...]  # cents


def parse_scl(text: str) -> SclFile:
    """Read a Scala file; ratio pitch lines are converted to cents."""
    body = [ln.strip() for ln in text.splitlines() if not ln.lstrip().startswith("!")]
    if len(body) < 2:
        raise SpecParseError("scl file needs a description and a note count")
    description = body[0]
    try:
        count = int(body[1].split()[0])
    except (ValueError, IndexError):
        raise SpecParseError(f"bad note count {body[1]!r}", body[1]) from None
    pitches = []
    for ln in body[2:2 + count]:
        tok = ln.split()[0] if ln.split() else ""
        try:
            if "." in tok:
                pitches.append(float(tok))
            else:
                num, _, den = tok.partition("/")
                pitches.append(1200.0 * math.log2(int(num) / int(den or 1)))
        except ValueError:
            raise SpecParseError(f"bad pitch line {ln!r}", ln) from None
    if len(pitches) != count:
        raise SpecParseError(f"expected {count} pitches, found {len(pitches)}")
    return SclFile(description, tuple(pitches))
