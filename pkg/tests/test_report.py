import csv
import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from carlos_scales.builders import carlos2, custom_system, general_pair, pentatonic
from carlos_scales.errors import DomainError, SpecParseError
from carlos_scales.intervals import P4, P5
from carlos_scales.lsq import optimal_unit
from carlos_scales.report import (
    ScaleReport,
    export_scl,
    make_report,
    paper_table_reports,
    parse_scl,
    render_table,
)


def _twelve():
    return optimal_unit(custom_system([(12, "2/1")], "12TET"))


def test_report_fields():
    rep = make_report(optimal_unit(carlos2(8, 10)), (8, 10))
    assert rep.flags == {"gcd_trivial": True, "inversion_pair_warning": False}
    assert [r.interval for r in rep.residuals] == ["m3", "M3", "P5"]
    assert [r.steps for r in rep.residuals] == [8, 10, 18]
    assert rep.octave.nearest_steps == 31


def test_inversion_warning():
    rep = make_report(optimal_unit(general_pair(P4, 5, P5, 7)), (5, 7))
    assert rep.flags["inversion_pair_warning"]
    assert "inversion pair" in render_table([rep])


def test_json_schema_keys():
    d = make_report(optimal_unit(carlos2(4, 5)), (4, 5)).to_dict()
    assert set(d) == {"label", "params", "unit_cents", "residuals", "octave", "flags"}
    assert set(d["residuals"][0]) == {"interval", "steps", "cents_dev"}
    assert set(d["octave"]) == {"exact_units", "nearest_steps", "deviation_cents"}
    assert set(d["flags"]) == {"gcd_trivial", "inversion_pair_warning"}


@given(st.integers(1, 500), st.integers(1, 500))
def test_json_round_trip(a, b):
    if a == b:
        return
    a, b = min(a, b), max(a, b)
    rep = make_report(optimal_unit(carlos2(a, b)), (a, b))
    back = ScaleReport.from_json(rep.to_json())
    assert back == rep
    assert back.unit_cents == rep.unit_cents  # bitwise, not approximate


def test_render_json_round_trip():
    reps = paper_table_reports()
    data = json.loads(render_table(reps, "json"))
    assert [ScaleReport.from_dict(d) for d in data] == reps


def test_malformed_report():
    with pytest.raises(SpecParseError):
        ScaleReport.from_json('{"label": "x"}')


def test_render_table_layout():
    text = render_table(paper_table_reports())
    lines = text.splitlines()
    assert lines[0].split()[:6] == ["params", "unit", "size", "m3", "dev", "M3"]
    assert lines[2].startswith("(4,5)") and "77.965" in lines[2] and "alpha scale" in lines[2]
    assert "-3.781" in lines[2] and "+3.511" in lines[2] and "15.39" in lines[2]
    assert len(lines) == 2 + 9


def test_render_is_deterministic():
    assert render_table(paper_table_reports()) == render_table(paper_table_reports())


def test_render_twelve_tet():
    text = render_table([make_report(_twelve())])
    row = text.splitlines()[2]
    assert "100.000" in row and "+0.000" in row and "12.00" in row
    assert "-0.000" not in text


def test_render_csv_full_precision():
    rep = make_report(optimal_unit(carlos2(4, 5)), (4, 5))
    rows = list(csv.reader(io.StringIO(render_table([rep], "csv"))))
    assert rows[0][:4] == ["label", "params", "unit_cents", "m3_dev"]
    assert rows[1][0] == "(4,5)-Carlos"
    assert float(rows[1][2]) == rep.unit_cents


def test_render_mixed_columns():
    reps = [make_report(optimal_unit(carlos2(4, 5)), (4, 5)), make_report(optimal_unit(pentatonic(7, 11)), (7, 11))]
    header = render_table(reps).splitlines()[0]
    for col in ("m3 dev", "M3 dev", "P5 dev", "M2 dev"):
        assert col in header


def test_render_errors():
    with pytest.raises(DomainError):
        render_table([])
    with pytest.raises(DomainError):
        render_table(paper_table_reports(), "xml")


def test_scl_twelve_tet():
    text = export_scl(_twelve(), 12, "12 equal")
    lines = text.splitlines()
    assert lines[0] == "12 equal"
    assert lines[1].strip() == "12"
    pitches = [ln.strip() for ln in lines if not ln.startswith("!")][2:]
    assert pitches[0] == "100.00000" and pitches[-1] == "1200.00000"
    assert len(pitches) == 12


def test_scl_alpha_repeat_interval():
    text = export_scl(optimal_unit(carlos2(4, 5)), 15, "alpha", name="alpha.scl")
    assert text.startswith("! alpha.scl\n")
    assert text.endswith("\n") and "\r" not in text
    text.encode("ascii")
    scl = parse_scl(text)
    assert len(scl.pitches) == 15
    assert scl.pitches[-1] == pytest.approx(1169.47465, abs=5e-4)
    assert all(x < y for x, y in zip(scl.pitches, scl.pitches[1:]))
    assert all("." in ln for ln in text.splitlines()[5:])


def test_scl_14_17():
    scl = parse_scl(export_scl(optimal_unit(carlos2(14, 17)), 53))
    assert len(scl.pitches) == 53
    assert scl.pitches[-1] == pytest.approx(1200.26733, abs=2e-3)
    assert scl.description == "(14,17)-Carlos"


def test_scl_rejects_bad_steps():
    with pytest.raises(DomainError):
        export_scl(_twelve(), 0)


def test_parse_scl_ratios_and_errors():
    scl = parse_scl("! x\nJust fifth and octave\n 2\n!\n 3/2\n 2\n")
    assert scl.pitches == pytest.approx([701.955, 1200.0], abs=1e-3)
    with pytest.raises(SpecParseError):
        parse_scl("desc\n 3\n 100.0\n")
    with pytest.raises(SpecParseError):
        parse_scl("desc\n")
    with pytest.raises(SpecParseError):
        parse_scl("desc\n 1\n abc\n")
