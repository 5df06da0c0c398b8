import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from carlos_scales.builders import carlos2, carlos3, general_pair
from carlos_scales.errors import BracketError, DomainError
from carlos_scales.intervals import P4, P5, P8, Ratio, builtin_intervals, log2_ratio, parse_interval
from carlos_scales.lsq import TargetSystem, numeric_minimize, objective, optimal_unit
from carlos_scales.oracle import ORACLE_BRACKET

TARGET_POOL = [iv for iv in builtin_intervals() if iv.ratio != Ratio(1)]

systems = st.lists(
    st.tuples(st.integers(1, 100), st.sampled_from(TARGET_POOL)), min_size=1, max_size=6
).map(TargetSystem)


def test_system_validation():
    with pytest.raises(DomainError):
        TargetSystem([])
    with pytest.raises(DomainError):
        TargetSystem([(0, P5)])
    with pytest.raises(DomainError):
        TargetSystem([(3, parse_interval("1/1"))])


def test_objective_single_exact_target():
    sys1 = TargetSystem([(1, P5)])
    assert objective(sys1, log2_ratio(Ratio(3, 2))) == 0.0


def test_objective_term_by_term():
    x = 0.06497082
    terms = [(4 * x - math.log2(6 / 5)) ** 2, (5 * x - math.log2(5 / 4)) ** 2, (9 * x - math.log2(3 / 2)) ** 2]
    assert objective(carlos2(4, 5), x) == pytest.approx(sum(terms), rel=1e-12)
    # frozen from a 40-digit mpmath evaluation
    assert objective(carlos2(4, 5), x) == pytest.approx(1.854177927867844e-05, rel=1e-9)


def test_objective_minimal_at_closed_form():
    system = carlos2(4, 5)
    x0 = optimal_unit(system).unit_log2
    assert objective(system, x0) <= objective(system, x0 + 0.001)
    assert objective(system, x0) <= objective(system, x0 - 0.001)


def test_objective_requires_positive_x():
    with pytest.raises(DomainError):
        objective(carlos2(4, 5), 0.0)


def test_alpha_unit():
    s = optimal_unit(carlos2(4, 5))
    assert s.unit_cents == pytest.approx(77.965, abs=1e-3)
    # mpmath reference, 40 digits
    assert s.unit_cents == pytest.approx(77.96498955012189548, abs=1e-11)
    assert s.residuals == pytest.approx([-3.781328800065018, 3.511233885774660, -0.270094914290358], abs=1e-9)


def test_twelve_tet():
    s = optimal_unit(TargetSystem([(12, P8)]))
    assert s.unit_log2 == pytest.approx(1 / 12, rel=1e-15)
    assert s.residuals[0] == pytest.approx(0.0, abs=1e-9)


def test_gamma_unit():
    assert optimal_unit(carlos2(9, 11)).unit_cents == pytest.approx(35.099, abs=1e-3)


def test_p4_p5_pair():
    s = optimal_unit(general_pair(P4, 5, P5, 7))
    assert s.unit_log2 == pytest.approx((15 + 2 * math.log2(3)) / 218, abs=1e-12)
    assert s.unit_log2 == pytest.approx(0.0833483, abs=1e-6)


def test_residual_definition():
    s = optimal_unit(carlos2(13, 16))
    for (k, iv), r in zip(s.system.targets, s.residuals):
        assert r == k * s.unit_cents - iv.cents


def test_duplicate_targets_count_twice():
    once = optimal_unit(TargetSystem([(4, P5), (7, P8)]))
    twice = optimal_unit(TargetSystem([(4, P5), (4, P5), (7, P8)]))
    expected = (2 * 4 * log2_ratio(Ratio(3, 2)) + 7) / (2 * 16 + 49)
    assert twice.unit_log2 == pytest.approx(expected, rel=1e-15)
    assert twice.unit_log2 != once.unit_log2


def test_numeric_minimize_examples():
    alpha = carlos2(4, 5)
    assert abs(numeric_minimize(alpha, (1e-4, 0.5), 1e-12) - optimal_unit(alpha).unit_log2) < 1e-10
    assert numeric_minimize(TargetSystem([(1, P8)]), (0.5, 2.0), 1e-12) == pytest.approx(1.0, abs=1e-12)
    delta = carlos3(23, 28, 50)
    assert abs(numeric_minimize(delta, (1e-4, 0.5), 1e-12) - optimal_unit(delta).unit_log2) < 1e-10


def test_numeric_minimize_bracket_errors():
    alpha = carlos2(4, 5)  # minimizer near 0.065
    with pytest.raises(BracketError):
        numeric_minimize(alpha, (0.1, 0.5), 1e-12)
    with pytest.raises(BracketError):
        numeric_minimize(alpha, (1e-4, 0.03), 1e-12)
    with pytest.raises(DomainError):
        numeric_minimize(alpha, (0.5, 0.1), 1e-12)


@settings(max_examples=300, deadline=None)
@given(systems)
def test_oracle_agrees_with_closed_form(system):
    x = numeric_minimize(system, ORACLE_BRACKET, 1e-12)
    assert abs(x - optimal_unit(system).unit_log2) < 1e-10


@given(systems)
def test_stationarity(system):
    s = optimal_unit(system)
    total = 0.0
    for k, iv in system.targets:
        total += k * (k * s.unit_log2 - iv.log2)
    assert abs(total) < 1e-12
    weighted = sum(k * r for k, r in zip(system.steps, s.residuals))
    assert abs(weighted) < 1e-9


@given(systems, st.lists(st.floats(-0.01, 0.01), min_size=1, max_size=20))
def test_minimality(system, deltas):
    x0 = optimal_unit(system).unit_log2
    g0 = objective(system, x0)
    for d in deltas:
        if x0 + d > 0:
            assert objective(system, x0 + d) >= g0 - 1e-15 * max(1.0, g0)


@given(systems, st.integers(2, 50))
def test_scaling_by_common_factor(system, g):
    scaled = TargetSystem([(k * g, iv) for k, iv in system.targets])
    u = optimal_unit(system).unit_log2
    assert abs(optimal_unit(scaled).unit_log2 - u / g) <= 1e-15 * (u / g)


@given(st.integers(1, 200), st.integers(1, 200))
def test_deviation_additivity(a, b):
    assume(a < b)
    s = optimal_unit(carlos2(a, b))
    ra, rb, rab = s.residuals
    assert abs(ra + rb - rab) < 1e-9


def test_random_systems_deterministic():
    from carlos_scales.oracle import random_system

    assert random_system(random.Random(7)) == random_system(random.Random(7))
