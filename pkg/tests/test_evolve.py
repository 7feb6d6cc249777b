"""Exact evolution, ratio traces, ordering and contraction checks."""

from __future__ import annotations

from fractions import Fraction

import pytest

from hanoi_dimer import reference_values as ref
from hanoi_dimer.errors import CapExceeded, IntegrityError
from hanoi_dimer.evolve import (
    BoundaryClassVector,
    check_contraction,
    eps_ratio_table_value,
    evolve_to,
    initial_vector,
    ratios,
    render_decimal,
    step,
)


def test_initial_vectors_match_reference():
    assert initial_vector(3).counts == ref.CLASS_COUNTS_D3[0]
    assert initial_vector(3).m == 10
    assert initial_vector(4).counts == ref.CLASS_COUNTS_D4[0]
    assert initial_vector(4).m == 26
    assert initial_vector(2).counts == ref.CLASS_COUNTS_D2[0]


def test_step_d3_reproduces_stage_one(systems):
    v1 = step(systems(3), initial_vector(3))
    assert v1.counts == ref.CLASS_COUNTS_D3[1]
    assert v1.m == ref.TOTALS_D3[1]


def test_two_steps_d3_reproduce_stage_two(systems):
    v = initial_vector(3)
    for _ in range(2):
        v = step(systems(3), v)
    assert v.counts == ref.CLASS_COUNTS_D3[2]
    assert v.counts[0] == 49464202269253193
    assert v.m == ref.TOTALS_D3[2]


def test_step_d4_reproduces_stage_one(systems):
    v1 = step(systems(4), initial_vector(4))
    assert v1.m == 48645865
    assert v1.counts[5] == 3779500
    assert v1.counts == ref.CLASS_COUNTS_D4[1]


def test_evolve_d4_stage_two(systems):
    stages = evolve_to(systems(4), 2)
    assert stages[2].counts[0] == 12567379442065248794102222711306394841
    assert stages[2].counts == ref.CLASS_COUNTS_D4[2]
    assert stages[2].m == ref.TOTALS_D4[2]


def test_evolve_to_zero_returns_initial(systems):
    stages = evolve_to(systems(3), 0)
    assert stages == [initial_vector(3)]


def test_evolve_d2_matches_frozen_oracle_counts(systems):
    stages = evolve_to(systems(2), 2)
    for n in (0, 1, 2):
        assert stages[n].counts == ref.CLASS_COUNTS_D2[n]
        assert stages[n].m == ref.TOTALS_D2[n]


def test_digit_guard_aborts_with_prediction(systems):
    with pytest.raises(CapExceeded) as err:
        evolve_to(systems(3), 30)
    assert "predict" in str(err.value)


def test_vector_integrity_total_mismatch():
    with pytest.raises(IntegrityError):
        BoundaryClassVector(d=3, n=1, counts=(1, 2, 3, 4, 5), m=999)


def test_vector_integrity_monotonicity():
    # ascending demanded for d=3
    good = (1010, 1242, 1556, 1983, 2571)
    bad = (1242, 1010, 1556, 1983, 2571)
    total = sum(
        __import__("math").comb(4, k) * c for k, c in enumerate(bad)
    )
    with pytest.raises(IntegrityError):
        BoundaryClassVector(d=3, n=1, counts=bad, m=total)
    BoundaryClassVector(
        d=3, n=1, counts=good,
        m=sum(__import__("math").comb(4, k) * c for k, c in enumerate(good)),
    )


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_strict_class_monotonicity_every_stage(systems, d):
    n_max = 2 if d >= 6 else 3
    for v in evolve_to(systems(d), n_max)[1:]:
        pairs = list(zip(v.counts, v.counts[1:]))
        if d == 2:
            assert all(a > b for a, b in pairs)
        else:
            assert all(a < b for a, b in pairs)


def test_rerunning_is_bit_identical(systems):
    a = evolve_to(systems(3), 3)
    b = evolve_to(systems(3), 3)
    assert a == b


# -- ratios ---------------------------------------------------------------------


def test_ratio_trace_matches_reference_table_d3(trajectories):
    trace = ratios(trajectories(3, 4))
    for n, row in ref.RATIOS_D3.items():
        got = tuple(render_decimal(trace.ratio(n, j), 15) for j in range(4))
        assert got == row


def test_ratio_trace_matches_reference_table_d4(trajectories):
    trace = ratios(trajectories(4, 4))
    for n, row in ref.RATIOS_D4.items():
        got = tuple(render_decimal(trace.ratio(n, j), 14) for j in range(5))
        assert got == row


def test_ratio_requires_stage_one():
    with pytest.raises(ValueError):
        ratios([initial_vector(3)])
    with pytest.raises(ZeroDivisionError):
        initial_vector(3).ratio(0)


def test_eps_ratio_table_rendering(trajectories):
    trace = ratios(trajectories(3, 5))
    for n, expected in ref.EPS_RATIO_TABLE_D3.items():
        assert eps_ratio_table_value(trace, n) == expected


def test_eps_ratio_converges(trajectories):
    trace = ratios(trajectories(3, 5))
    limit = Fraction(
        int(ref.EPS_RATIO_LIMIT_D3.replace("0.", "")), 10**14
    ) / 10
    assert abs(trace.eps_ratio(4) - limit) < Fraction(1, 10**10)


def test_render_decimal_half_even_ties():
    assert render_decimal(Fraction(1, 8), 2) == "0.12"  # 0.125 -> even 2
    assert render_decimal(Fraction(3, 8), 2) == "0.38"  # 0.375 -> even 8
    assert render_decimal(Fraction(1, 8), 3) == "0.125"
    assert render_decimal(Fraction(7, 5), 1, mode="floor") == "1.4"
    assert render_decimal(Fraction(999, 1000), 2, mode="floor") == "0.99"


# -- contraction report -----------------------------------------------------------


def test_contraction_report_d3(trajectories):
    trace = ratios(trajectories(3, 5))
    report = check_contraction(trace)
    assert report.ok
    assert report.chain_violations == ()
    assert report.alpha_strictly_decreasing
    assert report.omega_strictly_increasing
    assert report.eps_contraction_ok
    assert report.limit_digits.startswith("0.7929391056976813")
    assert report.limit_digits.startswith(ref.RATIO_LIMIT_DIGITS[3])


def test_contraction_report_d4(trajectories):
    trace = ratios(trajectories(4, 5))
    report = check_contraction(trace)
    assert report.ok
    assert report.limit_digits.startswith("0.6698857500417478")
    assert report.limit_digits.startswith(ref.RATIO_LIMIT_DIGITS[4])


def test_contraction_report_d2_tolerates_stage_one_inversion(trajectories):
    trace = ratios(trajectories(2, 5))
    report = check_contraction(trace)
    assert report.ok
    assert report.chain_ok_from == 2
    assert all(stage == 1 for stage, _ in report.chain_violations)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_ratio_range_by_dimension(trajectories, d):
    trace = ratios(trajectories(d, 3))
    for row in trace.ratios:
        if d == 2:
            assert all(r > 1 for r in row)
        else:
            assert all(0 < r < 1 for r in row)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_eps_quadratic_contraction(trajectories, d):
    trace = ratios(trajectories(d, 4))
    for n in (1, 2, 3):
        assert trace.eps(n + 1) < 3 * trace.eps(n) ** 2
