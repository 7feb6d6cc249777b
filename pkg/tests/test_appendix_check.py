"""Monotonicity and contraction certificates, with printed spot blocks."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hanoi_dimer.appendix_check import (
    alpha_descending_certificate,
    gap_expansion,
    gap_varset,
    omega_ascending_certificate,
    quadratic_contraction_certificate,
    run_certificates,
    w_power_coefficient,
)
from hanoi_dimer.multipoly import Polynomial, serialize
from hanoi_dimer.recursion_gen import generate, ratio_varset, reduced_ratio_form

from .helpers import parse_classic

GAPS_D3 = ("gap1", "gap2", "gap3")


def classic_gaps(text: str) -> Polynomial:
    # classic a, b, c stand for the consecutive ratio gaps
    return parse_classic(text, "abc", GAPS_D3)


@pytest.fixture(scope="module")
def reduced_d3(systems):
    return reduced_ratio_form(systems(3))


@pytest.fixture(scope="module")
def ascent_expansion_d3(reduced_d3):
    return gap_expansion(reduced_d3[3] - reduced_d3[4], 3)


# -- omega ascent -----------------------------------------------------------------


def test_omega_certificate_passes_d3(systems):
    report = omega_ascending_certificate(3, systems(3))
    assert report.ok
    assert report.offending_monomial is None


def test_ascent_expansion_w11_block(ascent_expansion_d3):
    block = w_power_coefficient(ascent_expansion_d3, 11)
    assert block == classic_gaps("64a+64b+64c")


def test_ascent_expansion_w10_block(ascent_expansion_d3):
    block = w_power_coefficient(ascent_expansion_d3, 10)
    assert block == classic_gaps(
        "256ab+768bc+384b+512c^2+384c+256b^2+288a+512ac"
    )


def test_ascent_expansion_w1_block(ascent_expansion_d3):
    block = w_power_coefficient(ascent_expansion_d3, 1)
    assert block == classic_gaps(
        "18b^2c^3+30b^2c^2+15ac^3+12ac^2+18bc^4+12abc+68c^2+33c+36bc+6c^5"
        "+b^2+30c^4+3b+75bc^2+12abc^3+2ac+ab+60bc^3+6ab^2c^2+15abc^2"
        "+6b^3c^2+63c^3+6ac^4+12b^2c"
    )


def test_ascent_expansion_constant_block(ascent_expansion_d3):
    block = w_power_coefficient(ascent_expansion_d3, 0)
    assert block == classic_gaps("2bc^2+ac^2+b^2c+3c+3bc+abc+3c^2+c^3")


def test_ascent_expansion_tops_out_at_w11(ascent_expansion_d3):
    assert max(exps[0] for exps, _ in ascent_expansion_d3.terms()) == 11


def test_ascent_vanishes_at_zero_gaps(ascent_expansion_d3):
    # equal ratios are a fixed point
    from hanoi_dimer.multipoly import evaluate_int

    point = {"w": 7, "gap1": 0, "gap2": 0, "gap3": 0}
    assert evaluate_int(ascent_expansion_d3, point) == 0


# -- alpha descent -----------------------------------------------------------------


@pytest.mark.parametrize("d", [2, 3])
def test_alpha_certificate_passes(systems, d):
    report = alpha_descending_certificate(d, systems(d))
    assert report.ok


def test_alpha_numerator_numeric_validation(systems, reduced_d3):
    """Evaluate the expanded certificate against the direct numerator at
    random rational points with small positive gaps."""
    rvars = ratio_varset(3)
    r0 = Polynomial.variable(rvars, "r0")
    r3 = Polynomial.variable(rvars, "r3")
    numerator = r0 * reduced_d3[1] - r3 * reduced_d3[0]
    expanded = gap_expansion(numerator, 3)

    def eval_fraction(poly, point):
        total = Fraction(0)
        for exps, coeff in poly.terms():
            term = Fraction(coeff)
            for name, e in zip(poly.varset, exps):
                term *= point[name] ** e
            total += term
        return total

    rng = random.Random(20240811)
    for _ in range(100):
        w = Fraction(rng.randint(1, 999), 1000)
        gaps = [Fraction(rng.randint(0, 50), 10000) for _ in range(3)]
        gap_point = {"w": w, "gap1": gaps[0], "gap2": gaps[1], "gap3": gaps[2]}
        r_point = {
            "r0": w + gaps[0] + gaps[1] + gaps[2],
            "r1": w + gaps[1] + gaps[2],
            "r2": w + gaps[2],
            "r3": w,
        }
        direct = eval_fraction(numerator, r_point)
        via_gaps = eval_fraction(expanded, gap_point)
        assert direct == via_gaps
        assert via_gaps >= 0


# -- contraction --------------------------------------------------------------------


@pytest.mark.parametrize("d", [2, 3])
def test_contraction_certificate_passes(systems, d):
    report = quadratic_contraction_certificate(d, systems(d))
    assert report.ok
    assert report.offending_monomial is None


@pytest.fixture(scope="module")
def contraction_pair0_d3(reduced_d3):
    numerator = reduced_d3[0] * reduced_d3[2] - reduced_d3[1] ** 2
    return gap_expansion(numerator, 3)


def test_contraction_leading_term(contraction_pair0_d3):
    # highest w-power block of R0 R2 - R1^2
    assert max(exps[0] for exps, _ in contraction_pair0_d3.terms()) == 20
    block = w_power_coefficient(contraction_pair0_d3, 20)
    assert serialize(block) == "1024*gap1^2"


def test_contraction_w19_block(contraction_pair0_d3):
    block = w_power_coefficient(contraction_pair0_d3, 19)
    assert block == classic_gaps("4096a^3+8192a^2+10240a^2b+18432a^2c+2048ab")


def test_contraction_no_low_gap_degree_terms(contraction_pair0_d3):
    for exps, _ in contraction_pair0_d3.terms():
        assert sum(exps[1:]) >= 2


def test_contraction_vanishes_at_zero_gaps(contraction_pair0_d3):
    from hanoi_dimer.multipoly import evaluate_int

    assert evaluate_int(
        contraction_pair0_d3, {"w": 3, "gap1": 0, "gap2": 0, "gap3": 0}
    ) == 0


# -- machinery -----------------------------------------------------------------------


def test_gap_varset_layout():
    assert gap_varset(3) == ("w", "gap1", "gap2", "gap3")


def test_gap_expansion_budget_reports_not_attempted(systems):
    reports = run_certificates(3, "contraction", term_budget=100,
                               system=systems(3))
    (report,) = reports
    assert not report.attempted
    assert report.passed is None
    assert not report.ok
    assert any("not attempted" in note for note in report.notes)


def test_run_certificates_selects(systems):
    names = [r.name for r in run_certificates(2, "all", system=systems(2))]
    assert names == ["omega-ascending", "alpha-descending", "quadratic-contraction"]
    (only,) = run_certificates(2, "omega", system=systems(2))
    assert only.name == "omega-ascending"
    with pytest.raises(ValueError):
        run_certificates(2, "bogus", system=systems(2))


def test_certificates_imply_numeric_monotonicity(systems, trajectories):
    """The symbolic facts and the numeric stage data must tell one story."""
    from hanoi_dimer.evolve import check_contraction, ratios

    for d in (2, 3):
        numeric = check_contraction(ratios(trajectories(d, 4)))
        symbolic = run_certificates(d, "all", system=systems(d))
        assert numeric.ok and all(r.ok for r in symbolic)
