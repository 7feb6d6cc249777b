"""Symbolic certificates behind the ratio monotonicity and contraction facts.

Write the stage ratios as r_j = w + gap_{j+1} + ... + gap_d, where w is the
innermost ratio r_d and gap_j = r_{j-1} - r_j are the consecutive gaps.  In
terms of the reduced ratio-form polynomials R_0..R_{d+1} (recursion images
with the forced w-power divided out), the stage-to-stage facts become
polynomial identities in (w, gaps):

  * w ascends:      R_d - R_{d+1}         has only nonnegative coefficients,
  * r_0 descends:   r_0 R_1 - w R_0       has only nonnegative coefficients,
  * quadratic gap contraction: R_j R_{j+2} - R_{j+1}^2 has every monomial of
    total gap-degree >= 2 (this is what squares the outer gap each stage).

All three vanish at zero gaps (equal ratios are a fixed point).  The gap
substitution is performed one ratio at a time -- each binding is the
two-term sum r_j = r_{j+1} + gap_{j+1} -- which keeps intermediate
expansions merged; a term budget aborts oversized runs ("not attempted")
rather than reporting partial results.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .multipoly import Polynomial, serialize, substitute
from .recursion_gen import (
    RecursionSystem,
    generate,
    ratio_varset,
    reduced_ratio_form,
)

DEFAULT_TERM_BUDGET = 10**7


def gap_varset(d: int) -> tuple[str, ...]:
    return ("w",) + tuple(f"gap{j}" for j in range(1, d + 1))


def gap_expansion(poly: Polynomial, d: int,
                  term_budget: int = DEFAULT_TERM_BUDGET) -> Polynomial:
    """Rewrite a ratio-basis polynomial over (w, gap1..gapd).

    Exact substitution, no numerics.  Raises CapExceeded when an
    intermediate or final expansion would exceed the term budget.
    """
    current = poly
    for j in range(d):
        rj, rnext, gap = f"r{j}", f"r{j + 1}", f"gap{j + 1}"
        pair = (rnext, gap)
        binding = Polynomial(pair, {(1, 0): 1, (0, 1): 1})
        index = current.varset.index(rj) if rj in current.varset else None
        if index is not None:
            outgrowth = sum(exps[index] + 1 for exps, _ in current.terms())
            if outgrowth > term_budget:
                raise CapExceeded(
                    f"gap expansion would pass {outgrowth} raw terms, above "
                    f"the budget of {term_budget}; raise it with --term-budget"
                )
            current = substitute(current, {rj: binding})
        if current.term_count() > term_budget:
            raise CapExceeded(
                f"gap expansion reached {current.term_count()} terms, above "
                f"the budget of {term_budget}; raise it with --term-budget"
            )
    w = Polynomial(("w",), {(1,): 1})
    if f"r{d}" in current.varset:
        current = substitute(current, {f"r{d}": w})
    return current.with_varset(gap_varset(d))


def w_power_coefficient(poly: Polynomial, power: int) -> Polynomial:
    """The coefficient of w^power, as a polynomial in the gap variables."""
    gaps = poly.varset[1:]
    assert poly.varset[0] == "w"
    terms = {}
    for exps, coeff in poly.terms():
        if exps[0] == power:
            terms[exps[1:]] = coeff
    return Polynomial(gaps, terms)


def gap_degree(exps: tuple[int, ...]) -> int:
    # exponent layout (w, gap1..gapd)
    return sum(exps[1:])


@dataclass(frozen=True)
class CertificateReport:
    name: str
    d: int
    attempted: bool
    passed: bool | None
    term_count: int
    offending_monomial: str | None
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.attempted and bool(self.passed)


def _monomial_str(poly: Polynomial, exps: tuple[int, ...]) -> str:
    single = Polynomial(poly.varset, {exps: poly.coefficient(
        dict(zip(poly.varset, exps)))})
    return serialize(single)


def _not_attempted(name: str, d: int, reason: str) -> CertificateReport:
    return CertificateReport(
        name=name, d=d, attempted=False, passed=None, term_count=0,
        offending_monomial=None, notes=(f"not attempted: {reason}",),
    )


def _nonnegativity_certificate(name: str, d: int, numerator: Polynomial,
                               term_budget: int) -> CertificateReport:
    try:
        expanded = gap_expansion(numerator, d, term_budget)
    except CapExceeded as err:
        return _not_attempted(name, d, str(err))
    notes = []
    offending = None
    passed = True
    for exps, coeff in expanded.terms():
        if coeff < 0:
            offending = _monomial_str(expanded, exps)
            passed = False
            notes.append(f"negative coefficient on {offending}")
            break
        if gap_degree(exps) == 0:
            offending = _monomial_str(expanded, exps)
            passed = False
            notes.append(
                f"gap-free monomial {offending}: no fixed point at equal ratios"
            )
            break
    return CertificateReport(
        name=name, d=d, attempted=True, passed=passed,
        term_count=expanded.term_count(), offending_monomial=offending,
        notes=tuple(notes),
    )


def omega_ascending_certificate(
    d: int, system: RecursionSystem | None = None,
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> CertificateReport:
    """r_d grows every stage: R_d - R_{d+1} >= 0 coefficientwise in (w, gaps)."""
    reduced = reduced_ratio_form(system or generate(d))
    return _nonnegativity_certificate(
        "omega-ascending", d, reduced[d] - reduced[d + 1], term_budget
    )


def alpha_descending_certificate(
    d: int, system: RecursionSystem | None = None,
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> CertificateReport:
    """r_0 shrinks every stage: r_0 R_1 - w R_0 >= 0 coefficientwise.

    r_0(n) - r_0(n+1) equals that numerator over the positive R_1, so
    nonnegative coefficients prove the descent.
    """
    reduced = reduced_ratio_form(system or generate(d))
    rvars = ratio_varset(d)
    r0 = Polynomial.variable(rvars, "r0")
    rd = Polynomial.variable(rvars, f"r{d}")
    numerator = r0 * reduced[1] - rd * reduced[0]
    return _nonnegativity_certificate("alpha-descending", d, numerator, term_budget)


def quadratic_contraction_certificate(
    d: int, system: RecursionSystem | None = None,
    term_budget: int = DEFAULT_TERM_BUDGET,
) -> CertificateReport:
    """Adjacent ratio gaps contract quadratically.

    For each pair j, the numerator of r_j(n+1) - r_{j+1}(n+1) is
    R_j R_{j+2} - R_{j+1}^2; every monomial carrying gap-degree >= 2 is
    exactly what bounds the new gap by (old outer gap)^2 times positive
    factors.
    """
    reduced = reduced_ratio_form(system or generate(d))
    name = "quadratic-contraction"
    notes = []
    total_terms = 0
    for j in range(d):
        numerator = reduced[j] * reduced[j + 2] - reduced[j + 1] ** 2
        try:
            expanded = gap_expansion(numerator, d, term_budget)
        except CapExceeded as err:
            return _not_attempted(name, d, str(err))
        total_terms += expanded.term_count()
        for exps, _coeff in expanded.terms():
            if gap_degree(exps) < 2:
                offending = _monomial_str(expanded, exps)
                return CertificateReport(
                    name=name, d=d, attempted=True, passed=False,
                    term_count=total_terms, offending_monomial=offending,
                    notes=(f"pair {j}: monomial {offending} has gap-degree < 2",),
                )
        notes.append(f"pair {j}: {expanded.term_count()} terms, all gap-degree >= 2")
    return CertificateReport(
        name=name, d=d, attempted=True, passed=True, term_count=total_terms,
        offending_monomial=None, notes=tuple(notes),
    )


CERTIFICATES = {
    "omega": omega_ascending_certificate,
    "alpha": alpha_descending_certificate,
    "contraction": quadratic_contraction_certificate,
}


def run_certificates(d: int, which: str = "all",
                     term_budget: int = DEFAULT_TERM_BUDGET,
                     system: RecursionSystem | None = None) -> list[CertificateReport]:
    if which == "all":
        names = list(CERTIFICATES)
    elif which in CERTIFICATES:
        names = [which]
    else:
        raise ValueError(f"unknown certificate {which!r}; "
                         f"pick from {', '.join(CERTIFICATES)} or all")
    system = system or generate(d)
    return [CERTIFICATES[name](d, system, term_budget) for name in names]
