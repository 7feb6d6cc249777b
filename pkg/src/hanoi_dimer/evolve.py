"""Exact evolution of boundary-class vectors and their ratio sequences.

Counts are exact big integers at every stage; ratios are exact rationals and
are only rendered to decimals on output.  Stage-0 vectors are the matching
counts of K_{d+1} with the corner constraints applied: c_k(0) is the number
of perfect matchings on the k dimer-forced corners, (k-1)!! for even k and 0
for odd k.

Class counts are strictly monotone in k from stage 1 on: increasing for
d >= 3, decreasing for d = 2 (the three-corner system is top-heavy, which
the brute-force oracle confirms).  The consecutive ratios r_j = c_j/c_{j+1}
share a common limit; r_0 decreases and r_d increases toward it, and their
gap contracts quadratically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import CapExceeded, IntegrityError
from .intutil import digit_count
from .multipoly import evaluate_int
from .recursion_gen import RecursionSystem

DEFAULT_DIGIT_CAP = 10**7


@dataclass(frozen=True)
class BoundaryClassVector:
    """Exact matching counts of TH_d(n), classified by dimer-covered corners.

    counts[k] = matchings with a fixed k-subset of corners dimer-covered and
    the rest monomer-covered; m = unconstrained total.
    """

    d: int
    n: int
    counts: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.counts) != self.d + 2:
            raise IntegrityError(
                f"class vector for d={self.d} needs {self.d + 2} counts, "
                f"got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise IntegrityError("negative class count")
        total = sum(comb(self.d + 1, k) * c for k, c in enumerate(self.counts))
        if total != self.m:
            raise IntegrityError(
                f"total {self.m} differs from binomial-weighted class sum {total}"
            )
        if self.n >= 1:
            pairs = zip(self.counts, self.counts[1:])
            if self.d == 2:
                ok = all(a > b for a, b in pairs)
            else:
                ok = all(a < b for a, b in pairs)
            if not ok:
                raise IntegrityError(
                    f"class counts at stage {self.n} are not strictly monotone"
                )

    def ratio(self, j: int) -> Fraction:
        """Consecutive-class ratio r_j = c_j / c_{j+1}."""
        if self.counts[j + 1] == 0:
            raise ZeroDivisionError(
                f"ratio r{j} undefined at stage {self.n} (zero denominator; "
                "class ratios start at stage 1)"
            )
        return Fraction(self.counts[j], self.counts[j + 1])


def _double_factorial_matchings(k: int) -> int:
    # perfect matchings of K_k
    if k % 2:
        return 0
    out = 1
    for i in range(k - 1, 0, -2):
        out *= i
    return out


def initial_vector(d: int) -> BoundaryClassVector:
    counts = tuple(_double_factorial_matchings(k) for k in range(d + 2))
    m = sum(comb(d + 1, k) * c for k, c in enumerate(counts))
    return BoundaryClassVector(d=d, n=0, counts=counts, m=m)


def step(sys: RecursionSystem, v: BoundaryClassVector) -> BoundaryClassVector:
    """Advance one stage; all invariants are re-checked on the result."""
    if v.d != sys.d:
        raise ValueError(f"vector dimension {v.d} does not match system {sys.d}")
    point = {f"c{k}": c for k, c in enumerate(v.counts)}
    counts = tuple(evaluate_int(p, point) for p in sys.class_polys)
    m = evaluate_int(sys.m_poly, point)
    return BoundaryClassVector(d=v.d, n=v.n + 1, counts=counts, m=m)


def evolve_to(sys: RecursionSystem, n_max: int,
              digit_cap: int = DEFAULT_DIGIT_CAP) -> list[BoundaryClassVector]:
    """Stages 0..n_max inclusive, guarded against runaway digit growth."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    v = initial_vector(sys.d)
    out = [v]
    while v.n < n_max:
        digits_now = digit_count(max(v.counts))
        predicted = digits_now * (sys.d + 1) ** (n_max - v.n)
        if predicted > digit_cap:
            raise CapExceeded(
                f"evolving d={sys.d} to stage {n_max} predicts ~{predicted} digit "
                f"counts, above the cap of {digit_cap}; raise it with --digit-cap"
            )
        v = step(sys, v)
        out.append(v)
    return out


@dataclass(frozen=True)
class RatioTrace:
    """Exact consecutive-class ratios per stage, from stage 1 on."""

    d: int
    stages: tuple[int, ...]
    ratios: tuple[tuple[Fraction, ...], ...]

    def ratio(self, n: int, j: int) -> Fraction:
        return self.ratios[self.stages.index(n)][j]

    def eps(self, n: int) -> Fraction:
        """Outer ratio gap r_0(n) - r_d(n); contracts quadratically."""
        row = self.ratios[self.stages.index(n)]
        return row[0] - row[self.d]

    def eps_ratio(self, n: int) -> Fraction:
        """eps(n+1) / eps(n)^2, exact."""
        return self.eps(n + 1) / self.eps(n) ** 2


def ratios(vectors: list[BoundaryClassVector]) -> RatioTrace:
    """Build the ratio trace from evolved vectors (stage 0 is skipped)."""
    staged = [v for v in vectors if v.n >= 1]
    if not staged:
        raise ValueError("need at least one vector at stage >= 1 (stage-0 "
                         "ratios are undefined: c1(0) = 0)")
    d = staged[0].d
    stages = tuple(v.n for v in staged)
    rows = tuple(tuple(v.ratio(j) for j in range(d + 1)) for v in staged)
    return RatioTrace(d=d, stages=stages, ratios=rows)


# -- decimal rendering ---------------------------------------------------------


def render_decimal(value: Fraction, places: int, mode: str = "half_even") -> str:
    """Fixed-point decimal string of a nonnegative rational.

    half_even matches the reference ratio tables; floor (truncation) is used
    when a digit prefix must be certified rather than approximated.
    """
    if value < 0:
        raise ValueError("only nonnegative values are rendered")
    scaled = value * 10**places
    num, den = scaled.numerator, scaled.denominator
    q, rem = divmod(num, den)
    if mode == "half_even":
        double = 2 * rem
        if double > den or (double == den and q % 2):
            q += 1
    elif mode != "floor":
        raise ValueError(f"unknown rendering mode {mode!r}")
    digits = str(q).rjust(places + 1, "0")
    return digits[:-places] + "." + digits[-places:] if places else digits


def eps_ratio_table_value(trace: RatioTrace, n: int, places: int = 14) -> str:
    """The reference-table rendering of the contraction quotient.

    The classic table lists ten times eps(n+1)/eps(n)^2 with the digit tail
    cut (not rounded); both quirks are reproduced here so the rendered
    string can be compared digit-for-digit.
    """
    return render_decimal(10 * trace.eps_ratio(n), places, mode="floor")


# -- ordering / contraction report ---------------------------------------------


@dataclass(frozen=True)
class ContractionReport:
    d: int
    ok: bool
    chain_ok_from: int | None
    chain_violations: tuple[tuple[int, int], ...]
    alpha_strictly_decreasing: bool
    omega_strictly_increasing: bool
    eps_contraction_ok: bool
    limit_digits: str
    violations: tuple[str, ...]


def check_contraction(trace: RatioTrace, limit_places: int = 60) -> ContractionReport:
    """Verify the ratio ordering, monotonicity, and quadratic contraction.

    Asserted facts: within each stage the ratios descend, r_0 >= ... >= r_d
    (for d = 2 this starts at stage 2; stage 1 has a middle inversion);
    across stages r_0 strictly decreases and r_d strictly increases; and
    eps(n+1) < 3 eps(n)^2.  The report also carries the certified common
    digit prefix of the shared limit, bracketed by [r_d, r_0] at the last
    stage.
    """
    d = trace.d
    violations: list[str] = []

    chain_violations: list[tuple[int, int]] = []
    for n, row in zip(trace.stages, trace.ratios):
        for j in range(d):
            if row[j] < row[j + 1]:
                chain_violations.append((n, j))
    chain_ok_from = None
    for n in trace.stages:
        if all(stage < n for stage, _ in chain_violations):
            chain_ok_from = n
            break
    if chain_ok_from is None:
        violations.append("ratio chain never becomes ordered")
    elif chain_ok_from > max(2, trace.stages[0]):
        violations.append(
            f"ratio chain only ordered from stage {chain_ok_from} on"
        )

    for n, row in zip(trace.stages, trace.ratios):
        if any(r <= 0 for r in row):
            violations.append(f"nonpositive ratio at stage {n}")
        if d >= 3 and row[0] >= 1:
            violations.append(f"r0 not below 1 at stage {n}")
        if d == 2 and row[d] <= 1:
            # the three-corner system runs top-heavy; its ratios exceed 1
            violations.append(f"r{d} not above 1 at stage {n}")

    alpha = [row[0] for row in trace.ratios]
    omega = [row[d] for row in trace.ratios]
    alpha_dec = all(a > b for a, b in zip(alpha, alpha[1:]))
    omega_inc = all(a < b for a, b in zip(omega, omega[1:]))
    if not alpha_dec:
        violations.append("r0 is not strictly decreasing across stages")
    if not omega_inc:
        violations.append(f"r{d} is not strictly increasing across stages")

    eps_ok = True
    for n in trace.stages[:-1]:
        if n + 1 in trace.stages:
            if not trace.eps(n + 1) < 3 * trace.eps(n) ** 2:
                eps_ok = False
                violations.append(f"eps({n + 1}) >= 3*eps({n})^2")

    last = trace.stages[-1]
    lo = render_decimal(trace.ratio(last, d), limit_places, mode="floor")
    hi = render_decimal(trace.ratio(last, 0), limit_places, mode="floor")
    limit_digits = ""
    for a, b in zip(lo, hi):
        if a != b:
            break
        limit_digits += a
    limit_digits = limit_digits.rstrip(".")

    return ContractionReport(
        d=d,
        ok=not violations,
        chain_ok_from=chain_ok_from,
        chain_violations=tuple(chain_violations),
        alpha_strictly_decreasing=alpha_dec,
        omega_strictly_increasing=omega_inc,
        eps_contraction_ok=eps_ok,
        limit_digits=limit_digits,
        violations=tuple(violations),
    )
