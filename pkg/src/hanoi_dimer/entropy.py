"""Certified entropy-per-site bounds with directed rounding.

The bound at stage k anchors on lambda = c_{d+1}(k), the all-corners-dimer
count, and the outer ratios omega = c_d(k)/c_{d+1}(k) and
alpha = c_0(k)/c_1(k):

    lower = ln(lambda) / (d+1)^(k+1) + ln(1 + 2 omega + 2 omega^2) / (2 (d+1)^k)
    upper = same with alpha in place of omega

with the lower bound rounded toward -inf and the upper toward +inf, so the
reported interval is mathematically guaranteed at the working precision.

Logarithms are computed in fixed point over plain integers: a value at
precision w is an integer numerator of value/10^w, carried as a certified
enclosing interval [lo, hi].  ln of an integer reduces to mantissa * 10^e
with a power-of-two shift into [0.8, 1.6), whose log comes from the odd
atanh series 2*atanh((x-1)/(x+1)) with an explicit tail bound; ln 2 and
ln 10 come from the same series at 1/3 and 1/9 (ln 10 = 3 ln 2 + ln(10/8)).
Everything is computed at precision + 20 guard digits and truncated outward
at the end, so series slack of a few thousand ulps never reaches a reported
digit.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import IntegrityError
from .evolve import BoundaryClassVector, RatioTrace, ratios
from .intutil import ceil_div, digit_count, floor_div

DEFAULT_PRECISION = 160
GUARD_DIGITS = 20


@dataclass(frozen=True)
class HighPrecisionReal:
    """A directed decimal bound: value = scaled / 10^precision.

    rounding records which way the true quantity lies: "floor" means the
    true value is >= this one, "ceiling" means it is <=.
    """

    scaled: int
    precision: int
    rounding: str

    def as_decimal(self) -> str:
        sign = "-" if self.scaled < 0 else ""
        digits = str(abs(self.scaled)).rjust(self.precision + 1, "0")
        return f"{sign}{digits[:-self.precision]}.{digits[-self.precision:]}"

    def as_fraction(self) -> Fraction:
        return Fraction(self.scaled, 10**self.precision)


@dataclass(frozen=True)
class BoundsResult:
    d: int
    k: int
    lower: HighPrecisionReal
    upper: HighPrecisionReal
    certified_digits: int
    lambda_digits: int
    warning: str | None = None


@dataclass(frozen=True)
class SandwichReport:
    """Exact rational verification of the finite-stage matching sandwich."""

    d: int
    k: int
    n: int
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


# -- fixed-point interval log ---------------------------------------------------

Interval = tuple[int, int]


def _atanh_interval(num: int, den: int, w: int) -> Interval:
    """Enclose 10^w * atanh(num/den) for 0 <= num/den <= 1/2."""
    if num == 0:
        return (0, 0)
    if not 0 < 2 * num <= den:
        raise ValueError("series argument out of range")
    scale = 10**w
    n2 = num * num
    d2 = den * den
    ypow = scale * num // den
    total = 0
    steps = 0
    j = 1
    while ypow:
        total += ypow // j
        ypow = ypow * n2 // d2
        j += 2
        steps += 1
    # floor drift grows at most linearly per step, tail is geometric
    slack = steps * (steps + 3) // 2 + 4 * steps + 8
    return (total, total + slack)


_CONST_CACHE: dict[tuple[str, int], Interval] = {}


def _ln2_interval(w: int) -> Interval:
    got = _CONST_CACHE.get(("ln2", w))
    if got is None:
        lo, hi = _atanh_interval(1, 3, w)
        got = (2 * lo, 2 * hi)
        _CONST_CACHE[("ln2", w)] = got
    return got


def _ln10_interval(w: int) -> Interval:
    got = _CONST_CACHE.get(("ln10", w))
    if got is None:
        l2lo, l2hi = _ln2_interval(w)
        # ln(10/8) = 2 atanh(1/9)
        qlo, qhi = _atanh_interval(1, 9, w)
        got = (3 * l2lo + 2 * qlo, 3 * l2hi + 2 * qhi)
        _CONST_CACHE[("ln10", w)] = got
    return got


def _ln_reduced_int(m: int, w: int) -> Interval:
    """Enclose 10^w * ln(m) for an integer of at most ~w+12 digits."""
    if m == 1:
        return (0, 0)
    e = digit_count(m) - 1
    p10 = 10**e
    # shift the mantissa m/10^e into [0.8, 1.6) with k halvings
    if 5 * m < 8 * p10:
        k = 0
    elif 5 * m < 16 * p10:
        k = 1
    elif 5 * m < 32 * p10:
        k = 2
    else:
        k = 3
    c = (1 << k) * p10
    num, den = m - c, m + c
    if num >= 0:
        alo, ahi = _atanh_interval(num, den, w)
        xlo, xhi = 2 * alo, 2 * ahi
    else:
        alo, ahi = _atanh_interval(-num, den, w)
        xlo, xhi = -2 * ahi, -2 * alo
    l2lo, l2hi = _ln2_interval(w)
    l10lo, l10hi = _ln10_interval(w)
    return (xlo + k * l2lo + e * l10lo, xhi + k * l2hi + e * l10hi)


def _ln_int_interval(m: int, w: int) -> Interval:
    """Enclose 10^w * ln(m) for any positive integer."""
    if m <= 0:
        raise ValueError("log of a nonpositive integer")
    digits = digit_count(m)
    keep = w + 10
    if digits <= keep:
        return _ln_reduced_int(m, w)
    shift = digits - keep
    head = m // 10**shift
    l10lo, l10hi = _ln10_interval(w)
    lo = _ln_reduced_int(head, w)[0] + shift * l10lo
    hi = _ln_reduced_int(head + 1, w)[1] + shift * l10hi
    return (lo, hi)


def _ln_fraction_interval(value: Fraction, w: int) -> Interval:
    if value <= 0:
        raise ValueError("log of a nonpositive rational")
    nlo, nhi = _ln_int_interval(value.numerator, w)
    dlo, dhi = _ln_int_interval(value.denominator, w)
    return (nlo - dhi, nhi - dlo)


def hp_ln(x: int | Fraction, precision: int = DEFAULT_PRECISION,
          rounding: str = "floor") -> HighPrecisionReal:
    """Natural log of a positive integer or rational, correct to ``precision``
    digits with the requested rounding direction ("floor" or "ceiling")."""
    if rounding not in ("floor", "ceiling"):
        raise ValueError(f"unknown rounding direction {rounding!r}")
    value = Fraction(x)
    if value <= 0:
        raise ValueError(f"ln domain error: {x} <= 0")
    w = precision + GUARD_DIGITS
    lo, hi = _ln_fraction_interval(value, w)
    grain = 10**GUARD_DIGITS
    if rounding == "floor":
        scaled = floor_div(lo, grain)
    else:
        scaled = ceil_div(hi, grain)
    return HighPrecisionReal(scaled=scaled, precision=precision, rounding=rounding)


# -- entropy bounds ----------------------------------------------------------------


def _stage_vector(vectors: list[BoundaryClassVector], k: int) -> BoundaryClassVector:
    for v in vectors:
        if v.n == k:
            return v
    raise ValueError(f"no stage-{k} vector available")


def _edge_factor(t: int, s: int) -> Fraction:
    # 1 + 2 (t/s) + 2 (t/s)^2 as an exact rational
    return Fraction(s * s + 2 * t * s + 2 * t * t, s * s)


def certified_digit_prefix(lower: str, upper: str) -> tuple[str, int]:
    """Common decimal prefix of two bound renderings and its fractional length."""
    if ("-" in lower) != ("-" in upper):
        return ("", 0)
    int_lo, frac_lo = lower.split(".")
    int_hi, frac_hi = upper.split(".")
    if int_lo != int_hi:
        return ("", 0)
    common = ""
    for a, b in zip(frac_lo, frac_hi):
        if a != b:
            break
        common += a
    prefix = f"{int_lo}.{common}" if common else int_lo
    return (prefix, len(common))


def bounds(d: int, k: int, vectors: list[BoundaryClassVector],
           trace: RatioTrace | None = None,
           precision: int = DEFAULT_PRECISION) -> BoundsResult:
    """Certified lower/upper bounds on the entropy per site from stage k.

    Requires k >= 1 and the stage-k ratio interleaving (r_d minimal, r_0
    maximal), which underwrites the sandwich; the d=2 system only satisfies
    it from stage 2 on.
    """
    if k < 1:
        raise ValueError("bound stage k must be >= 1")
    v = _stage_vector(vectors, k)
    if v.d != d:
        raise ValueError(f"vectors are for d={v.d}, not d={d}")
    if trace is None:
        trace = ratios([v])
    row = trace.ratios[trace.stages.index(k)]
    if max(row) != row[0] or min(row) != row[d]:
        raise IntegrityError(
            f"stage-{k} ratios of d={d} are not bracketed by r0 and r{d}; "
            "the sandwich argument does not apply at this stage"
        )

    lam = v.counts[d + 1]
    w = precision + GUARD_DIGITS
    lam_lo, lam_hi = _ln_int_interval(lam, w)
    qw_lo, qw_hi = _ln_fraction_interval(_edge_factor(v.counts[d], v.counts[d + 1]), w)
    qa_lo, qa_hi = _ln_fraction_interval(_edge_factor(v.counts[0], v.counts[1]), w)

    div_lam = (d + 1) ** (k + 1)
    div_q = 2 * (d + 1) ** k
    lower_w = floor_div(lam_lo, div_lam) + floor_div(qw_lo, div_q)
    upper_w = ceil_div(lam_hi, div_lam) + ceil_div(qa_hi, div_q)

    grain = 10**GUARD_DIGITS
    lower = HighPrecisionReal(floor_div(lower_w, grain), precision, "floor")
    upper = HighPrecisionReal(ceil_div(upper_w, grain), precision, "ceiling")
    if lower.scaled > upper.scaled:
        raise IntegrityError("lower bound exceeded upper bound")

    _, digits = certified_digit_prefix(lower.as_decimal(), upper.as_decimal())
    warning = None
    if digits >= precision - 3:
        warning = (
            f"precision {precision} too small to separate the bounds; "
            f"achieved {digits} certified digits"
        )
        warnings.warn(warning)
    return BoundsResult(
        d=d, k=k, lower=lower, upper=upper, certified_digits=digits,
        lambda_digits=digit_count(lam), warning=warning,
    )


def check_finite_sandwich(d: int, k: int, n: int,
                          vectors: list[BoundaryClassVector]) -> SandwichReport:
    """Exact rational check of the finite-stage sandwich.

    lambda(k)^{(d+1)^(n-k)} * q(omega_k)^{(d+1)((d+1)^(n-k)-1)/2} * (1+omega_n)^{d+1}
    < M(n) < the same with alpha, where q(x) = 1 + 2x + 2x^2.  No rounding
    anywhere; a violation raises IntegrityError.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    vk = _stage_vector(vectors, k)
    vn = _stage_vector(vectors, n)
    lam = vk.counts[d + 1]
    omega_k = Fraction(vk.counts[d], vk.counts[d + 1])
    alpha_k = Fraction(vk.counts[0], vk.counts[1])
    omega_n = Fraction(vn.counts[d], vn.counts[d + 1])
    alpha_n = Fraction(vn.counts[0], vn.counts[1])

    copies = (d + 1) ** (n - k)
    middle_exp = (d + 1) * (copies - 1) // 2

    def side(ratio_k: Fraction, ratio_n: Fraction) -> Fraction:
        q = 1 + 2 * ratio_k + 2 * ratio_k**2
        return Fraction(lam) ** copies * q**middle_exp * (1 + ratio_n) ** (d + 1)

    lower_ok = side(omega_k, omega_n) < vn.m
    upper_ok = vn.m < side(alpha_k, alpha_n)
    report = SandwichReport(d=d, k=k, n=n, lower_ok=lower_ok, upper_ok=upper_ok)
    if not report.ok:
        raise IntegrityError(
            f"finite sandwich violated for d={d}, k={k}, n={n}: "
            f"lower_ok={lower_ok}, upper_ok={upper_ok}"
        )
    return report
