"""Mechanical generation of the boundary-class recursion system for any d.

State basis: c_k(n) counts matchings of TH_d(n) in which a chosen set of k
corners is dimer-covered and the remaining d+1-k corners are monomer-covered
(any choice of the k corners gives the same count, which is asserted against
the brute-force oracle in the tests).

One composition step glues d+1 copies with C(d+1,2) vertex-disjoint
connector edges.  Summing over the subset S of connector edges contained in
the matching, each copy i contributes a mixed count N(a_i, b_i): its
deg_S(i) connector-covered corners are forced monomer inside the copy, its
global corner is forced dimer (b_i = 1) or monomer (a_i gains 1) depending
on the class being built, and the remaining corners are free.  Fixing which
k global corners are dimer-forced breaks copy symmetry, so the sum runs
over subsets refined by the ordered degree sequence, not over unlabeled
degree multisets; a transfer scan over copies performs that sum without
materializing the 2^C(d+1,2) subsets one by one.

Mixed counts expand linearly in the class basis,
N(a, b) = sum_j C(d+1-a-b, j) * c_{b+j}, which turns the transfer scan's
output into the degree-(d+1) class polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .errors import CacheCorruption, CapExceeded, IntegrityError
from .hanoi_graph import connector_edges
from .multipoly import Polynomial, parse_polynomial, serialize

DEFAULT_SUBSET_CAP = 1 << 21  # admits d <= 6


def class_varset(d: int) -> tuple[str, ...]:
    return tuple(f"c{k}" for k in range(d + 2))


def ratio_varset(d: int) -> tuple[str, ...]:
    return tuple(f"r{j}" for j in range(d + 1))


def mixed_count_name(a: int, b: int) -> str:
    return f"n{a}_{b}"


def mixed_varset(d: int) -> tuple[str, ...]:
    # b is 0 or 1: a copy owns exactly one global corner
    names = [mixed_count_name(a, 0) for a in range(d + 2)]
    names += [mixed_count_name(a, 1) for a in range(d + 1)]
    return tuple(names)


@dataclass(frozen=True)
class DegreeCensus:
    """Connector-edge subsets of K_{d+1} grouped by sorted degree multiset."""

    d: int
    counts: dict[tuple[int, ...], int]

    def total_subsets(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class RecursionSystem:
    """The d+2 class polynomials plus the unconstrained-total polynomial.

    class_polys[k] maps a stage-n class vector to c_k(n+1); m_poly maps it
    to the total matching count at stage n+1.  All polynomials are
    homogeneous of degree d+1 with nonnegative coefficients over c0..c_{d+1}.
    """

    d: int
    varset: tuple[str, ...]
    class_polys: tuple[Polynomial, ...]
    m_poly: Polynomial


def census(d: int, subset_cap: int = DEFAULT_SUBSET_CAP) -> DegreeCensus:
    """Exhaustive walk of all connector-edge subsets, grouped by degree multiset.

    Gray-code order keeps the per-subset update O(1).  Refuses when
    2^C(d+1,2) exceeds subset_cap (CLI: --census-cap).
    """
    if d < 2:
        raise ValueError("dimension d must be >= 2")
    pairs = [pair for pair, _ in connector_edges(d)]
    n_edges = len(pairs)
    total = 1 << n_edges
    if total > subset_cap:
        raise CapExceeded(
            f"census for d={d} needs {total} subsets, above the cap of "
            f"{subset_cap}; raise it with --census-cap"
        )
    degrees = [0] * (d + 1)
    counts: dict[tuple[int, ...], int] = {}
    key = tuple(degrees)
    counts[key] = 1
    included = [False] * n_edges
    for k in range(1, total):
        bit = (~(k - 1) & k).bit_length() - 1
        i, j = pairs[bit]
        delta = -1 if included[bit] else 1
        included[bit] = not included[bit]
        degrees[i] += delta
        degrees[j] += delta
        key = tuple(sorted(degrees))
        counts[key] = counts.get(key, 0) + 1
    return DegreeCensus(d=d, counts=counts)


def mixed_count_expansion(d: int, forced_monomers: int, forced_dimers: int) -> Polynomial:
    """N(a, b) as a class-basis polynomial: sum_j C(d+1-a-b, j) c_{b+j}."""
    a, b = forced_monomers, forced_dimers
    if a < 0 or b < 0 or a + b > d + 1:
        raise ValueError(f"invalid corner split a={a}, b={b} for d={d}")
    varset = class_varset(d)
    free = d + 1 - a - b
    nv = len(varset)
    terms = {}
    for j in range(free + 1):
        exps = [0] * nv
        exps[b + j] = 1
        terms[tuple(exps)] = comb(free, j)
    return Polynomial(varset, terms)


def mixed_recursion(d: int, k: int | None) -> Polynomial:
    """One composition step in the mixed-count basis.

    k = number of dimer-forced global corners (the canonical choice forces
    corners 0..k-1); k=None builds the unconstrained total, where every
    global corner stays free.  Returns a degree-(d+1) polynomial in the
    n{a}_{b} variables.
    """
    copies = d + 1
    if k is not None and not 0 <= k <= copies:
        raise ValueError(f"k={k} out of range for d={d}")
    varset = mixed_varset(d)
    index = {name: i for i, name in enumerate(varset)}
    nv = len(varset)
    zero_terms = {(0,) * nv: 1}

    # transfer scan over copies: state = connector degrees still pending for
    # the copies not yet absorbed, value = polynomial over absorbed copies
    states: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {
        (0,) * copies: zero_terms
    }
    for i in range(copies):
        later = copies - i - 1
        buckets: dict[tuple[tuple[int, ...], int], dict[tuple[int, ...], int]] = {}
        for partial, terms in states.items():
            own = partial[0]
            rest = partial[1:]
            for choice in range(1 << later):
                deg = own + choice.bit_count()
                if k is None:
                    a, b = deg, 0
                else:
                    b = 1 if i < k else 0
                    a = deg + 1 - b
                new_rest = list(rest)
                for t in range(later):
                    if choice >> t & 1:
                        new_rest[t] += 1
                bkey = (tuple(new_rest), index[mixed_count_name(a, b)])
                bucket = buckets.get(bkey)
                if bucket is None:
                    buckets[bkey] = dict(terms)
                else:
                    for m, c in terms.items():
                        bucket[m] = bucket.get(m, 0) + c
        states = {}
        for (new_rest, var_i), terms in buckets.items():
            target = states.setdefault(new_rest, {})
            for m, c in terms.items():
                bumped = m[:var_i] + (m[var_i] + 1,) + m[var_i + 1:]
                target[bumped] = target.get(bumped, 0) + c
    (result,) = states.values()
    return Polynomial(varset, result)


def _class_scan(d: int, k: int | None) -> Polynomial:
    """mixed_recursion with the class-basis expansion folded into the scan.

    Same transfer over copies, but each copy's factor is applied as the
    linear class-basis form of its mixed count, so the degree-(d+1) class
    polynomial accumulates directly (equality with the substitution route
    is covered by the tests).
    """
    copies = d + 1
    if k is not None and not 0 <= k <= copies:
        raise ValueError(f"k={k} out of range for d={d}")
    varset = class_varset(d)
    nv = len(varset)

    # linear factors: (a, b) -> list of (class index, binomial weight)
    factors: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for b in (0, 1):
        for a in range(d + 2 - b):
            free = d + 1 - a - b
            factors[(a, b)] = [(b + j, comb(free, j)) for j in range(free + 1)]

    states: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {
        (0,) * copies: {(0,) * nv: 1}
    }
    for i in range(copies):
        later = copies - i - 1
        buckets: dict[tuple[tuple[int, ...], tuple[int, int]], dict] = {}
        for partial, terms in states.items():
            own = partial[0]
            rest = partial[1:]
            for choice in range(1 << later):
                deg = own + choice.bit_count()
                if k is None:
                    ab = (deg, 0)
                else:
                    b = 1 if i < k else 0
                    ab = (deg + 1 - b, b)
                new_rest = list(rest)
                for t in range(later):
                    if choice >> t & 1:
                        new_rest[t] += 1
                bkey = (tuple(new_rest), ab)
                bucket = buckets.get(bkey)
                if bucket is None:
                    buckets[bkey] = dict(terms)
                else:
                    for m, c in terms.items():
                        bucket[m] = bucket.get(m, 0) + c
        states = {}
        for (new_rest, ab), terms in buckets.items():
            target = states.setdefault(new_rest, {})
            for m, c in terms.items():
                for idx, weight in factors[ab]:
                    bumped = m[:idx] + (m[idx] + 1,) + m[idx + 1:]
                    target[bumped] = target.get(bumped, 0) + c * weight
    (result,) = states.values()
    return Polynomial(varset, result)


def _degree_profile_totals(d: int) -> dict[tuple[int, ...], int]:
    """Ordered degree-sequence census via a transfer scan over edges.

    Independent of mixed_recursion's copy scan; used to cross-check the
    generated polynomials' coefficient totals.
    """
    profile: dict[tuple[int, ...], int] = {(0,) * (d + 1): 1}
    for (i, j), _ in connector_edges(d):
        grown: dict[tuple[int, ...], int] = {}
        for degs, cnt in profile.items():
            grown[degs] = grown.get(degs, 0) + cnt
            up = list(degs)
            up[i] += 1
            up[j] += 1
            key = tuple(up)
            grown[key] = grown.get(key, 0) + cnt
        profile = grown
    return profile


def generate(d: int) -> RecursionSystem:
    """Generate and validate the full recursion system for dimension d."""
    varset = class_varset(d)
    class_polys = [_class_scan(d, k) for k in range(d + 2)]
    m_poly = _class_scan(d, None)

    profile = _degree_profile_totals(d)
    class_total = 0
    m_total = 0
    for degs, cnt in profile.items():
        w_class = 1
        w_m = 1
        for deg in degs:
            w_class *= 1 << (d - deg)
            w_m *= 1 << (d + 1 - deg)
        class_total += cnt * w_class
        m_total += cnt * w_m

    for k, poly in enumerate(class_polys):
        if not poly.is_homogeneous(d + 1):
            raise IntegrityError(f"class polynomial c{k} is not homogeneous of degree {d + 1}")
        if poly.min_coefficient() < 0:
            raise IntegrityError(f"class polynomial c{k} has a negative coefficient")
        if poly.coefficient_sum() != class_total:
            raise IntegrityError(
                f"class polynomial c{k} coefficient total {poly.coefficient_sum()} "
                f"!= census total {class_total}"
            )
    if not m_poly.is_homogeneous(d + 1) or m_poly.min_coefficient() < 0:
        raise IntegrityError("total polynomial failed shape checks")
    if m_poly.coefficient_sum() != m_total:
        raise IntegrityError(
            f"total polynomial coefficient sum {m_poly.coefficient_sum()} "
            f"!= census total {m_total}"
        )
    return RecursionSystem(d=d, varset=varset, class_polys=tuple(class_polys), m_poly=m_poly)


def ratio_form(sys: RecursionSystem) -> tuple[Polynomial, ...]:
    """Images of the class polynomials under c_k -> (prod_{j>=k} r_j) c_{d+1}.

    Each recursion polynomial equals c_{d+1}^{d+1} times the returned
    polynomial in the consecutive-ratio variables r0..rd.
    """
    d = sys.d
    rvars = ratio_varset(d)
    images = []
    for poly in sys.class_polys:
        terms: dict[tuple[int, ...], int] = {}
        for exps, coeff in poly.terms():
            acc = 0
            rexps = []
            for j in range(d + 1):
                acc += exps[j]
                rexps.append(acc)
            key = tuple(rexps)
            terms[key] = terms.get(key, 0) + coeff
        images.append(Polynomial(rvars, terms))
    return tuple(images)


def reduced_ratio_form(sys: RecursionSystem) -> tuple[Polynomial, ...]:
    """Ratio images with the guaranteed r_d^{d+1-k} factor divided out.

    The stage-(n+1) ratios then read r_k(n+1) = r_d * R_k / R_{k+1} over
    these reduced polynomials R_k, the form the monotonicity and
    contraction certificates work with.
    """
    d = sys.d
    rvars = ratio_varset(d)
    reduced = []
    for k, image in enumerate(ratio_form(sys)):
        drop = d + 1 - k
        terms = {}
        for exps, coeff in image.terms():
            if exps[d] < drop:
                raise IntegrityError(
                    f"ratio image of c{k} not divisible by r{d}^{drop}"
                )
            terms[exps[:d] + (exps[d] - drop,)] = coeff
        reduced.append(Polynomial(rvars, terms))
    return tuple(reduced)


# -- cache file --------------------------------------------------------------

_HEADER_RE = re.compile(r"# d=(\d+) basis=c0\.\.c(\d+)$")


def cache_path(cache_dir: Path, d: int) -> Path:
    return Path(cache_dir) / f"recursions_d{d}.txt"


def save_system(sys: RecursionSystem, path: Path) -> None:
    """Write the bit-exact canonical cache file."""
    lines = [f"# d={sys.d} basis=c0..c{sys.d + 1}"]
    for k, poly in enumerate(sys.class_polys):
        lines.append(f"c{k}: {serialize(poly)}")
    lines.append(f"M: {serialize(sys.m_poly)}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def load_system(path: Path) -> RecursionSystem:
    """Parse and sanity-check a cache file; CacheCorruption on any defect."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise CacheCorruption(f"cannot read cache file {path}: {err}") from err
    lines = text.splitlines()
    if not lines:
        raise CacheCorruption(f"cache file {path} is empty")
    header = _HEADER_RE.match(lines[0])
    if not header:
        raise CacheCorruption(f"cache file {path} has a malformed header")
    d = int(header.group(1))
    if int(header.group(2)) != d + 1:
        raise CacheCorruption(f"cache file {path} header basis disagrees with d={d}")
    labels = [f"c{k}" for k in range(d + 2)] + ["M"]
    if len(lines) != 1 + len(labels):
        raise CacheCorruption(
            f"cache file {path} has {len(lines) - 1} polynomial lines, expected {len(labels)}"
        )
    varset = class_varset(d)
    polys = []
    for label, line in zip(labels, lines[1:]):
        prefix = f"{label}: "
        if not line.startswith(prefix):
            raise CacheCorruption(f"cache file {path}: expected line label {label!r}")
        try:
            polys.append(parse_polynomial(line[len(prefix):], varset))
        except Exception as err:
            raise CacheCorruption(f"cache file {path}: {err}") from err
    system = RecursionSystem(d=d, varset=varset,
                             class_polys=tuple(polys[:-1]), m_poly=polys[-1])
    for poly in system.class_polys + (system.m_poly,):
        if not poly.is_homogeneous(d + 1) or poly.min_coefficient() < 0:
            raise CacheCorruption(f"cache file {path}: polynomial failed validation")
    return system


def cached_system(d: int, cache_dir: Path | None = None,
                  regenerate: bool = False) -> RecursionSystem:
    """Load from cache when possible, else generate and store.

    A corrupt cache file is regenerated in place with a warning.
    """
    if cache_dir is None:
        return generate(d)
    path = cache_path(Path(cache_dir), d)
    if not regenerate and path.exists():
        try:
            return load_system(path)
        except CacheCorruption as err:
            import warnings

            warnings.warn(f"regenerating corrupt recursion cache: {err}")
    system = generate(d)
    save_system(system, path)
    return system
