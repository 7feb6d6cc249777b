"""Shared test utilities: classic-symbol polynomial parsing and fixtures."""

from __future__ import annotations

import re
from pathlib import Path

from hanoi_dimer.multipoly import Polynomial

DATA_DIR = Path(__file__).parent / "data"

CLASSIC_SYMBOLS_D3 = "fghts"
CLASS_VARS_D3 = tuple(f"c{i}" for i in range(5))


def parse_classic(rhs: str, symbols: str, varset: tuple[str, ...]) -> Polynomial:
    """Parse compact single-letter polynomial text like ``64f^4+384f^3g``.

    Implicit multiplication, ``^`` powers, ``+``-separated nonnegative terms;
    each symbol maps positionally onto the given varset.
    """
    sym_re = f"[{symbols}]"
    terms: dict[tuple[int, ...], int] = {}
    for term in rhs.replace(" ", "").split("+"):
        m = re.fullmatch(rf"(\d*)((?:{sym_re}(?:\^\d+)?)*)", term)
        if not m:
            raise ValueError(f"bad classic term {term!r}")
        coeff = int(m.group(1) or 1)
        exps = [0] * len(varset)
        for sym, power in re.findall(rf"({sym_re})(?:\^(\d+))?", m.group(2)):
            exps[symbols.index(sym)] += int(power or 1)
        key = tuple(exps)
        if key in terms:
            raise ValueError(f"duplicate monomial in fixture: {term!r}")
        terms[key] = coeff
    return Polynomial(varset, terms)


def load_golden_d3() -> dict[str, Polynomial]:
    """The reference d=3 system, mapped onto the c0..c4 basis."""
    out: dict[str, Polynomial] = {}
    for line in (DATA_DIR / "golden_recursions_d3.txt").read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        lhs, rhs = line.split(": ", 1)
        out[lhs] = parse_classic(rhs, CLASSIC_SYMBOLS_D3, CLASS_VARS_D3)
    return out
