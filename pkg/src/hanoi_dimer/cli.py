"""Command-line interface tying the modules together.

Commands: gen-recursions, count, oracle, verify, ratios, entropy,
appendix-check, reproduce.  Exit codes: 0 success, 1 mismatch/violation,
2 usage error, 3 resource cap.  All output is deterministic for identical
inputs and flags; progress and warnings go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import reference_values as ref
from .appendix_check import DEFAULT_TERM_BUDGET, run_certificates
from .entropy import DEFAULT_PRECISION, bounds
from .errors import CapExceeded, HanoiDimerError, IntegrityError
from .evolve import (
    DEFAULT_DIGIT_CAP,
    check_contraction,
    eps_ratio_table_value,
    evolve_to,
    ratios,
    render_decimal,
)
from .hanoi_graph import DEFAULT_VERTEX_CAP, build, edge_csv
from .matching_oracle import (
    DEFAULT_MEMO_CAP,
    DEFAULT_ORACLE_VERTEX_CAP,
    CornerConstraint,
    boundary_class_vector,
    count_constrained,
)
from .recursion_gen import (
    DEFAULT_SUBSET_CAP,
    cache_path,
    cached_system,
    generate,
    save_system,
)

CACHE_ENV = "HANOI_DIMER_CACHE"


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of per-invocation options and resource caps."""

    d: int
    n: int | None = None
    k: int | None = None
    precision: int = DEFAULT_PRECISION
    fmt: str = "json"
    cache_dir: Path | None = None
    vertex_cap: int = DEFAULT_VERTEX_CAP
    oracle_vertex_cap: int = DEFAULT_ORACLE_VERTEX_CAP
    memo_cap: int = DEFAULT_MEMO_CAP
    digit_cap: int = DEFAULT_DIGIT_CAP
    term_budget: int = DEFAULT_TERM_BUDGET
    census_cap: int = DEFAULT_SUBSET_CAP

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("--d must be at least 2")
        for name in ("vertex_cap", "oracle_vertex_cap", "memo_cap",
                     "digit_cap", "term_budget", "census_cap", "precision"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def resolve_cache_dir(explicit: str | None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hanoi-dimer"


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        d=args.d,
        n=getattr(args, "n", None),
        k=getattr(args, "k", None),
        precision=getattr(args, "precision", DEFAULT_PRECISION),
        fmt=getattr(args, "format", "json"),
        cache_dir=(resolve_cache_dir(args.cache_dir)
                   if hasattr(args, "cache_dir") else None),
        vertex_cap=getattr(args, "vertex_cap", DEFAULT_VERTEX_CAP),
        oracle_vertex_cap=getattr(args, "oracle_vertex_cap",
                                  DEFAULT_ORACLE_VERTEX_CAP),
        memo_cap=getattr(args, "memo_cap", DEFAULT_MEMO_CAP),
        digit_cap=getattr(args, "digit_cap", DEFAULT_DIGIT_CAP),
        term_budget=getattr(args, "term_budget", DEFAULT_TERM_BUDGET),
        census_cap=getattr(args, "census_cap", DEFAULT_SUBSET_CAP),
    )


# -- commands ----------------------------------------------------------------


def cmd_gen_recursions(args: argparse.Namespace) -> int:
    cfg = _config(args)
    subsets = 1 << (cfg.d * (cfg.d + 1) // 2)
    if subsets > cfg.census_cap:
        raise CapExceeded(
            f"generation for d={cfg.d} spans {subsets} connector subsets, "
            f"above the cap of {cfg.census_cap}; raise it with --census-cap"
        )
    system = generate(cfg.d)
    path = cache_path(cfg.cache_dir, cfg.d)
    save_system(system, path)
    sizes = ", ".join(str(p.term_count()) for p in system.class_polys)
    _emit(f"wrote {path}")
    _emit(f"class polynomial terms: {sizes}; total polynomial terms: "
          f"{system.m_poly.term_count()}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    cfg = _config(args)
    system = cached_system(cfg.d, cfg.cache_dir)
    vectors = evolve_to(system, cfg.n, digit_cap=cfg.digit_cap)
    v = vectors[cfg.n]
    if cfg.fmt == "csv":
        heads = ["d", "n"] + [f"c{k}" for k in range(cfg.d + 2)] + ["M"]
        row = [str(cfg.d), str(cfg.n)] + [str(c) for c in v.counts] + [str(v.m)]
        _emit(",".join(heads))
        _emit(",".join(row))
    else:
        _emit(json.dumps({
            "d": cfg.d, "n": cfg.n,
            "c": [str(c) for c in v.counts], "M": str(v.m),
        }))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _config(args)
    graph = build(cfg.d, cfg.n, vertex_cap=max(cfg.vertex_cap,
                                               cfg.oracle_vertex_cap))
    if args.emit_graph:
        sys.stdout.write(edge_csv(graph))
        return 0
    if args.constraint is not None:
        constraint = CornerConstraint.parse(args.constraint)
        value = count_constrained(graph, constraint,
                                  vertex_cap=cfg.oracle_vertex_cap,
                                  memo_cap=cfg.memo_cap)
        _emit(json.dumps({
            "d": cfg.d, "n": cfg.n,
            "constraint": args.constraint, "count": str(value),
        }))
        return 0
    vector = boundary_class_vector(graph, vertex_cap=cfg.oracle_vertex_cap,
                                   memo_cap=cfg.memo_cap)
    _emit(json.dumps({
        "d": cfg.d, "n": cfg.n, "M": str(vector.m),
        "c": [str(c) for c in vector.counts],
    }))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    system = cached_system(cfg.d, cfg.cache_dir)
    evolved = evolve_to(system, args.n_max, digit_cap=cfg.digit_cap)
    status = 0
    for n in range(args.n_max + 1):
        graph = build(cfg.d, n, vertex_cap=max(cfg.vertex_cap,
                                               cfg.oracle_vertex_cap))
        reference = boundary_class_vector(
            graph, vertex_cap=cfg.oracle_vertex_cap, memo_cap=cfg.memo_cap)
        if reference == evolved[n]:
            _emit(f"stage {n}: OK ({cfg.d + 2} class counts + total)")
            continue
        status = 1
        for k, (got, want) in enumerate(zip(evolved[n].counts,
                                            reference.counts)):
            if got != want:
                _emit(f"stage {n}: MISMATCH c{k}: recursion {got}, oracle {want}")
                break
        else:
            _emit(f"stage {n}: MISMATCH M: recursion {evolved[n].m}, "
                  f"oracle {reference.m}")
        break
    return status


def cmd_ratios(args: argparse.Namespace) -> int:
    cfg = _config(args)
    system = cached_system(cfg.d, cfg.cache_dir)
    vectors = evolve_to(system, args.max_n, digit_cap=cfg.digit_cap)
    trace = ratios(vectors)
    digits = args.digits
    stages = [
        {
            "n": n,
            "r": [render_decimal(trace.ratio(n, j), digits)
                  for j in range(cfg.d + 1)],
            "eps": render_decimal(trace.eps(n), digits),
        }
        for n in trace.stages
    ]
    quotients = [
        {
            "n": n,
            "value": render_decimal(trace.eps_ratio(n), digits),
            "table_value": eps_ratio_table_value(trace, n),
        }
        for n in trace.stages[:-1]
    ]
    if cfg.fmt == "csv":
        _emit(",".join(["n"] + [f"r{j}" for j in range(cfg.d + 1)] + ["eps"]))
        for row in stages:
            _emit(",".join([str(row["n"])] + row["r"] + [row["eps"]]))
    else:
        _emit(json.dumps({
            "d": cfg.d, "digits": digits,
            "stages": stages, "eps_ratios": quotients,
        }))
    return 0


def cmd_entropy(args: argparse.Namespace) -> int:
    cfg = _config(args)
    system = cached_system(cfg.d, cfg.cache_dir)
    vectors = evolve_to(system, cfg.k, digit_cap=cfg.digit_cap)
    result = bounds(cfg.d, cfg.k, vectors, precision=cfg.precision)
    payload = {
        "d": cfg.d, "k": cfg.k, "precision": cfg.precision,
        "lower": result.lower.as_decimal(),
        "upper": result.upper.as_decimal(),
        "certified_digits": result.certified_digits,
        "lambda_digits": result.lambda_digits,
    }
    if result.warning:
        payload["warning"] = result.warning
    _emit(json.dumps(payload))
    return 0


def cmd_appendix_check(args: argparse.Namespace) -> int:
    cfg = _config(args)
    reports = run_certificates(cfg.d, args.which, term_budget=cfg.term_budget)
    status = 0
    for report in reports:
        if not report.attempted:
            _emit(f"{report.name} d={cfg.d}: NOT ATTEMPTED "
                  f"({'; '.join(report.notes)})")
            status = max(status, 3)
        elif report.passed:
            _emit(f"{report.name} d={cfg.d}: PASS ({report.term_count} terms)")
        else:
            _emit(f"{report.name} d={cfg.d}: FAIL "
                  f"(offending monomial {report.offending_monomial})")
            status = max(status, 1)
    return status


# -- reproduce ----------------------------------------------------------------


class _Report:
    def __init__(self):
        self.lines: list[str] = []
        self.checks = 0
        self.failures = 0

    def info(self, text: str) -> None:
        self.lines.append(text)

    def check(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks += 1
        if ok:
            self.lines.append(f"  {label}: OK{(' ' + detail) if detail else ''}")
        else:
            self.failures += 1
            self.lines.append(f"  {label}: FAIL{(' ' + detail) if detail else ''}")

    def compare(self, label: str, got, want) -> None:
        if got == want:
            self.check(label, True)
        else:
            self.check(label, False, f"(got {got!r}, want {want!r})")


_ORACLE_STAGES = {2: (0, 1, 2), 3: (0, 1), 4: (0, 1)}
_REFERENCE_COUNTS = {
    2: (ref.CLASS_COUNTS_D2, ref.TOTALS_D2),
    3: (ref.CLASS_COUNTS_D3, ref.TOTALS_D3),
    4: (ref.CLASS_COUNTS_D4, ref.TOTALS_D4),
}


def _reproduce_dimension(report: _Report, d: int) -> None:
    report.info(f"[d={d}]")
    system = generate(d)
    report.info(f"  generated {d + 2} class polynomials over c0..c{d + 1}")

    vectors = evolve_to(system, 6)
    for n in _ORACLE_STAGES[d]:
        reference = boundary_class_vector(build(d, n))
        report.check(f"oracle cross-check stage {n}", reference == vectors[n])

    counts_ref, totals_ref = _REFERENCE_COUNTS[d]
    for n in (1, 2):
        report.compare(f"class counts n={n}",
                       vectors[n].counts, counts_ref[n])
        report.compare(f"matching total n={n}", vectors[n].m, totals_ref[n])

    trace = ratios(vectors)
    if d == 3:
        for n, row in ref.RATIOS_D3.items():
            got = tuple(render_decimal(trace.ratio(n, j), 15) for j in range(4))
            report.compare(f"ratio row n={n} (15 digits)", got, row)
        for n, want in ref.EPS_RATIO_TABLE_D3.items():
            report.compare(f"contraction quotient n={n}",
                           eps_ratio_table_value(trace, n), want)
    elif d == 4:
        for n, row in ref.RATIOS_D4.items():
            got = tuple(render_decimal(trace.ratio(n, j), 14) for j in range(5))
            report.compare(f"ratio row n={n} (14 digits)", got, row)

    contraction = check_contraction(trace)
    report.check("ratio ordering and monotonicity", contraction.ok,
                 f"(limit {contraction.limit_digits[:31]})")
    if d in ref.RATIO_LIMIT_DIGITS:
        report.check(
            "ratio limit digits",
            contraction.limit_digits.startswith(ref.RATIO_LIMIT_DIGITS[d]),
            f"(want prefix {ref.RATIO_LIMIT_DIGITS[d]})",
        )

    result = bounds(d, 6, vectors, trace, precision=160)
    prefix = ref.Z_PREFIX[d]
    report.check(
        "entropy bounds k=6 share reference prefix",
        result.lower.as_decimal().startswith(prefix)
        and result.upper.as_decimal().startswith(prefix),
        f"({prefix}, certified {result.certified_digits} digits)",
    )
    if d in ref.MIN_CERTIFIED_DIGITS_K6:
        need = ref.MIN_CERTIFIED_DIGITS_K6[d]
        report.check(f"certified digits >= {need}",
                     result.certified_digits >= need,
                     f"(got {result.certified_digits})")


def cmd_reproduce(_args: argparse.Namespace) -> int:
    report = _Report()
    report.info("reference reproduction report")
    report.info("=============================")
    for d in (2, 3, 4):
        _reproduce_dimension(report, d)
        report.info("")
    verdict = "all values match" if report.failures == 0 else "MISMATCHES FOUND"
    report.info(f"SUMMARY: {report.checks} comparisons, "
                f"{report.failures} failures -- {verdict}")
    _emit("\n".join(report.lines))
    return 0 if report.failures == 0 else 1


# -- parser --------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, *, d=True, cache=True) -> None:
    if d:
        parser.add_argument("--d", type=int, required=True,
                            help="dimension (>= 2)")
    if cache:
        parser.add_argument("--cache-dir", default=None,
                            help=f"recursion cache directory (default: "
                                 f"${CACHE_ENV} or ~/.cache/hanoi-dimer)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanoi-dimer",
        description="Exact dimer-monomer enumeration and certified entropy "
                    "bounds on Tower of Hanoi graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-recursions",
                       help="generate a recursion system and write its cache file")
    _add_common(p)
    p.add_argument("--census-cap", type=int, default=DEFAULT_SUBSET_CAP)
    p.set_defaults(func=cmd_gen_recursions)

    p = sub.add_parser("count", help="exact class counts at a stage")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--digit-cap", type=int, default=DEFAULT_DIGIT_CAP)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("oracle", help="brute-force counts on the built graph")
    _add_common(p, cache=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--constraint", default=None,
                   help="per-corner letters m/d/f (monomer, dimer, free)")
    p.add_argument("--emit-graph", action="store_true",
                   help="print the edge list as CSV instead of counting")
    p.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--oracle-vertex-cap", type=int,
                   default=DEFAULT_ORACLE_VERTEX_CAP)
    p.add_argument("--memo-cap", type=int, default=DEFAULT_MEMO_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify",
                       help="cross-validate recursion counts against the oracle")
    _add_common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--oracle-vertex-cap", type=int,
                   default=DEFAULT_ORACLE_VERTEX_CAP)
    p.add_argument("--memo-cap", type=int, default=DEFAULT_MEMO_CAP)
    p.add_argument("--digit-cap", type=int, default=DEFAULT_DIGIT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratios", help="consecutive-class ratio trace")
    _add_common(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--digits", type=int, default=15)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--digit-cap", type=int, default=DEFAULT_DIGIT_CAP)
    p.set_defaults(func=cmd_ratios)

    p = sub.add_parser("entropy", help="certified entropy-per-site bounds")
    _add_common(p)
    p.add_argument("--k", type=int, required=True, help="bound stage (>= 1)")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--digit-cap", type=int, default=DEFAULT_DIGIT_CAP)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("appendix-check",
                       help="symbolic monotonicity/contraction certificates")
    _add_common(p, cache=False)
    p.add_argument("--which", default="all",
                   choices=("omega", "alpha", "contraction", "all"))
    p.add_argument("--term-budget", type=int, default=DEFAULT_TERM_BUDGET)
    p.set_defaults(func=cmd_appendix_check)

    p = sub.add_parser("reproduce",
                       help="recompute every reference value for d=2,3,4 "
                            "and report matches")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(20_000_000)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as err:
        print(f"resource cap: {err}", file=sys.stderr)
        return 3
    except (IntegrityError, HanoiDimerError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
