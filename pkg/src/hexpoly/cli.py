"""Command-line front end.

Exit codes: 0 ok, 2 usage or domain error, 3 cross-engine mismatch.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import asymptotics, columndp, enumerator, temperley
from .exactalg import int_series
from .hexgrid import ALL, CC, FamilySpec, cheesy

SCHEMA = "hexpoly/1"
ENGINES = ("enumerate", "dp", "gf")
GF_LEVELS = (1, 2, 3)

log = logging.getLogger("hexpoly")


class UsageError(Exception):
    pass


class Mismatch(Exception):
    pass


@dataclass
class OutputRecord:
    family: str
    engine: str
    terms: list[str] = field(default_factory=list)
    gf: dict | None = None
    asym: dict | None = None
    schema: str = SCHEMA

    def dump(self) -> str:
        return json.dumps({k: v for k, v in asdict(self).items() if v is not None}, indent=2)


def parse_family(text: str) -> FamilySpec:
    try:
        return FamilySpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _gf_model(family: FamilySpec) -> str:
    if family.kind == "cc":
        return "CC"
    if family.kind == "cheesy" and family.level in GF_LEVELS:
        return f"L{family.level}"
    raise UsageError(f"no closed-form generating function for {family}; use cc or cheesy:1..3")


def supports(engine: str, family: FamilySpec) -> bool:
    if engine == "enumerate":
        return True
    if engine == "dp":
        return family.kind != "all"
    if engine == "gf":
        return family.kind == "cc" or (family.kind == "cheesy" and family.level in GF_LEVELS)
    return False


def compute_terms(engine: str, family: FamilySpec, n: int, *, threads: int = 1, cap: int = enumerator.DEFAULT_CAP) -> list[int]:
    if not supports(engine, family):
        raise UsageError(f"engine {engine} does not support family {family}")
    if engine == "enumerate":
        try:
            return enumerator.enumerate_all(n, [family], threads=threads, cap=cap)[family]
        except enumerator.EnumerationCapError as exc:
            raise UsageError(str(exc)) from None
    if engine == "dp":
        return columndp.count(0 if family.kind == "cc" else family.level, n)
    return int_series(temperley.area_gf(_gf_model(family)), n)[1:]


def cmd_table(args) -> int:
    try:
        table = enumerator.tally_levels(args.max_area, threads=args.threads, cap=args.cap, backend=args.backend)
    except enumerator.EnumerationCapError as exc:
        raise UsageError(str(exc)) from None
    families = [CC, cheesy(1), cheesy(2), cheesy(3), ALL]
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["area", "cc", "cheesy1", "cheesy2", "cheesy3", "all"])
    for n in range(1, args.max_area + 1):
        out.writerow([n] + [table.count(f, n) for f in families])
    return 0


def cmd_gf(args) -> int:
    family = parse_family(args.family)
    f = temperley.area_gf(_gf_model(family))
    terms = int_series(f, args.terms)[1:]
    gf = f.to_json()
    gf["text"] = str(f)
    print(OutputRecord(str(family), "gf", [str(x) for x in terms], gf=gf).dump())
    return 0


def cmd_series(args) -> int:
    family = parse_family(args.family)
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    terms = compute_terms(args.engine, family, args.terms, threads=args.threads, cap=args.cap)
    if args.check:
        for other in ENGINES:
            if other == args.engine or not supports(other, family):
                continue
            if other == "enumerate" and args.terms > args.cap:
                log.info("skipping enumerate check: %d terms exceed cap %d", args.terms, args.cap)
                continue
            alt = compute_terms(other, family, args.terms, threads=args.threads, cap=args.cap)
            if alt != terms:
                first = next(i for i, (a, b) in enumerate(zip(terms, alt)) if a != b)
                raise Mismatch(
                    f"{args.engine} and {other} disagree at area {first + 1}: {terms[first]} != {alt[first]}"
                )
    print(OutputRecord(str(family), args.engine, [str(x) for x in terms]).dump())
    return 0


def cmd_asym(args) -> int:
    family = parse_family(args.family)
    f = temperley.area_gf(_gf_model(family))
    prof = asymptotics.profile(f, Fraction(args.tol))
    print(OutputRecord(str(family), "gf", gf=f.to_json(), asym=prof.as_dict()).dump())
    return 0


def growth_sequence(levels: int, terms: int) -> list[dict]:
    """Growth constants of CC and levels 1..k; certified where a closed form exists."""
    rows = []
    for m in range(0, levels + 1):
        family = CC if m == 0 else cheesy(m)
        if m <= 3:
            prof = asymptotics.profile(temperley.area_gf("CC" if m == 0 else f"L{m}"))
            rows.append({"family": str(family), "value": float(prof.growth),
                         "growth": prof.growth.digits(6), "source": "gf"})
        else:
            ratio = asymptotics.empirical_growth(columndp.count(m, terms))[-1]
            rows.append({"family": str(family), "value": ratio,
                         "growth": f"{ratio:.6f}", "source": f"dp ratio at n={terms}"})
    return rows


def cmd_extrapolate(args) -> int:
    if args.levels < 2:
        raise UsageError("--levels must be >= 2")
    rows = growth_sequence(args.levels, args.terms)
    growths = [r.pop("value") for r in rows]
    try:
        limit = asymptotics.extrapolate(growths)
        fitted, ratio = asymptotics.extrapolate_fitted(growths)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps({
        "schema": SCHEMA,
        "growths": rows,
        "limit": f"{limit:.6f}",
        "method": "last difference repeated (decay ratio 1/2)",
        "fitted": {"limit": f"{fitted:.6f}", "ratio": f"{ratio:.6f}", "method": "heuristic geometric fit"},
    }, indent=2))
    return 0


def cmd_solve(args) -> int:
    family = parse_family(args.family)
    model = _gf_model(family)
    if not temperley.catalog()[model].derivable:
        raise UsageError(f"{family} has only a stored closed form; nothing to solve")
    print(temperley.solution_json(model))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hexpoly", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def engine_opts(sp):
        sp.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
        sp.add_argument("--cap", type=int, default=enumerator.DEFAULT_CAP, help="largest area to enumerate")

    sp = sub.add_parser("table", help="counts per family as CSV, by exhaustive enumeration")
    sp.add_argument("--max-area", type=int, required=True)
    sp.add_argument("--backend", choices=("auto", "native", "python"), default="auto")
    engine_opts(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("gf", help="closed-form area generating function")
    sp.add_argument("--family", required=True)
    sp.add_argument("--terms", type=int, default=12)
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("series", help="counts from one engine")
    sp.add_argument("--family", required=True)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--engine", choices=ENGINES, default="dp")
    sp.add_argument("--check", action="store_true", help="compare with every other engine")
    engine_opts(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("asym", help="certified growth constant and amplitude")
    sp.add_argument("--family", required=True)
    sp.add_argument("--tol", default="1/1000000000")
    sp.set_defaults(func=cmd_asym)

    sp = sub.add_parser("extrapolate", help="guess the limit of growth constants over levels")
    sp.add_argument("--levels", type=int, default=3)
    sp.add_argument("--terms", type=int, default=40, help="DP terms used for levels >= 4")
    sp.set_defaults(func=cmd_extrapolate)

    sp = sub.add_parser("solve", help="solved unknowns of a model as JSON")
    sp.add_argument("--family", required=True)
    sp.set_defaults(func=cmd_solve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hexpoly: error: {exc}", file=sys.stderr)
        return 2
    except Mismatch as exc:
        print(f"hexpoly: verification mismatch: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
