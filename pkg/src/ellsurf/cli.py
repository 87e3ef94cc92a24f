"""Command-line front end.

Exit codes: 0 success, 1 soundness violation or internal error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import clauses as cl
from . import conformance
from .classify import METHODS, SurfaceJ0, SurfaceJ1728, classify
from .errors import EllsurfError
from .geometry import (
    EllipticSurfaceModel,
    Place,
    analyze_section_j1728,
    bad_places,
    euler_sum,
    is_del_pezzo_degree1,
    is_rational_surface,
    isotriviality,
    kodaira_type,
)
from .local_root import Family, Mode, global_root
from .poly import Poly, format_poly, helfgott_shape, multiplicative_part
from .scanner import WORKERS_ENV, cross_validate, scan


class UsageError(Exception):
    pass


def _emit(obj: dict, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(obj, sort_keys=True, indent=2))


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--a", type=int, help="j0: coefficient of T^6")
    p.add_argument("--b", type=int, help="j0: constant coefficient")
    p.add_argument("--A", dest="A", type=int, help="j1728: A")
    p.add_argument("--B", dest="B", type=int, help="j1728: B")
    p.add_argument("--C", dest="C", type=int, help="j1728: C")


def _surface(args: argparse.Namespace) -> SurfaceJ0 | SurfaceJ1728:
    if args.family == "j0":
        for flag in ("a", "b"):
            if getattr(args, flag) is None:
                raise UsageError(f"--{flag} is required for --family j0")
        try:
            return SurfaceJ0(args.a, args.b)
        except EllsurfError as e:
            raise UsageError(f"--a/--b: {e}") from e
    for flag in ("A", "B", "C"):
        if getattr(args, flag) is None:
            raise UsageError(f"--{flag} is required for --family j1728")
    try:
        return SurfaceJ1728(args.A, args.B, args.C)
    except EllsurfError as e:
        raise UsageError(f"--A/--B/--C: {e}") from e


def _load_tables(path: str | None) -> dict | None:
    if not path:
        return None
    with open(path) as fh:
        data = json.load(fh)
    return {k: cl.table_from_json(v) for k, v in data.items()}


def _literal_kw(args: argparse.Namespace) -> dict:
    kw: dict = {}
    if args.method == "literal":
        tables = _load_tables(args.tables)
        if tables:
            kw["tables"] = tables
        if args.family == "j0":
            kw["reading"] = args.reading
    elif args.tables:
        raise UsageError("--tables only applies with --method literal")
    return kw


def _poly(text: str, flag: str) -> Poly:
    try:
        return Poly.parse(text)
    except EllsurfError as e:
        raise UsageError(f"{flag}: {e}") from e


# subcommands ----------------------------------------------------------------------------

def cmd_curve_root(args: argparse.Namespace) -> int:
    tr = global_root(args.delta, args.family, args.mode)
    obj = {
        "family": args.family,
        "delta": args.delta,
        "mode": Mode(args.mode).value,
        "sign": tr.sign,
        "factors": [{"place": f.place, "sign": f.sign, "rule": f.rule} for f in tr.factors],
    }
    lines = [f"W = {tr.sign:+d}"] + [f"  W_{f.place} = {f.sign:+d}  ({f.rule})" for f in tr.factors]
    _emit(obj, args.format, "\n".join(lines))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    surface = _surface(args)
    v = classify(surface, args.method, **_literal_kw(args))
    obj = v.to_dict()
    if isinstance(surface, SurfaceJ0) and surface.has_representation:
        obj["representation"] = {"A": surface.A, "B": surface.B, "C": surface.C, "swapped": surface.swapped}
    _emit(obj, args.format, f"{v.label}\n" + "\n".join(f"  {t}" for t in v.trail))
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    rep = scan(_surface(args), args.height, args.workers)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
        return 0
    text = (
        f"{rep.family} H={rep.H}: W+={rep.wplus} W-={rep.wminus} skipped={rep.skipped}"
        + ("" if not rep.constant_observed else " (constant)")
    )
    _emit(rep.to_dict(), args.format, text)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    val = cross_validate(_surface(args), args.height, args.method, args.workers, **_literal_kw(args))
    _emit(val.to_dict(), args.format, f"{val.status} ({val.verdict.label}, H={val.H})")
    return 0 if val.ok else 1


def _model(args: argparse.Namespace) -> EllipticSurfaceModel:
    return EllipticSurfaceModel(_poly(args.A, "--A"), _poly(args.B, "--B"))


def cmd_kodaira(args: argparse.Namespace) -> int:
    S = _model(args)
    if args.place:
        place = Place.infinity() if args.place in ("inf", "1/T") else Place(_poly(args.place, "--place"))
        kt = kodaira_type(S, place)
        _emit({"place": str(place), "type": str(kt), "euler": kt.euler}, args.format, f"{place}: {kt}")
        return 0
    fibers = [{"place": str(p), "degree": p.degree, "type": str(k), "euler": k.euler} for p, k in bad_places(S)]
    obj = {
        "surface": str(S),
        "rational": is_rational_surface(S.A, S.B),
        "del_pezzo_degree1": is_del_pezzo_degree1(S),
        "isotriviality": isotriviality(S).value,
        "fibers": fibers,
        "euler_sum": euler_sum(S),
    }
    text = "\n".join(f"{f['place']}: {f['type']}" for f in fibers) + f"\neuler sum {obj['euler_sum']}"
    _emit(obj, args.format, text)
    return 0


def cmd_section(args: argparse.Namespace) -> int:
    res = analyze_section_j1728(_poly(args.A, "--A"))
    obj = {
        "kind": res.kind,
        "depressed": format_poly(res.depressed),
        "shift": str(res.shift),
        "alpha": None if res.alpha is None else str(res.alpha),
        "beta": None if res.beta is None else str(res.beta),
    }
    _emit(obj, args.format, str(res))
    return 0


def cmd_places(args: argparse.Namespace) -> int:
    S = _model(args)
    M = multiplicative_part(S.A, S.B)
    shape = helfgott_shape(M)
    obj = {"M": format_poly(M.poly), "at_infinity": M.at_infinity, "unconditional": shape.unconditional, "shape": shape.label}
    _emit(obj, args.format, f"M = {M}\nshape: {shape.label}")
    return 0


def cmd_conformance(args: argparse.Namespace) -> int:
    rep = conformance.build_report(args.height, args.sweep, args.sweep_bound, args.mode_bound, args.seed)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(rep, fh, sort_keys=True, indent=1)
    _emit(rep, args.format, conformance.summarize(rep))
    return 0


# parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ellsurf", description="Root numbers on isotrivial elliptic surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp: argparse.ArgumentParser, choices=("json", "text")) -> None:
        sp.add_argument("--format", choices=choices, default="json")

    def method(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--method", choices=METHODS, default="local")
        sp.add_argument("--reading", choices=("v3", "v2"), default="v3", help="valuation used for k in the w3 lemma")
        sp.add_argument("--tables", help="JSON file replacing lemma tables (literal method)")

    def workers(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--workers", type=int, default=None, help=f"worker processes (default: ${WORKERS_ENV} or CPU count)")

    sp = sub.add_parser("curve-root", help="root number of one curve")
    sp.add_argument("--family", choices=[f.value for f in Family], required=True)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PER_PRIME.value)
    fmt(sp)
    sp.set_defaults(func=cmd_curve_root)

    sp = sub.add_parser("classify", help="is the fiber root number constant?")
    _family_args(sp)
    method(sp)
    fmt(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("scan", help="census of fiber root numbers up to a height")
    _family_args(sp)
    sp.add_argument("--height", type=int, required=True)
    workers(sp)
    fmt(sp, ("json", "csv", "text"))
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("validate", help="check the classifier against a scan")
    _family_args(sp)
    sp.add_argument("--height", type=int, required=True)
    method(sp)
    workers(sp)
    fmt(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("kodaira", help="singular fibers of y^2 = x^3 + A x + B")
    sp.add_argument("--A", dest="A", default="0")
    sp.add_argument("--B", dest="B", default="0")
    sp.add_argument("--place", help="polynomial of a finite place, or 'inf'")
    fmt(sp)
    sp.set_defaults(func=cmd_kodaira)

    sp = sub.add_parser("section", help="section analysis for y^2 = x^3 + A(T) x, deg A = 4")
    sp.add_argument("--A", dest="A", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_section)

    sp = sub.add_parser("places", help="multiplicative places and their shape")
    sp.add_argument("--A", dest="A", default="0")
    sp.add_argument("--B", dest="B", default="0")
    fmt(sp)
    sp.set_defaults(func=cmd_places)

    sp = sub.add_parser("conformance", help="audit the lemma tables")
    sp.add_argument("--height", type=int, default=50)
    sp.add_argument("--sweep", type=int, default=200)
    sp.add_argument("--sweep-bound", type=int, default=30)
    sp.add_argument("--mode-bound", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--output", help="also write the JSON report here")
    fmt(sp, ("json", "text"))
    sp.set_defaults(func=cmd_conformance)
    return p


def _check(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    for flag in ("height", "workers"):
        val = getattr(args, flag, None)
        if val is not None and val < 1:
            parser.error(f"--{flag} must be >= 1")
    if getattr(args, "delta", None) == 0:
        parser.error("--delta must be nonzero")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    _check(args, parser)
    try:
        return args.func(args)
    except (UsageError, EllsurfError) as e:
        print(f"ellsurf {args.command}: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # noqa: BLE001 - reported as an internal error
        print(f"ellsurf {args.command}: internal error: {e!r}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
