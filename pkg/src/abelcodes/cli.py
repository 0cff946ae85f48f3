"""Command line front end.

stdout carries one JSON document with sorted keys; human-readable tables go
to stderr.  Exit codes: 0 success, 1 usage or unreadable input, 2 validation
error (including the zero code), 3 budget exceeded, 4 engine/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .algebra import RootClass, Shape, orbit_partition
from .codes import (
    AbelianCode,
    BchSpec,
    apparent_distance_alpha,
    apparent_distance_code,
    apply_multiplier,
    bch_bound,
    bch_code,
    bch_dimension_bound,
    bch_runs,
    code_from_json,
    hd_search,
    multiply_dimension,
)
from .errors import AbelCodesError, BudgetExceeded, EngineMismatch, ValidationError
from .mad import mad
from .oracle import DEFAULT_SPAN_BUDGET, EXTENDED_SPAN_BUDGET, dimension, mad_bruteforce, min_distance_bruteforce

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4
VERSION = f"abelcodes {__version__}"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default, which is reserved for validation
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(source: str | None) -> dict:
    if source is None:
        raise _UsageError("--input is required")
    text = sys.stdin.read() if source == "-" else source if source.lstrip().startswith("{") else None
    if text is None:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise _UsageError(f"cannot read {source}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"invalid JSON input: {exc}") from None
    if not isinstance(obj, dict):
        raise _UsageError("input JSON must be an object")
    return obj


def _shape(obj: dict) -> Shape:
    try:
        return Shape(int(obj["q"]), tuple(int(x) for x in obj["r"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"input needs integer 'q' and list 'r': {exc!r}") from None


def _root_class(text: str, shape: Shape) -> RootClass:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"--root-class expects comma-separated integers, got {text!r}") from None
    if len(a) != shape.s:
        raise ValidationError(f"--root-class needs {shape.s} components")
    return RootClass(tuple(x % rj for x, rj in zip(a, shape.r)))


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


# -- commands ----------------------------------------------------------------


def cmd_orbits(args) -> dict:
    shape = _shape(_load(args.input))
    part = orbit_partition(shape)
    orbits = [{"members": [list(a) for a in o.members], "rep": list(o.rep), "size": len(o)} for o in part.orbits]
    rows = [["rep", "size"]] + [[str(o.rep), str(len(o))] for o in part.orbits]
    print(_table(rows), file=sys.stderr)
    if shape.s == 2:
        # orbit distribution: each entry labelled by its orbit's position in the list
        print("\n".join(" ".join(f"{int(x):>2}" for x in row) for row in part.labels), file=sys.stderr)
    return {"count": len(part), "orbits": orbits, "q": shape.q, "r": list(shape.r)}


def _code_summary(code: AbelianCode) -> dict:
    return {"code": code.to_json(), "dimension": code.dimension, "length": code.length}


def cmd_apdist(args) -> dict:
    code = code_from_json(_load(args.input))
    res = apparent_distance_code(code)
    value, trace = mad(code.hypermatrix())
    out = _code_summary(code)
    out.update(res.to_json())
    out["d_star_alpha"] = value
    out["bch_bound"] = bch_bound(code)
    if args.root_class:
        rc = _root_class(args.root_class, code.shape)
        out["root_class"] = {"d_star": apparent_distance_alpha(apply_multiplier(code, rc.multiplier)),
                             "multiplier": list(rc.multiplier)}
    if args.trace:
        out["trace"] = trace.to_json()
    print(f"dim={code.dimension} d*_alpha={value} d*(C)={res.value} classes={len(res.per_class)}", file=sys.stderr)
    return out


def cmd_bch(args) -> dict:
    obj = _load(args.input)
    shape = _shape(obj)
    if args.action == "build":
        spec = BchSpec.from_json(obj)
        code = bch_code(shape, spec)
        dbound = bch_dimension_bound(shape, spec)
        out = _code_summary(code)
        out.update({
            "bch_bound": bch_bound(code),
            "d_star_alpha": apparent_distance_alpha(code),
            "designed_distance": spec.designed_distance(),
            "dimension_bound": dbound,
            "dimension_bound_vacuous": dbound <= 0,
            "spec": spec.to_json(),
        })
        return out
    code = code_from_json(obj)
    runs = bch_runs(code)
    out = _code_summary(code)
    out.update({
        "bch_bound": bch_bound(code),
        "runs": [{"direction": k, "length": n, "start": b} for k, (n, b) in sorted(runs.items())],
    })
    if "gamma" in obj:
        spec = BchSpec.from_json(obj)
        dbound = bch_dimension_bound(shape, spec)
        out.update({"dimension_bound": dbound, "dimension_bound_vacuous": dbound <= 0, "spec": spec.to_json()})
    return out


def cmd_multiply(args) -> dict:
    code = code_from_json(_load(args.input))
    res = multiply_dimension(code, args.n)
    out = _code_summary(res.code)
    out.update({
        "d_star": res.d_star,
        "d_star_code": apparent_distance_code(res.code).value,
        "multiplier": res.multiplier,
        "n": args.n,
        "source": _code_summary(res.source),
    })
    return out


def cmd_verify(args) -> dict:
    code = code_from_json(_load(args.input))
    budget = args.budget if args.budget is not None else (EXTENDED_SPAN_BUDGET if args.extended else
                                                           DEFAULT_SPAN_BUDGET)
    m = code.hypermatrix()
    engine_mad = apparent_distance_alpha(code)
    oracle_mad = mad_bruteforce(m, budget=64 if args.extended else 20)
    engine_dim = code.dimension
    oracle_dim = dimension(code)
    d_code = apparent_distance_code(code).value
    d_min = min_distance_bruteforce(code, budget=budget)
    checks = {
        "camion_bound": d_code <= d_min,
        "dimension": engine_dim == oracle_dim,
        "mad": engine_mad == oracle_mad,
    }
    out = _code_summary(code)
    out.update({
        "checks": checks,
        "d_star_alpha": {"engine": engine_mad, "oracle": oracle_mad},
        "d_star_code": d_code,
        "dimension": {"engine": engine_dim, "oracle": oracle_dim},
        "min_distance": d_min,
        "ok": all(checks.values()),
    })
    rows = [["check", "engine", "oracle"], ["mad", str(engine_mad), str(oracle_mad)],
            ["dimension", str(engine_dim), str(oracle_dim)], ["d* <= d", str(d_code), str(d_min)]]
    print(_table(rows), file=sys.stderr)
    if not out["ok"]:
        raise EngineMismatch(json.dumps(out, sort_keys=True))
    return out


def cmd_search_hd(args) -> dict:
    shape = _shape(_load(args.input))
    res = hd_search(shape, args.target, budget=args.budget if args.budget is not None else 10_000)
    print(f"target d*={args.target}: best dimension {res.dimension}, {len(res.codes)} codes, "
          f"{res.evaluated} evaluations", file=sys.stderr)
    return {
        "codes": [c.to_json() for c in res.codes],
        "dimension": res.dimension,
        "evaluated": res.evaluated,
        "q": shape.q,
        "r": list(shape.r),
        "target_d": args.target,
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON file, '-' for stdin, or an inline JSON object")
    common.add_argument("--output", help="write the JSON result here instead of stdout")
    common.add_argument("--trace", action="store_true", help="include the mad trace")
    common.add_argument("--budget", type=int, help="enumeration budget")
    common.add_argument("--extended", action="store_true", help="raise the oracle budgets")
    common.add_argument("--root-class", help="also report d* for the multiplier a1,...,as")

    p = _Parser(prog="abelcodes", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=VERSION)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("orbits", parents=[common], help="q-orbit partition of a shape").set_defaults(func=cmd_orbits)
    sub.add_parser("apdist", parents=[common], help="apparent distance of a code").set_defaults(func=cmd_apdist)
    b = sub.add_parser("bch", parents=[common], help="build a BCH code or bound a code")
    b.add_argument("action", choices=["build", "bound"])
    b.set_defaults(func=cmd_bch)
    mp = sub.add_parser("multiply", parents=[common], help="multiply the dimension of a cyclic code")
    mp.add_argument("--n", type=int, required=True)
    mp.set_defaults(func=cmd_multiply)
    sub.add_parser("verify", parents=[common], help="engine against brute force").set_defaults(func=cmd_verify)
    sp = sub.add_parser("search-hd", parents=[common], help="maximum-dimension codes for a target d*")
    sp.add_argument("--target", type=int, required=True)
    sp.set_defaults(func=cmd_search_hd)
    return p


def _emit(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EngineMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except AbelCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    payload["version"] = VERSION
    _emit(payload, args.output)
    return EXIT_OK
