"""Command-line front end.

Exit codes: 0 pass, 1 fail (contradicts a theorem, so an implementation bug),
2 hypothesis violation or invalid parameters, 3 I/O or parse error.
Reports go to stdout (or ``--output``); diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .configs import GeneratorSpec, generate
from .dataset import (
    DatasetError,
    digest,
    dumps_grid,
    dumps_points,
    dumps_scalars,
    format_real,
    format_scalar,
    loads_grid,
    loads_points,
)
from .errors import DegenerateError, HypothesisViolation, NotApplicable
from .grid import GridSpec, check_grid_theorem, projection_similarity_check, proof_line
from .incidence import IncidenceReport, SpannedLine, check_sg_bound, enumerate_lines
from .kelly import find_witness
from .plane import PointSet, Slope
from .scalars import ScalarField

SCHEMA_VERSION = 1

EXIT_PASS, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_IO = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _line_json(s: SpannedLine, field: ScalarField) -> dict:
    line = s.line
    if isinstance(line, Slope):
        out = {"m": format_scalar(line.m, field), "c": format_scalar(line.c, field)}
    else:
        out = {"x0": format_scalar(line.x0, field)}
    out["members"] = list(s.members)
    out["count"] = s.count
    return out


def _incidence_json(rep: IncidenceReport, field: ScalarField) -> dict:
    return {
        "histogram": {str(k): v for k, v in rep.histogram.items()},
        "n_lines": rep.n_lines,
        "min_line": _line_json(rep.min_line, field),
        "lines": [_line_json(s, field) for s in rep.lines],
    }


def _base(command: str, data: bytes, seed, field: ScalarField) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_digest": digest(data),
        "seed": seed,
        "field": field.tag,
        "backend": field.backend,
    }
    if field.exact:
        out["sqrt_m"] = field.m
    return out


def _read(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _decode(data: bytes, path: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise _Exit(EXIT_IO, f"{path}: not valid UTF-8") from None


def _field_from_args(args) -> ScalarField:
    try:
        return ScalarField(args.field, args.backend, args.sqrt_m, args.tol)
    except ValueError as exc:
        raise _Exit(EXIT_HYPOTHESIS, str(exc)) from None


# commands ---------------------------------------------------------------------


def cmd_check_sg(args) -> tuple:
    data = _read(args.input)
    ps = loads_points(_decode(data, args.input), tol=args.tol)
    out = _base("check-sg", data, None, ps.field)
    out["n_points"] = len(ps)
    try:
        sg = check_sg_bound(ps)
        wit = find_witness(ps)
    except HypothesisViolation as exc:
        out["verdict"] = "hypothesis-violation"
        out["reason"] = str(exc)
        return out, EXIT_HYPOTHESIS
    passed = sg.passed and wit.angle_check and 2 <= wit.incidence <= wit.bound
    out["verdict"] = "pass" if passed else "fail"
    w = _line_json(wit.line, ps.field)
    w.update(
        point=wit.p,
        dist_sq=format_real(wit.dist_sq),
        bound=wit.bound,
        angle_check=wit.angle_check,
        normalized_line_points=[list(z[: ps.field.real_dim]) for z in wit.normalized_line_points],
    )
    out["witness"] = w
    out["min_line"] = _line_json(sg.witness, ps.field)
    out["histogram"] = {str(k): v for k, v in sg.report.histogram.items()}
    out["note"] = wit.note
    return out, EXIT_PASS if passed else EXIT_FAIL


def _load_grid_input(args):
    if args.gen:
        if args.gen != "random_grid":
            raise _Exit(EXIT_HYPOTHESIS, f"grid --gen supports only random_grid, got {args.gen!r}")
        field = _field_from_args(args)
        G = generate(GeneratorSpec("random_grid", field, a=args.a, b=args.b, seed=args.seed))
        return G, dumps_grid(G).encode(), args.seed
    if not args.input:
        raise _Exit(EXIT_HYPOTHESIS, "grid needs an input file or --gen random_grid")
    data = _read(args.input)
    return loads_grid(_decode(data, args.input), tol=args.tol), data, None


def cmd_grid(args) -> tuple:
    G, data, seed = _load_grid_input(args)
    rep = check_grid_theorem(G)
    out = _base("grid", data, seed, G.field)
    out["sizes"] = [len(G.A), len(G.B)]
    out["verdict"] = rep.verdict
    w = _line_json(rep.witness, G.field)
    w["grid_indices"] = [list(G.index(k)) for k in rep.witness.members]
    out["witness"] = w
    out["witness_count"] = rep.witness_count
    out["projections"] = {
        "A_prime": [format_scalar(x, G.field) for x in rep.projections[0]],
        "B_prime": [format_scalar(y, G.field) for y in rep.projections[1]],
    }
    if rep.similarity_params is not None:
        m, c = rep.similarity_params
        out["similarity_params"] = {"m": format_scalar(m, G.field), "c": format_scalar(c, G.field)}
        chk = projection_similarity_check(G, rep.witness.line)
        out["projection_check"] = {
            "passed": chk.passed,
            "maps_onto": chk.maps_onto,
            "ratio_ok": chk.ratio_ok,
            "extremal": chk.extremal,
        }
        passed = rep.passed and chk.passed
    else:
        out["similarity_params"] = None
        out["projection_check"] = None
        passed = rep.passed
    pl = proof_line(G)
    out["proof_line"] = _line_json(pl, G.field)
    out["histogram"] = {str(k): v for k, v in rep.report.histogram.items()}
    out["verdict"] = "pass" if passed else "fail"
    return out, EXIT_PASS if passed else EXIT_FAIL


def cmd_enumerate(args) -> tuple:
    data = _read(args.input)
    ps = loads_points(_decode(data, args.input), tol=args.tol)
    rep = enumerate_lines(ps)
    out = _base("enumerate", data, None, ps.field)
    out["n_points"] = len(ps)
    out.update(_incidence_json(rep, ps.field))
    return out, EXIT_PASS


def cmd_gen(args) -> tuple:
    field = _field_from_args(args)
    if args.kind == "hesse":
        if args.field != "C" or args.backend != "exact" or args.sqrt_m != 3:
            raise _Exit(EXIT_HYPOTHESIS, "hesse needs --field C --backend exact --sqrt-m 3")
    if args.kind == "simplex4" and args.backend == "exact" and args.sqrt_m != 5:
        raise _Exit(EXIT_HYPOTHESIS, "exact simplex4 needs --sqrt-m 5")
    spec = GeneratorSpec(args.kind, field, n=args.n, a=args.a, b=args.b, eps=args.eps, seed=args.seed)
    obj = generate(spec)
    if isinstance(obj, PointSet):
        return dumps_points(obj), EXIT_PASS
    if isinstance(obj, GridSpec):
        return dumps_grid(obj), EXIT_PASS
    return dumps_scalars(obj, field), EXIT_PASS


# output -----------------------------------------------------------------------


def _text(report: dict) -> str:
    lines = []
    for key, val in report.items():
        if key in ("lines",):
            lines.append(f"{key}: {len(val)} entries")
        elif isinstance(val, dict):
            lines.append(f"{key}:")
            lines += [f"  {k}: {json.dumps(v)}" for k, v in val.items()]
        else:
            lines.append(f"{key}: {json.dumps(val)}")
    return "\n".join(lines) + "\n"


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise _Exit(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="relative float incidence tolerance")
    common.add_argument("--output", "-o", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="record wall-clock seconds in the report")

    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--field", choices=("C", "H"), default="C")
    gen_opts.add_argument("--backend", choices=("exact", "float"), default="float")
    gen_opts.add_argument("--sqrt-m", dest="sqrt_m", type=int, default=3)
    gen_opts.add_argument("--seed", type=int, default=0)
    gen_opts.add_argument("--a", type=int, default=5, help="|A| for grids")
    gen_opts.add_argument("--b", type=int, default=5, help="|B| for grids")

    p = argparse.ArgumentParser(prog="sylgal", description="Sylvester-Gallai type incidence checks over C and H.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-sg", parents=[common], help="minimum-distance witness and the 5 / 24 bound")
    s.add_argument("input")
    s.set_defaults(func=cmd_check_sg)

    s = sub.add_parser("grid", parents=[common, gen_opts], help="A x B grid theorem")
    s.add_argument("input", nargs="?")
    s.add_argument("--gen", help="generate the grid instead (random_grid)")
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("enumerate", parents=[common], help="all spanned lines and the incidence histogram")
    s.add_argument("input")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("gen", parents=[common, gen_opts], help="write a generated dataset")
    s.add_argument("kind", choices=("hesse", "random_points", "random_grid", "simplex4", "near_collinear"))
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--eps", type=float, default=1e-3)
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result, code = args.func(args)
    except _Exit as exc:
        print(f"sylgal: {exc}", file=sys.stderr)
        return exc.code
    except DatasetError as exc:
        print(f"sylgal: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (HypothesisViolation, DegenerateError, NotApplicable) as exc:
        print(f"sylgal: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    try:
        if isinstance(result, dict):
            result["timing"] = round(time.perf_counter() - start, 6) if args.timing else None
            text = _text(result) if args.format == "text" else json.dumps(result, indent=2) + "\n"
        else:
            text = result
        _emit(text, args.output)
    except _Exit as exc:
        print(f"sylgal: {exc}", file=sys.stderr)
        return exc.code
    if code == EXIT_FAIL:
        print("sylgal: verdict FAIL contradicts a theorem; this indicates an implementation bug", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
