"""coxgrowth command line.

Exit codes: 0 success, 1 usage error, 2 domain failure (validation,
Andreev conditions, no root, ...), 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import growth3d as g3
from .coxeter import CoxeterMatrix, steinberg_growth, tits_bfs_sphere_sizes
from .errors import CoxGrowthError, InternalInconsistency, NotFound, ValidationError
from .polyalg import IntPoly, format_poly, parse_poly, taylor_coeffs
from .polyhedron import (
    GENERATORS,
    CombPolyhedron,
    andreev_check,
    contract_ridge,
    find_ridges,
    insert_edge,
    smallest_insertion_label,
    validate,
)
from .roots import classify, growth_rate

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class CliConfig:
    command: str
    digits: int = 10
    format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        if self.digits < 1:
            raise UsageError("--digits must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def _edge_arg(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.replace("-", ",").split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"edge must look like A,B, got {text!r}") from exc
    return a, b


def _poly_arg(text: str) -> IntPoly:
    s = text.strip()
    if "t" not in s and "x" not in s and not s.startswith("["):
        s = "[" + s + "]"
    try:
        return parse_poly(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=10, help="decimal digits of tau (default 10)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="coxgrowth", description="Growth of hyperbolic Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("growth", parents=[common], help="growth function report")
    s.add_argument("file")
    s.add_argument("--method", choices=("auto", "steinberg", "parry"), default="auto")

    s = sub.add_parser("rate", parents=[common], help="growth rate and its class")
    s.add_argument("file")

    s = sub.add_parser("classify-poly", parents=[common], help="Salem/Pisot classification of a polynomial")
    s.add_argument("coeffs", type=_poly_arg, help="ascending coefficients 'c0,c1,...' or 't^2 - 8*t + 1'")

    s = sub.add_parser("check", parents=[common], help="Andreev conditions")
    s.add_argument("file")

    s = sub.add_parser("ridges", parents=[common], help="list ridges")
    s.add_argument("file")

    s = sub.add_parser("contract", parents=[common], help="contract a <2,2,n,2,2> ridge")
    s.add_argument("file")
    s.add_argument("--edge", type=_edge_arg, required=True)
    s.add_argument("-o", "--output")

    s = sub.add_parser("insert", parents=[common], help="replace an ideal 4-valent vertex by an edge")
    s.add_argument("file")
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--mode", type=int, choices=(1, 2), required=True)
    s.add_argument("--label", type=int, required=True)
    s.add_argument("--max-label", type=int, help="search labels from --label up to this value")
    s.add_argument("-o", "--output")

    s = sub.add_parser("sweep", parents=[common], help="tau along one ridge as its label grows")
    s.add_argument("file")
    s.add_argument("--edge", type=_edge_arg, required=True)
    s.add_argument("--from", dest="n_from", type=int, required=True)
    s.add_argument("--to", dest="n_to", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("gen", parents=[common], help="generate a polyhedron")
    s.add_argument("family", choices=sorted(GENERATORS))
    s.add_argument("--m", type=int, default=2, help="marked edge label (dodecahedron)")
    s.add_argument("--n", type=int, default=5, help="size (loebell, loebell-ideal)")
    s.add_argument("--p", type=int, default=3)
    s.add_argument("--q", type=int, default=3)
    s.add_argument("--r", type=int, default=3)
    s.add_argument("-o", "--output")

    s = sub.add_parser("oracle", parents=[common], help="breadth-first sphere sizes vs Taylor coefficients")
    s.add_argument("file", help="Coxeter matrix JSON")
    s.add_argument("--depth", type=int, default=10)
    return p


def _emit(cfg: CliConfig, text: str, data) -> None:
    if cfg.format == "json":
        sys.stdout.write(json.dumps(data, indent=1) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "rank" in data:
        return CoxeterMatrix.from_json(data)
    return CombPolyhedron.from_json(data)


def _load_polyhedron(path: str) -> CombPolyhedron:
    obj = _load(path)
    if not isinstance(obj, CombPolyhedron):
        raise UsageError(f"{path} is a Coxeter matrix, expected a polyhedron")
    return obj


def _write_polyhedron(P: CombPolyhedron, out: Optional[str]) -> None:
    if out:
        P.save(out)
    else:
        sys.stdout.write(P.dumps() + "\n")


@dataclass
class _MatrixGrowth:
    f: object
    tau: object
    tau_class: object

    def text(self, digits: int) -> str:
        lines = [f"f(t) = {g3.format_ratfunc(self.f)}"]
        if self.tau is None:
            lines.append("finite group: no growth rate")
        else:
            lines.append(_rate_line(self.tau, self.tau_class, digits))
        return "\n".join(lines)

    def to_json(self, digits: int) -> dict:
        return {
            "f": {"num": list(self.f.num.coeffs), "den": list(self.f.den.coeffs)},
            "tau": self.tau.to_json(digits) if self.tau is not None else None,
            "class": self.tau_class.to_json() if self.tau_class is not None else None,
        }


def _matrix_growth(M: CoxeterMatrix, digits: int) -> _MatrixGrowth:
    f = steinberg_growth(M)
    if f.den.degree == 0:
        return _MatrixGrowth(f, None, None)
    tau = growth_rate(f, digits)
    return _MatrixGrowth(f, tau, classify(g3.tau_minimal_polynomial(f)))


def _growth_report(obj, method: str, digits: int):
    if isinstance(obj, CoxeterMatrix):
        if method == "parry":
            raise UsageError("--method parry needs a polyhedron")
        return _matrix_growth(obj, digits)
    rep = g3.polyhedral_growth(obj, digits)
    if method == "parry" or (method == "auto" and rep.compact):
        f_parry = g3.parry_growth(obj)
        if f_parry != rep.f:
            raise InternalInconsistency(f"vertex-sum and subset-sum growth functions differ: {f_parry} vs {rep.f}")
        rep.method = "parry" if method == "parry" else "parry+steinberg"
    return rep


def _rate_line(tau, cls, digits: int) -> str:
    exact = " (exact)" if tau.exact is not None else ""
    return f"tau = {tau.decimal(digits)}{exact}, class = {cls.describe()}"


def _cmd_growth(cfg, a):
    rep = _growth_report(_load(a.file), a.method, cfg.digits + 2)
    _emit(cfg, rep.text(cfg.digits), rep.to_json(cfg.digits))
    return EXIT_OK


def _cmd_rate(cfg, a):
    rep = _growth_report(_load(a.file), "steinberg", cfg.digits + 2)
    if rep.tau is None:
        raise NotFound("finite group: the growth function has no pole")
    data = {"tau": rep.tau.to_json(cfg.digits), "tau_decimal": rep.tau.decimal(cfg.digits), "class": rep.tau_class.to_json()}
    _emit(cfg, _rate_line(rep.tau, rep.tau_class, cfg.digits), data)
    return EXIT_OK


def _cmd_classify(cfg, a):
    v = classify(a.coeffs)
    factor = format_poly(v.factor) if v.factor is not None else "-"
    _emit(cfg, f"class = {v.describe()}\nnon-cyclotomic factor = {factor}", v.to_json())
    return EXIT_OK


def _cmd_check(cfg, a):
    P = _load_polyhedron(a.file)
    vr = validate(P)
    if not vr.ok:
        _emit(cfg, "invalid polyhedron:\n" + "\n".join(vr.errors), {"validation": vr.to_json()})
        return EXIT_DOMAIN
    ar = andreev_check(P)
    head = f"V={vr.n_vertices} E={vr.n_edges} F={vr.n_faces} ideal={vr.ideal_vertices} compact={str(vr.compact).lower()}"
    flags = "".join(f"\nflag: {f}" for f in vr.flags)
    verdict = "Andreev conditions hold" if ar.ok else "Andreev conditions FAIL: " + ", ".join(ar.failed)
    _emit(cfg, f"{head}{flags}\n{ar.summary()}\n{verdict}", {"validation": vr.to_json(), "andreev": ar.to_json()})
    return EXIT_OK if ar.ok else EXIT_DOMAIN


def _cmd_ridges(cfg, a):
    rs = find_ridges(_load_polyhedron(a.file))
    _emit(cfg, "\n".join(str(r) for r in rs) or "no ridges", [r.to_json() for r in rs])
    return EXIT_OK


def _cmd_contract(cfg, a):
    Q = contract_ridge(_load_polyhedron(a.file), a.edge)
    _write_polyhedron(Q, a.output)
    return EXIT_OK


def _cmd_insert(cfg, a):
    P = _load_polyhedron(a.file)
    if a.max_label is not None:
        n, Q = smallest_insertion_label(P, a.vertex, a.mode, range(a.label, a.max_label + 1))
        print(f"smallest admissible label: {n}", file=sys.stderr)
    else:
        Q = insert_edge(P, a.vertex, a.mode, a.label)
    _write_polyhedron(Q, a.output)
    return EXIT_OK


def _cmd_sweep(cfg, a):
    table = g3.deformation_sweep(_load_polyhedron(a.file), a.edge, a.n_from, a.n_to, cfg.digits, jobs=cfg.jobs)
    _emit(cfg, table.text(cfg.digits), table.to_json(cfg.digits))
    return EXIT_OK if table.ok else EXIT_INTERNAL


def _cmd_gen(cfg, a):
    fam = a.family
    if fam == "dodecahedron":
        P = GENERATORS[fam](a.m)
    elif fam in ("loebell", "loebell-ideal"):
        P = GENERATORS[fam](a.n)
    elif fam == "lambert":
        P = GENERATORS[fam](a.p, a.q, a.r)
    else:
        P = GENERATORS[fam]()
    _write_polyhedron(P, a.output)
    return EXIT_OK


def _cmd_oracle(cfg, a):
    obj = _load(a.file)
    if not isinstance(obj, CoxeterMatrix):
        raise UsageError("oracle needs a Coxeter matrix file with finite labels")
    bfs = tits_bfs_sphere_sizes(obj, a.depth)
    series = taylor_coeffs(steinberg_growth(obj), a.depth + 1)
    rows = [{"k": k, "bfs": b, "taylor": int(s), "match": b == s} for k, (b, s) in enumerate(zip(bfs, series))]
    lines = [f"{'k':>3} {'bfs':>10} {'taylor':>10}  match"]
    lines += [f"{r['k']:>3} {r['bfs']:>10} {r['taylor']:>10}  {'yes' if r['match'] else 'NO'}" for r in rows]
    _emit(cfg, "\n".join(lines), rows)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_INTERNAL


COMMANDS = {
    "growth": _cmd_growth,
    "rate": _cmd_rate,
    "classify-poly": _cmd_classify,
    "check": _cmd_check,
    "ridges": _cmd_ridges,
    "contract": _cmd_contract,
    "insert": _cmd_insert,
    "sweep": _cmd_sweep,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        cfg = CliConfig(args.command, args.digits, args.format, getattr(args, "jobs", 1))
        return COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(f"coxgrowth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"coxgrowth: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CoxGrowthError, ValueError, KeyError) as exc:
        if isinstance(exc, ValidationError) and exc.report is not None and hasattr(exc.report, "errors"):
            detail = "; ".join(exc.report.errors)
        else:
            detail = str(exc)
        print(f"coxgrowth: {type(exc).__name__}: {detail}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"coxgrowth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
