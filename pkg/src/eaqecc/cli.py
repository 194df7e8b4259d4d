"""Command-line interface: ``eaqecc <subcommand> ...``.

Exit codes: 0 success, 1 computation error (JSON on stderr), 2 usage, parse
or layout error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import checks, maps
from .codefile import format_code, format_matrix, read_code
from .codes import DEFAULT_BUDGET, MODES, LinearCode, dual, hull, relative_distance
from .entanglement import (
    contract,
    ea_css,
    ea_from_parity_check_hermitian,
    ea_hermitian,
    ea_symplectic,
    expand_symplectic,
    extend_self_orthogonal,
    quadratic_extension,
)
from .errors import (
    AmbientMismatch,
    CodeFileError,
    EAQECCError,
    LayoutMismatch,
    NoSubfieldRegistered,
    ShapeMismatch,
    SpecMismatch,
)
from .fields import field, find_normal_pair
from .geometry import c_from_indices, index_dual, radical_split, validate
from .gv import gv_asymptotic, gv_asymptotic_lhs, gv_feasible, gv_lhs_parts, gv_search
from .puncture import punctured_css_report, punctured_hermitian_report, punctured_symplectic_report

USAGE_ERRORS = (CodeFileError, LayoutMismatch, NoSubfieldRegistered, SpecMismatch, ShapeMismatch, AmbientMismatch)


class UsageError(Exception):
    pass


# -- output --------------------------------------------------------------------


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out


def render(report, fmt: str) -> str:
    """Render a dict (one record) or a list of dicts (a table)."""
    rows = report if isinstance(report, list) else None
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        recs = [_flatten(r) for r in (rows if rows is not None else [report])]
        buf = io.StringIO()
        fields = list(recs[0]) if recs else []
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(recs)
        return buf.getvalue()
    if rows is not None:
        return "".join(" ".join(f"{k}={v}" for k, v in _flatten(r).items()) + "\n" for r in rows)
    if "notation" in report:
        lines = [report["notation"]]
        lines += [f"  {k}: {v}" for k, v in _flatten({k: v for k, v in report.items() if k != "notation"}).items()]
        return "\n".join(lines) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in _flatten(report).items())


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(args) -> str:
    return args.format or "json"


# -- subcommand handlers --------------------------------------------------------


def cmd_params(args):
    C = read_code(args.code)
    if args.mode == "css":
        if not args.code2:
            raise UsageError("--mode css needs --code2")
        params = ea_css(C, read_code(args.code2), args.distance, args.budget)
    elif args.mode == "symplectic":
        params = ea_symplectic(C, args.distance, args.budget)
    elif args.mode == "hermitian":
        params = ea_hermitian(C, args.distance, args.budget)
    else:
        params = ea_from_parity_check_hermitian(C, args.distance, args.budget)
    _write(render(params.to_dict(), _fmt(args)), None)


def cmd_dual(args):
    C = read_code(args.code)
    D = dual(C, args.mode)
    _write(format_code(D, f"{args.mode} dual, dimension {D.dim}"), args.out)


def cmd_hull(args):
    C = read_code(args.code)
    H = hull(C, args.mode)
    _write(format_code(H, f"{args.mode} hull, dimension {H.dim}"), args.out)


def cmd_distance(args):
    A = read_code(args.code)
    B = read_code(args.minus) if args.minus else None
    kind = args.kind or ("symplectic" if A.layout == "symplectic" else "hamming")
    d = relative_distance(A, B, kind, args.budget, args.method)
    empty = d == math.inf
    report = {"kind": kind, "d": None if empty else int(d), "empty_difference": empty, "dim": A.dim}
    _write(render(report, _fmt(args)), None)


def cmd_expand(args):
    C = read_code(args.code)
    if args.inverse:
        if not args.m:
            raise UsageError("--inverse needs --m, the extension degree of the target field")
        if C.field.m != 1 or C.layout != "symplectic" or C.length % (2 * args.m):
            raise UsageError("--inverse needs a prime-field symplectic code of half-length m*n")
        F = field(C.field.p, args.m)
        ctx = maps.expansion_context(F, C.length // (2 * args.m))
        out = contract(ctx, C)
        _write(format_code(out, f"F_q-span of the image, dimension {out.dim}"), args.out)
        return
    if C.layout != "symplectic":
        raise LayoutMismatch("expand needs the symplectic layout")
    ctx = maps.expansion_context(C.field, C.n)
    out = expand_symplectic(ctx, C)
    _write(format_code(out, f"prime-field expansion, dimension {out.dim}"), args.out)


def cmd_pack(args):
    C = read_code(args.code)
    if args.inverse:
        if C.layout != "plain":
            raise LayoutMismatch("unpacking needs a plain-layout code over GF(q^2)")
        big = C.field
        pair = find_normal_pair(big)
        rows = np.vstack([C.basis, np.asarray(big.mul(pair.w, C.basis)).reshape(C.basis.shape)])
        out = LinearCode(big.subfield, maps.unpack(pair, rows).reshape(-1, 2 * C.length), "symplectic", 2 * C.length)
        _write(format_code(out, f"preimage under packing, dimension {out.dim}"), args.out)
        return
    if C.layout != "symplectic":
        raise LayoutMismatch("pack needs the symplectic layout")
    big = quadratic_extension(C.field)
    pair = find_normal_pair(big)
    packed = maps.pack(pair, C.basis).reshape(-1, C.n)
    _write(format_matrix(big, packed, "plain", f"packed rows, w = {pair.w}"), args.out)


def cmd_extend(args):
    C = read_code(args.code)
    E = extend_self_orthogonal(C)
    _write(format_code(E, f"self-orthogonal extension, c = {E.n - C.n}"), args.out)


def _indices(text: str, n: int) -> set[int]:
    if not text.strip():
        return set()
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--index must be a comma-separated list of integers, got {text!r}") from None
    bad = [v for v in vals if not 1 <= v <= n]
    if bad:
        raise UsageError(f"indices out of range 1..{n}: {bad}")
    return {v - 1 for v in vals}


def cmd_decomp(args):
    B = read_code(args.basis)
    if B.layout != "plain":
        raise LayoutMismatch("decomp needs a plain-layout basis file")
    prof = validate(B.field, B.generator, args.mode)
    I = _indices(args.index, prof.n)
    IR, IL = radical_split(prof, I)
    report = {
        "mode": args.mode,
        "blocks": [b.to_dict() for b in prof.blocks],
        "I": sorted(i + 1 for i in I),
        "I_perp": sorted(i + 1 for i in index_dual(prof, I)),
        "I_R": sorted(i + 1 for i in IR),
        "I_L": sorted(i + 1 for i in IL),
        "c": c_from_indices(prof, I),
    }
    _write(render(report, _fmt(args)), None)


def cmd_gv(args):
    if args.gv_cmd == "check":
        num, den = gv_lhs_parts(args.q, args.n, args.k, args.c, args.delta)
        report = {
            "q": args.q,
            "n": args.n,
            "k": args.k,
            "c": args.c,
            "delta": args.delta,
            "lhs": f"{num}/{den}",
            "lhs_float": num / den,
            "feasible": gv_feasible(args.q, args.n, args.k, args.c, args.delta),
        }
        _write(render(report, _fmt(args)), None)
    elif args.gv_cmd == "search":
        rows = gv_search(args.q, args.n_max, args.n_min, args.k_max, args.c_max)
        table = [{"n": n, "k": k, "c": c, "delta": d} for n, k, c, d in rows]
        _write(render(table, args.format or "csv"), None)
    else:
        lhs, rhs = gv_asymptotic_lhs(args.q, args.r, args.eps, args.lam)
        report = {
            "q": args.q,
            "R": args.r,
            "epsilon": args.eps,
            "lambda": args.lam,
            "lhs": lhs,
            "rhs": rhs,
            "margin": args.margin,
            "holds": gv_asymptotic(args.q, args.r, args.eps, args.lam, args.margin),
        }
        _write(render(report, _fmt(args)), None)


def cmd_puncture(args):
    C = read_code(args.code)
    if args.mode == "symplectic":
        params, chk, P = punctured_symplectic_report(C, args.c, args.distance, args.budget)
    elif args.mode == "hermitian":
        params, chk, P = punctured_hermitian_report(C, args.c, args.distance, args.budget)
    else:
        if not args.code2:
            raise UsageError("--mode css needs --code2 (C2, contained in C1 = --code)")
        params, chk, P = punctured_css_report(C, read_code(args.code2), args.c, args.distance, args.budget)
    report = params.to_dict()
    report["checks"] = chk
    _write(render(report, _fmt(args)), None)
    if args.out:
        Path(args.out).write_text(format_code(P, f"punctured code, c = {args.c}"))


def cmd_selftest(args):
    results = checks.run_all(quick=not args.full, only=args.only)
    report = {"passed": all(r.passed for r in results), "suites": [r.to_dict() for r in results]}
    if _fmt(args) == "json":
        _write(render(report, "json"), None)
    else:
        table = [{"suite": r.name, "status": r.status, "seconds": round(r.seconds, 3)} for r in results]
        _write(render(table, _fmt(args)), None)
    return 0 if report["passed"] else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    g = out.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output (default)")
    g.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV output")
    g.add_argument("--text", dest="format", action="store_const", const="text", help="plain text output")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max codewords to enumerate")
    search.add_argument("--distance", choices=("exact", "skip"), default="exact")

    dest = argparse.ArgumentParser(add_help=False)
    dest.add_argument("--out", help="write the code file here instead of stdout")

    p = argparse.ArgumentParser(prog="eaqecc", description="EAQECC parameters from classical codes")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("params", parents=[out, search], help="EA parameters of a code")
    s.add_argument("--mode", required=True, choices=("symplectic", "hermitian", "hermitian-check", "css"))
    s.add_argument("--code", required=True)
    s.add_argument("--code2")
    s.set_defaults(fn=cmd_params)

    for name, fn in (("dual", cmd_dual), ("hull", cmd_hull)):
        s = sub.add_parser(name, parents=[dest], help=f"{name} of a code (code file output)")
        s.add_argument("--mode", required=True, choices=MODES)
        s.add_argument("--code", required=True)
        s.set_defaults(fn=fn)

    s = sub.add_parser("distance", parents=[out], help="minimum (relative) distance")
    s.add_argument("--code", required=True)
    s.add_argument("--minus", help="code B; report min weight over code \\ B")
    s.add_argument("--kind", choices=("hamming", "symplectic"))
    s.add_argument("--method", choices=("full", "coset"), default="full")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(fn=cmd_distance)

    s = sub.add_parser("expand", parents=[dest], help="expand an F_q symplectic code to F_p")
    s.add_argument("--code", required=True)
    s.add_argument("--inverse", action="store_true", help="contract an F_p code back to F_q")
    s.add_argument("--m", type=int, help="extension degree for --inverse")
    s.set_defaults(fn=cmd_expand)

    s = sub.add_parser("pack", parents=[dest], help="pack an F_q symplectic code into GF(q^2)^n")
    s.add_argument("--code", required=True)
    s.add_argument("--inverse", action="store_true", help="unpack a GF(q^2) code")
    s.set_defaults(fn=cmd_pack)

    s = sub.add_parser("extend", parents=[dest], help="self-orthogonal extension C'")
    s.add_argument("--code", required=True)
    s.set_defaults(fn=cmd_extend)

    s = sub.add_parser("decomp", parents=[out], help="index calculus on a geometric decomposition")
    s.add_argument("--basis", required=True)
    s.add_argument("--index", default="", help="1-based indices, e.g. 1,3,4")
    s.add_argument("--mode", choices=("euclidean", "hermitian"), default="euclidean")
    s.set_defaults(fn=cmd_decomp)

    s = sub.add_parser("gv", help="Gilbert-Varshamov existence test")
    gsub = s.add_subparsers(dest="gv_cmd", required=True)
    g1 = gsub.add_parser("check", parents=[out])
    for name in ("q", "n", "k", "delta", "c"):
        g1.add_argument(f"--{name}", type=int, required=True)
    g2 = gsub.add_parser("search", parents=[out])
    g2.add_argument("--q", type=int, required=True)
    g2.add_argument("--n-max", type=int, required=True)
    g2.add_argument("--n-min", type=int, default=1)
    g2.add_argument("--k-max", type=int)
    g2.add_argument("--c-max", type=int)
    g3 = gsub.add_parser("asymptotic", parents=[out])
    g3.add_argument("--q", type=int, required=True)
    g3.add_argument("--r", type=float, required=True)
    g3.add_argument("--eps", type=float, required=True)
    g3.add_argument("--lambda", dest="lam", type=float, default=0.0)
    g3.add_argument("--margin", type=float, default=0.0)
    s.set_defaults(fn=cmd_gv)

    s = sub.add_parser("puncture", parents=[out, search, dest], help="EA code from a punctured code")
    s.add_argument("--mode", required=True, choices=("symplectic", "hermitian", "css"))
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--code", required=True)
    s.add_argument("--code2")
    s.set_defaults(fn=cmd_puncture)

    s = sub.add_parser("selftest", parents=[out], help="run the embedded property suites")
    s.add_argument("--full", action="store_true", help="full-size suites (slow)")
    s.add_argument("--only", nargs="+", choices=sorted(checks.SUITES))
    s.set_defaults(fn=cmd_selftest)
    return p


def _fail(code: int, exc: BaseException) -> int:
    err = {"error": type(exc).__name__, "message": str(exc)}
    for attr in ("needed", "budget", "claim", "expected", "actual"):
        if hasattr(exc, attr):
            err[attr] = getattr(exc, attr)
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.fn(args)
    except (UsageError, OSError) + USAGE_ERRORS as exc:
        return _fail(2, exc)
    except EAQECCError as exc:
        return _fail(1, exc)
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
