"""Command line entry point: ``hermoments <subcommand> ...``.

Big integers are always written as decimal strings. Exit codes: 0 success,
1 numerical or consistency failure, 2 usage error. Failures also print a
one-line JSON error record on stderr.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from fractions import Fraction

from . import __version__, checks, hermite, lattice, moments, series_analysis, spectra, wigner
from .akl import akl_poly
from .errors import ConsistencyError, DomainError, NumericalError, UsageError

THREADS_ENV = "HERMOMENTS_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(v) for v in row])
    return buf.getvalue()


def _json(obj) -> str:
    def default(o):
        if isinstance(o, Fraction):
            return _num(o)
        raise TypeError(type(o).__name__)

    return json.dumps(obj, indent=2, sort_keys=False, default=default) + "\n"


def _coeff_line(poly) -> str:
    return ",".join(_num(c) for c in poly.high_to_low()) + "\n"


# subcommands: each returns (text, ok)


def cmd_hermite(args):
    pair = hermite.hermite_monic(args.n)
    table = pair.coefficient_table()
    if args.format == "csv":
        return _csv(["k", "coefficient"], table), True
    if args.format == "json":
        return _json({"n": args.n, "coefficients": [{"k": k, "a": _num(a)} for k, a in table]}), True
    return _coeff_line(pair.h), True


def cmd_moments(args):
    poly = moments.moment_by_route(args.k, args.route)
    catalan, s_k = moments.coefficient_targets(args.k)
    leading, second = poly.coeff(args.k + 1), poly.coeff(args.k)
    ok = (leading, second) == (catalan, s_k)
    record = {
        "k": args.k,
        "route": args.route,
        "coefficients": [_num(c) for c in poly.high_to_low()],
        "leading": _num(leading),
        "catalan": _num(catalan),
        "second": _num(second),
        "s_k": _num(s_k),
        "leading_match": leading == catalan,
        "second_match": second == s_k,
    }
    if args.eval_n is not None:
        value = poly(args.eval_n)
        record["eval_n"] = args.eval_n
        record["value"] = _num(value)
        if args.eval_n >= 2 * args.k:
            newton = moments.power_sums_exact(args.eval_n, 2 * args.k)[2 * args.k]
            record["newton_match"] = value == newton
            ok = ok and value == newton
    if args.format == "json":
        return _json(record), ok
    if args.format == "csv":
        rec = dict(record, coefficients=",".join(record["coefficients"]))
        return _csv(list(rec), [list(rec.values())]), ok
    out = _coeff_line(poly)
    if args.eval_n is not None:
        out += f"{record['value']}\n"
    return out, ok


def cmd_akl(args):
    poly = akl_poly(args.k, args.l)
    if args.format == "csv":
        return _csv(["power", "coefficient"], [(i, c) for i, c in enumerate(poly.coeffs)]), True
    if args.format == "json":
        return _json({"k": args.k, "l": args.l, "coefficients": [_num(c) for c in poly.high_to_low()]}), True
    return _coeff_line(poly), True


def cmd_paths(args):
    if args.count_only:
        count = lattice.count_paths(args.k)
        if args.format == "json":
            return _json({"k": args.k, "count": count}), True
        if args.format == "csv":
            return _csv(["k", "count"], [(args.k, count)]), True
        return f"{count}\n", True
    rows = []
    for idx, p in enumerate(lattice.iter_paths(args.k)):
        nodes = "->".join(f"({i},{j})" for i, j in p.nodes)
        weight = ",".join(_num(c) for c in lattice.path_weight(p).high_to_low()) if args.weights else None
        rows.append((idx, nodes, weight))
    if args.format == "json":
        items = [{"index": i, "nodes": n, **({"weight": w.split(",")} if w else {})} for i, n, w in rows]
        out = {"k": args.k, "count": len(rows), "paths": items}
        if args.weights:
            out["A_k1"] = [_num(c) for c in lattice.reconstruct_A(args.k).high_to_low()]
        return _json(out), True
    if args.format == "csv":
        header = ["index", "nodes"] + (["weight"] if args.weights else [])
        return _csv(header, [r if args.weights else r[:2] for r in rows]), True
    lines = [f"{n} {w}" if w else n for _, n, w in rows]
    return "\n".join(lines) + "\n", True


def cmd_gf_check(args):
    grid = series_analysis.rational_grid(args.grid)
    rows, ok = [], True
    for r in series_analysis.gf_check_rows(args.n_max, grid):
        ok = ok and r["bound_pass"] and r["residual_zero"]
        rows.append((r["n"], r["z"], float(r["f_n"]), r["bound_pass"], r["residual_zero"]))
    return _csv(["n", "z", "f_n", "bound_pass", "residual_zero"], rows), ok


def cmd_roots(args):
    rs = spectra.hermite_roots(args.n)
    rows = [("root", j, float(x)) for j, x in enumerate(rs.roots)]
    rows += [("scaled_root", j, float(x)) for j, x in enumerate(rs.scaled)]
    if args.moments:
        for k in range(args.moments + 1):
            rows.append(("scaled_moment", k, spectra.empirical_moment(rs, k)))
            rows.append(("semicircle_moment", k, float(spectra.semicircle_moment(k))))
    return _csv(["quantity", "index", "value"], rows), True


def cmd_wigner_mc(args):
    cfg = wigner.EnsembleConfig(args.n, args.dist, args.c, args.samples, args.seed)
    stats = wigner.mc_expected_charpoly(cfg, args.threads)
    worst = max(stats.z_scores())
    out = {
        "config": {"n": cfg.n, "dist": cfg.dist, "c": cfg.c, "samples": cfg.samples, "seed": cfg.seed},
        "coefficients": stats.records(),
        "max_abs_z": worst,
    }
    if args.hist:
        h = wigner.spectrum_histogram(cfg, args.hist, threads=args.threads)
        out["histogram"] = [
            {"lo": float(lo), "hi": float(hi), "mass": float(m), "semicircle": float(s)}
            for lo, hi, m, s in zip(h.edges[:-1], h.edges[1:], h.masses, h.semicircle)
        ]
        out["total_variation"] = h.total_variation
    return _json(out), True


def cmd_verify_all(args):
    results = checks.run_all(quick=args.quick, threads=args.threads)
    if args.format == "json":
        text = _json([{"check": r.name, "pass": r.ok, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results])
    elif args.format == "csv":
        text = _csv(["check", "status", "detail"], [(r.name, "PASS" if r.ok else "FAIL", r.detail) for r in results])
    else:
        width = max(len(r.name) for r in results)
        text = "".join(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.detail}  ({r.seconds:.1f}s)\n" for r in results)
    return text, all(r.ok for r in results)


def _default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}")
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write output here and a run manifest next to it")
    common.add_argument("--threads", type=int, default=None, help=f"worker threads (env {THREADS_ENV})")

    p = _Parser(prog="hermoments", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hermite", parents=[common], help="coefficients of the monic Hermite polynomial")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_hermite)

    s = sub.add_parser("moments", parents=[common], help="M_n(2k) as a polynomial in n")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--route", choices=moments.ROUTES, default="interp")
    s.add_argument("--eval-n", type=int, default=None)
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("akl", parents=[common], help="coefficients of A(k, l)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(func=cmd_akl)

    s = sub.add_parser("paths", parents=[common], help="lattice paths from the origin to (k, 0)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--weights", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("gf-check", parents=[common], help="exact fixed-point and bound checks (CSV)")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--grid", type=int, default=6, help="number of points j/(3G), j=1..G")
    s.set_defaults(func=cmd_gf_check)

    s = sub.add_parser("roots", parents=[common], help="numerical Hermite roots (CSV)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--moments", type=int, default=0, metavar="KMAX")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("wigner-mc", parents=[common], help="Monte Carlo expected characteristic polynomial (JSON)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dist", choices=wigner.DISTRIBUTIONS, default="rademacher")
    s.add_argument("--c", type=float, default=1.0)
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=wigner.DEFAULT_SEED)
    s.add_argument("--hist", type=int, default=0, metavar="BINS")
    s.set_defaults(func=cmd_wigner_mc)

    s = sub.add_parser("verify-all", parents=[common], help="run every cross-route invariant")
    s.add_argument("--quick", action="store_true")
    s.set_defaults(func=cmd_verify_all)
    return p


def _manifest(args, text: str) -> dict:
    params = {k: v for k, v in vars(args).items() if k not in ("func", "out", "command")}
    return {
        "subcommand": args.command,
        "parameters": params,
        "seed": getattr(args, "seed", None),
        "version": __version__,
        "sha256": hashlib.sha256(text.encode()).hexdigest(),
    }


def _fail(code: int, exc: Exception) -> int:
    record = {"error": type(exc).__name__, "message": str(exc)}
    record.update(getattr(exc, "diagnostics", {}) or {})
    print(json.dumps(record, default=str), file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads is None:
            args.threads = _default_threads()
        text, ok = args.func(args)
    except UsageError as exc:
        return _fail(2, exc)
    except (ConsistencyError, NumericalError, DomainError) as exc:
        return _fail(1, exc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        with open(args.out + ".manifest.json", "w", encoding="utf-8") as fh:
            fh.write(_json(_manifest(args, text)))
    else:
        sys.stdout.write(text)
    if not ok:
        return _fail(1, ConsistencyError(f"{args.command}: a check failed"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
