"""Command-line interface: tables, approximations and contour experiments as CSV/JSON.

Ranges are written ``start:stop:step`` (stop inclusive) or as a single value.
Usage errors exit with status 2, numerical failures with status 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from importlib import resources

import numpy as np

from . import arith, dirichlet, formulas, gibbs, perron, zeros
from .errors import AccuracyError, ContractError, DomainError, ZetaExplicitError

RECORD_COLUMNS = ["x", "exact", "midpoint", "smooth", "zero_sum", "real_zero_sum", "total"]


class UsageError(Exception):
    pass


def parse_range(text: str) -> np.ndarray:
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if len(nums) == 1:
        return np.array(nums)
    if len(nums) != 3:
        raise UsageError(f"range must be start:stop:step, got {text!r}")
    a, b, step = nums
    if step <= 0:
        raise UsageError("range step must be positive")
    if b < a:
        raise UsageError("range is empty (stop < start)")
    n = int(math.floor((b - a) / step + 1e-9)) + 1
    # rounding keeps grid values (hence output) identical across platforms
    return np.round(a + step * np.arange(n), 12)


def _num(v):
    if v is None:
        return None
    if isinstance(v, (complex, np.complexfloating)):
        return [_num(v.real), _num(v.imag)]
    if isinstance(v, (int, np.integer)):
        return int(v)
    v = float(v)
    return v if math.isfinite(v) else None


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, list):
        return f"{v[0]!r}{v[1]:+}j"
    return repr(v)


def emit(command: str, records: list[dict], fmt: str, meta: dict | None = None, out=None) -> None:
    out = out or sys.stdout
    records = [{k: _num(v) if not isinstance(v, str) else v for k, v in r.items()} for r in records]
    if fmt == "json":
        doc = {"command": command, "meta": meta or {}, "records": records}
        out.write(json.dumps(doc, indent=1, sort_keys=False) + "\n")
        return
    columns = list(records[0].keys()) if records else RECORD_COLUMNS
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in records:
        w.writerow([r[c] if isinstance(r.get(c), str) else _fmt(r.get(c)) for c in columns])
    out.write(buf.getvalue())


def schema() -> dict:
    return json.loads((resources.files("zetaexplicit") / "data" / "cli_schema.json").read_text())


# commands -------------------------------------------------------------------------------


def _catalog(args):
    if getattr(args, "zeros", None):
        return zeros.load_zeros(args.zeros)
    return zeros.default_zeta_catalog()


def _record(x, exact, midpoint, smooth=None, zero_sum=None, real_zero_sum=None, total=None) -> dict:
    return dict(x=x, exact=exact, midpoint=midpoint, smooth=smooth, zero_sum=zero_sum,
                real_zero_sum=real_zero_sum, total=total)


def cmd_tabulate(args):
    fid = arith.resolve_id(args.id)
    xs = parse_range(args.x)
    return [_record(x, arith.summatory_exact(fid, x), arith.summatory_midpoint(fid, x)) for x in xs], {"id": fid.value}


def cmd_approx(args):
    fid = arith.resolve_id(args.id)
    xs = parse_range(args.x)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = formulas.approximate(fid, xs, args.N, args.M, _catalog(args))
    recs = [
        _record(x, arith.summatory_exact(fid, x), arith.summatory_midpoint(fid, x),
                res.smooth[i], res.zero_sum[i], res.real_zero_sum[i], res.total[i])
        for i, x in enumerate(xs)
    ]
    meta = {"id": fid.value, "N": args.N, "M": args.M, "warnings": [str(w.message) for w in caught]}
    if res.excluded_real_zero_sum is not None:
        meta["excluded_real_zero_sum"] = [_num(v) for v in res.excluded_real_zero_sum]
    return recs, meta


def cmd_rvm(args):
    xs = parse_range(args.x)
    vals = np.atleast_1d(formulas.rvm_pi(xs, args.N, _catalog(args)))
    recs = [_record(x, arith.prime_count(x), arith.prime_count_midpoint(x), total=v) for x, v in zip(xs, vals)]
    return recs, {"N": args.N}


def _config(args):
    return perron.QuadratureConfig(abs_tol=args.tol)


def cmd_perron(args):
    fid = arith.resolve_id(args.id)
    x = float(args.x)
    Ts = parse_range(args.T)
    prof = perron.integral_vs_T_profile(fid, x, args.c, Ts, _config(args))
    target = arith.summatory_midpoint(fid, x)
    recs = [{"T": T, "value": v, "midpoint": target, "difference": v - target} for T, v in zip(Ts, prof)]
    return recs, {"id": fid.value, "x": x, "c": args.c}


def cmd_rectangle(args):
    fid = arith.resolve_id(args.id)
    rect = perron.RectangleContour(args.c, args.a, args.T)
    cmp = perron.residue_vs_rectangle(fid, float(args.x), rect, _catalog(args), _config(args))
    s = cmp.sides
    rec = {"x": float(args.x), "c": cmp.rectangle.c, "a": cmp.rectangle.a, "T": cmp.rectangle.T,
           "I1": s.I1, "I2": s.I2, "I3": s.I3, "I4": s.I4, "total": s.total,
           "residue_sum": cmp.residue_sum, "difference": cmp.difference}
    meta = {"id": fid.value, "nudges": list(cmp.rectangle.nudges), "enclosed": list(cmp.enclosed), "ok": cmp.ok}
    return [rec], meta


def cmd_gibbs(args):
    if args.jump is not None:
        fid = gibbs.RVM if args.id == "rvm" else arith.resolve_id(args.id).value
        r = gibbs.measure_overshoot(fid, args.jump, args.N, _catalog(args), args.window)
        rec = {"x_jump": r.x_jump, "jump_size": r.jump_size, "x_min": r.x_min, "y_min": r.y_min,
               "x_max": r.x_max, "y_max": r.y_max, "d": r.d}
        return [rec], {"id": str(fid), "N": args.N, "window": r.window, "g": gibbs.gibbs_constant()}
    recs = []
    for n in args.n:
        x, y = gibbs.first_peak(n)
        recs.append({"n": n, "x_peak": x, "y_peak": y, "predicted_x": math.pi / 2 + math.pi / (2 * n)})
    return recs, {"g": gibbs.gibbs_constant()}


def cmd_coeffs(args):
    fid = arith.resolve_id(args.id)
    desc = formulas.descriptor(fid)
    printed = json.loads((resources.files("zetaexplicit") / "data" / "printed_coefficients.json").read_text())
    ref = printed.get(fid.value, {})
    recs = []
    for i, t in enumerate(desc.smooth_terms, start=1):
        label = f"a{i}"
        p = ref.get(label)
        recs.append({"name": label, "x_exponent": t.x_exponent, "log_power": t.log_power,
                     "value": t.coefficient, "printed": p,
                     "deviation": None if p is None else t.coefficient - float(p)})
    return recs, {"id": fid.value}


def cmd_validate(args):
    cat = zeros.load_zeros(args.file) if args.file else zeros.default_zeta_catalog()
    rep = zeros.validate(cat, args.tolerance, args.scan_height)
    rec = {"count": rep.count, "tolerance": rep.tolerance, "max_residual": rep.max_residual,
           "worst_index": rep.worst_index, "failures": len(rep.failures),
           "scan_sign_changes": rep.scan_sign_changes, "catalog_count_below_scan": rep.catalog_count_below_scan,
           "ok": str(rep.ok).lower()}
    return [rec], {"kind": str(cat.kind), "failing_indices": list(rep.failures[:50])}


def cmd_ap(args):
    xs = parse_range(args.x)
    params = dirichlet.APApproxParams(args.q, args.a, args.N, args.offset)
    vals = np.atleast_1d(dirichlet.approximate_pi_ap(params, xs))
    recs = []
    for x, v in zip(xs, vals):
        exact = arith.prime_count_in_ap(x, args.q, args.a)
        mid = exact - 0.5 if x == math.floor(x) and arith.prime_count_in_ap(x - 1, args.q, args.a) != exact else exact
        recs.append(_record(x, exact, mid, total=v))
    return recs, {"q": args.q, "a": args.a, "N": args.N, "offset": params.resolved_offset}


COMMANDS = {
    "tabulate": cmd_tabulate, "approx": cmd_approx, "rvm": cmd_rvm, "perron": cmd_perron,
    "rectangle": cmd_rectangle, "gibbs": cmd_gibbs, "coeffs": cmd_coeffs,
    "validate-zeros": cmd_validate, "ap": cmd_ap,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetaexplicit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, zeros_opt=True):
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        if zeros_opt:
            sp.add_argument("--zeros", help="zeta zero table (default: shipped table or $%s)" % zeros.ZERO_DIR_ENV)
        return sp

    sp = common(sub.add_parser("tabulate", help="exact and midpoint summatory values"), zeros_opt=False)
    sp.add_argument("--id", required=True)
    sp.add_argument("--x", required=True)

    sp = common(sub.add_parser("approx", help="explicit-formula approximation"))
    sp.add_argument("--id", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--N", type=int, default=0, help="pairs of complex zeros")
    sp.add_argument("--M", type=int, default=0, help="trivial zeros")

    sp = common(sub.add_parser("rvm", help="Riemann - von Mangoldt prime counting"))
    sp.add_argument("--x", required=True)
    sp.add_argument("--N", type=int, default=0)

    sp = common(sub.add_parser("perron", help="line integral as a function of T"), zeros_opt=False)
    sp.add_argument("--id", required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--T", required=True, help="T value or range")
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = common(sub.add_parser("rectangle", help="rectangle contour vs residues"))
    sp.add_argument("--id", required=True)
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--a", type=float, default=-1.0)
    sp.add_argument("--T", type=float, required=True)
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = common(sub.add_parser("gibbs", help="Fourier peaks, or overshoot at a jump"))
    sp.add_argument("--n", type=int, nargs="+", default=[10, 20, 40, 80])
    sp.add_argument("--id", default="psi", help="arithmetic function id or 'rvm'")
    sp.add_argument("--jump", type=float)
    sp.add_argument("--N", type=int, default=2000)
    sp.add_argument("--window", type=float)

    sp = common(sub.add_parser("coeffs", help="smooth-part coefficients"), zeros_opt=False)
    sp.add_argument("--id", required=True)

    sp = common(sub.add_parser("validate-zeros", help="check a zero table"), zeros_opt=False)
    sp.add_argument("--file")
    sp.add_argument("--tolerance", type=float, default=1e-6)
    sp.add_argument("--scan-height", type=float)

    sp = common(sub.add_parser("ap", help="primes in an arithmetic progression"), zeros_opt=False)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--N", type=int, default=0)
    sp.add_argument("--offset", type=float)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records, meta = COMMANDS[args.command](args)
    except (UsageError, DomainError, ContractError, OSError) as exc:
        print(f"zetaexplicit {args.command}: usage error: {exc}", file=sys.stderr)
        return 2
    except (ZetaExplicitError, AccuracyError, FloatingPointError) as exc:
        print(f"zetaexplicit {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 1
    emit(args.command, records, args.format, meta)
    for w in meta.get("warnings", []) if isinstance(meta, dict) else []:
        print(f"warning: {w}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
