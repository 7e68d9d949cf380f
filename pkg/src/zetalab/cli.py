"""Command-line front end: single checks, suites, reports and the odd-zeta routes."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import mpmath

from .errors import DegenerateZ, DomainError, InvalidArgument, PrecisionFloor, ZetalabError
from .identities import (asymptotic_check, evaluate_identity, osullivan_zeta_repr,
                         ramanujan_poly, rp_unimodular_zeros, select, zeta_via_kappa)
from .identities.base import fmt
from .identities.classical import lerch_zeta
from .identities.params import parse_int, parse_number
from .mpcore import PrecisionContext
from .special import riemann_zeta

FIELDS = ("id", "params", "lhs", "rhs", "abs_residual", "rel_residual", "pass", "terms_used", "wall_ms")
CONFIG_KEYS = ("digits", "guard", "jobs", "filter")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    digits: int = 30
    guard: int = 10
    filter: str | None = None
    jobs: int = os.cpu_count() or 1
    out: str | None = None
    format: str = "text"

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise UsageError("digits must be at least 10")
        if self.guard < 0:
            raise UsageError("guard must be non-negative")
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1")

    def context(self) -> PrecisionContext:
        return PrecisionContext(digits=self.digits, guard=self.guard)


def read_config(path: str | os.PathLike) -> dict:
    """key=value lines; blank lines and # comments are skipped."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of {', '.join(CONFIG_KEYS)} as key=value")
        out[key] = value
    return out


def build_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    path = args.config or environ.get("ZETALAB_CONFIG")
    values = read_config(path) if path else {}
    fields = {}
    for key in ("digits", "guard", "jobs"):
        if key in values:
            try:
                fields[key] = int(values[key])
            except ValueError:
                raise UsageError(f"config {key} must be an integer") from None
    if "filter" in values:
        fields["filter"] = values["filter"] or None
    cli = {"digits": args.prec, "guard": args.guard, "jobs": getattr(args, "jobs", None),
           "filter": getattr(args, "filter", None), "out": args.out, "format": args.format}
    fields.update({k: v for k, v in cli.items() if v is not None})
    return RunConfig(**fields)


# -- reports -----------------------------------------------------------------------

def _flat_params(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def render(records: list[dict], cfg: RunConfig, timestamp: str | None = None) -> str:
    if cfg.format == "json":
        doc = {"version": 1, "generated": timestamp or _now(), "digits": cfg.digits,
               "guard": cfg.guard, "records": records}
        return json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(FIELDS)
        for r in records:
            w.writerow([_flat_params(r[k]) if k == "params" else
                        ("true" if r[k] else "false") if k == "pass" else r[k] for k in FIELDS])
        return buf.getvalue()
    lines = []
    for r in records:
        tag = "PASS" if r["pass"] else "FAIL"
        lines.append(f"{tag}  {r['id']:<15} {_flat_params(r['params']) or '-':<40} "
                     f"rel={r['rel_residual']}  terms={r['terms_used']}  {r['wall_ms']}ms")
    npass = sum(r["pass"] for r in records)
    lines.append(f"{npass}/{len(records)} passed at digits={cfg.digits} guard={cfg.guard}")
    return "\n".join(lines) + "\n"


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _failed(ident: str, params: dict, message: str) -> dict:
    print(f"zetalab: {ident}: {message}", file=sys.stderr)
    return {"id": ident, "params": {k: str(v) for k, v in params.items()}, "lhs": "nan", "rhs": "nan",
            "abs_residual": "nan", "rel_residual": "nan", "pass": False, "terms_used": 0, "wall_ms": 0}


def _run_one(task) -> dict:
    ident, params, digits, guard = task
    ctx = PrecisionContext(digits=digits, guard=guard)
    try:
        return evaluate_identity(ident, params, ctx).to_dict()
    except ZetalabError as exc:
        return _failed(ident, params, f"{type(exc).__name__}: {exc}")


def run_records(tasks: list, jobs: int) -> list[dict]:
    """Evaluate tasks, returning records in task order whatever the completion order."""
    if jobs == 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
        return list(pool.map(_run_one, tasks))


# -- verbs -----------------------------------------------------------------------------

def cmd_list(cfg: RunConfig) -> int:
    rows = [(d.id, d.schema(), d.constraint, d.anchor) for d in select(cfg.filter)]
    w = [max(len(r[i]) for r in rows) for i in range(3)] if rows else [0, 0, 0]
    for r in rows:
        print(f"{r[0]:<{w[0]}}  {r[1]:<{w[1]}}  {r[2]:<{w[2]}}  {r[3]}")
    return 0


def parse_overrides(pairs: list[str] | None) -> dict:
    out = {}
    for item in pairs or ():
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects k=v, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def cmd_verify(ident: str, overrides: dict, cfg: RunConfig) -> int:
    rec = evaluate_identity(ident, overrides, cfg.context()).to_dict()
    emit(render([rec], cfg), cfg)
    return 0 if rec["pass"] else 1


def cmd_suite(cfg: RunConfig) -> int:
    entries = select(cfg.filter)
    if not entries:
        raise UsageError(f"no catalog entry matches {cfg.filter!r}")
    tasks = [(d.id, dict(g), cfg.digits, cfg.guard) for d in entries for g in d.grid]
    records = run_records(tasks, cfg.jobs)
    emit(render(records, cfg), cfg)
    return 0 if all(r["pass"] for r in records) else 1


METHODS = ("direct", "lerch", "kappa", "osullivan")


def zeta_odd(m: int, method: str, ctx: PrecisionContext, z="2j"):
    """(value, deviation from the direct route, tolerance) for zeta(2m+1)."""
    if m < 1:
        raise DomainError("m must be a positive integer")
    with ctx.workprec():
        direct = riemann_zeta(2 * m + 1, ctx)
        loose = mpmath.mpf(10) ** (-(ctx.digits - 2 * ctx.guard))
        if method == "direct":
            value, tol = direct, ctx.tolerance()
        elif method == "lerch":
            if m % 2 == 0:
                raise DomainError("the lerch route needs odd m")
            value, tol = lerch_zeta(m, ctx), ctx.tolerance()
        elif method == "kappa":
            if m < 4:
                raise DomainError("the kappa route needs m >= 4")
            value, tol = zeta_via_kappa(m, ctx).value, loose
        elif method == "osullivan":
            zv = parse_number(z) if isinstance(z, str) else z
            try:
                value = osullivan_zeta_repr(m, zv, ctx).value
            except (InvalidArgument, DegenerateZ) as exc:
                raise DomainError(str(exc)) from None
            tol = loose
        else:
            raise UsageError(f"unknown method {method!r}")
        return value, abs(value - direct), tol


def cmd_zeta_odd(m: int, method: str, z: str, cfg: RunConfig) -> int:
    ctx = cfg.context()
    value, dev, tol = zeta_odd(m, method, ctx, z)
    ok = dev < tol
    with ctx.workprec():
        if abs(mpmath.im(value)) < tol * max(1, abs(value)):
            value = mpmath.re(value)  # rounding noise on a real quantity
        doc = {"m": m, "method": method, "value": fmt(value, cfg.digits),
               "deviation": mpmath.nstr(dev, 6), "pass": ok}
    if cfg.format == "json":
        emit(json.dumps(doc, indent=2) + "\n", cfg)
    else:
        emit(f"zeta({2 * m + 1}) [{method}] = {doc['value']}\n"
             f"deviation from direct = {doc['deviation']}\n", cfg)
    return 0 if ok else 1


def cmd_rp(m: int, cfg: RunConfig) -> int:
    try:
        rp = ramanujan_poly(m)
    except InvalidArgument as exc:
        raise DomainError(str(exc)) from None
    ctx = cfg.context()
    zeros = rp_unimodular_zeros(m, ctx)
    with ctx.workprec():
        doc = {"m": m, "coefficients": [str(c) for c in rp.coeffs],
               "unimodular_zeros": [{"kappa": fmt(u.kappa.value, cfg.digits),
                                     "modulus_gap": mpmath.nstr(u.modulus_gap, 6),
                                     "residual": mpmath.nstr(u.residual, 6)} for u in zeros]}
    if cfg.format == "json":
        emit(json.dumps(doc, indent=2) + "\n", cfg)
        return 0
    lines = [f"R_{2 * m + 1}(z) coefficients of z^0, z^2, ..., z^{2 * m + 2}:"]
    lines += [f"  z^{2 * k}: {c}" for k, c in enumerate(doc["coefficients"])]
    lines.append(f"unimodular zeros in the upper half-plane: {len(zeros)}")
    lines += [f"  {u['kappa']}  ||k|-1|={u['modulus_gap']}  |R(k)|={u['residual']}"
              for u in doc["unimodular_zeros"]]
    emit("\n".join(lines) + "\n", cfg)
    return 0


def cmd_asym(m: int, r: int, y: str, cfg: RunConfig) -> int:
    ctx = cfg.context()
    with ctx.workprec():
        yv = parse_number(y)
    if m < 1 or r < 0:
        raise DomainError("need m >= 1 and r >= 0")
    try:
        res_y, res_half, order = asymptotic_check(m, r, yv, ctx)
    except (InvalidArgument, PrecisionFloor) as exc:
        raise DomainError(f"{type(exc).__name__}: {exc}") from None
    doc = {"m": m, "r": r, "y": y, "residual_y": mpmath.nstr(res_y, 6),
           "residual_half_y": mpmath.nstr(res_half, 6), "order_estimate": mpmath.nstr(order, 6),
           "expected_order": 2 * r + 3}
    if cfg.format == "json":
        emit(json.dumps(doc, indent=2) + "\n", cfg)
    else:
        emit("".join(f"{k}: {v}\n" for k, v in doc.items()), cfg)
    return 0


# -- argument parsing ---------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--prec", type=int, help="target decimal digits (default 30)")
    p.add_argument("--guard", type=int, help="guard digits (default 10)")
    p.add_argument("--config", help="key=value config file (also $ZETALAB_CONFIG)")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "text"), help="report format (default text)")
    return p


def make_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="zetalab", description="Check odd-zeta and Lambert-series identities.")
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("list", parents=[common], help="show the identity catalog")
    p.add_argument("--filter", help="glob over identity ids")
    p = sub.add_parser("verify", parents=[common], help="check one identity at one parameter point")
    p.add_argument("--id", required=True)
    p.add_argument("--param", action="append", metavar="K=V", help="override a parameter (repeatable)")
    p = sub.add_parser("suite", parents=[common], help="check catalog entries over their default grids")
    p.add_argument("--filter", help="glob over identity ids")
    p.add_argument("--jobs", type=int, help="worker processes (default: all cores)")
    p = sub.add_parser("zeta-odd", parents=[common], help="zeta(2m+1) by one of several routes")
    p.add_argument("--m", required=True, type=str)
    p.add_argument("--method", choices=METHODS, default="direct")
    p.add_argument("--z", default="2j", help="upper half-plane point for the osullivan route")
    p = sub.add_parser("rp", parents=[common], help="Ramanujan polynomial coefficients and unimodular zeros")
    p.add_argument("--m", required=True, type=str)
    p = sub.add_parser("asym", parents=[common], help="two-scale order check of the small-y expansion")
    p.add_argument("--m", required=True, type=str)
    p.add_argument("--r", required=True, type=str)
    p.add_argument("--y", default="0.2")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        if args.verb == "list":
            return cmd_list(cfg)
        if args.verb == "verify":
            return cmd_verify(args.id, parse_overrides(args.param), cfg)
        if args.verb == "suite":
            return cmd_suite(cfg)
        if args.verb == "zeta-odd":
            return cmd_zeta_odd(parse_int(args.m), args.method, args.z, cfg)
        if args.verb == "rp":
            return cmd_rp(parse_int(args.m), cfg)
        return cmd_asym(parse_int(args.m), parse_int(args.r), args.y, cfg)
    except (UsageError, DomainError) as exc:
        print(f"zetalab: {exc}", file=sys.stderr)
        return 2
    except ZetalabError as exc:
        print(f"zetalab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
