"""Command-line front end: evaluate, check, threshold, figure, scan.

Every command assembles an OutputRecord

    {"schema_version", "command", "inputs", "result"}

and serializes it deterministically (sorted keys, two-space indent, LF).
eval, check and threshold always emit JSON; figure emits JSON or CSV on
request; scan always emits CSV with the fixed column set
p,alpha,beta,theorem,lemma,disk_max.  CSV cells use 17 significant digits,
which round-trips binary64 exactly.  The record layout is pinned by
output_schema.json shipped inside the package.

Exit codes: 0 success, 2 usage or domain error (one-line diagnostic on
stderr), 3 internal inconsistency (a sufficient condition passed while a
layer it implies failed; this should never happen and is continuously
property-tested).

Non-finite values can reach the output only through saturation of auxiliary
quantities; they serialize as JavaScript-style Infinity literals, which the
stdlib json module reads back.

Threading: scan fans grid points across a thread pool.  The worker count is
--parallel, overridden by the BESSEL_GEOM_THREADS environment variable
(0 means one worker per CPU).  Row order, and therefore output bytes, never
depends on the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

import numpy as np

from .bessel import BesselParams, SeriesValue, eval_u_derivatives, eval_w
from .conditions import ConditionVerdict, Variant, convex_condition, starlike_condition
from .criteria import ClassSpec, SumReport, SumStatus, convex_sum, starlike_sum
from .disk import DEFAULT_GRID, QuotientKind, SupEstimate, sup_estimate
from .errors import BesselGeomError, DomainError
from .thresholds import (
    FIGURES,
    RootResult,
    figure_eval,
    find_all_thresholds,
    positivity_scan,
)

SCHEMA_VERSION = "1.0"

# Positivity-scan window reported by the threshold command: from just right
# of the essential singularity out to 50, at resolution 0.005.
POSITIVITY_MARGIN = 1e-3
POSITIVITY_HIGH = 50.0
POSITIVITY_STEP = 0.005

# Figure samples closer than this to the singularity are dropped, not fatal.
SINGULAR_SKIP = 1e-12


# ---------------------------------------------------------------------------
# serialization helpers


def _cnum(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _series(sv: SeriesValue) -> dict:
    return {
        "value": _cnum(sv.value),
        "terms_used": sv.terms_used,
        "tail_bound": sv.tail_bound,
    }


def _sum_report(rep: SumReport) -> dict:
    return {
        "sum": rep.sum,
        "tail_bound": rep.tail_bound,
        "threshold": rep.threshold,
        "holds": rep.holds,
        "margin": rep.margin,
        "status": rep.status.value,
    }


def _condition(v: ConditionVerdict) -> dict:
    return {
        "criterion": v.criterion.value,
        "variant": v.variant.value,
        "value": v.value,
        "holds": v.holds,
        "inputs": dict(v.inputs),
    }


def _root(r: RootResult) -> dict:
    return {
        "x0": r.x0,
        "bracket": list(r.bracket),
        "iterations": r.iterations,
        "residual": r.residual,
    }


def _sup(e: SupEstimate) -> dict:
    return {
        "max_quotient": e.max_quotient,
        "argmax": _cnum(e.argmax_z),
        "violations": e.violations,
        "degenerate_points": e.degenerate_points,
    }


def _record(command: str, inputs: dict, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    }


def _emit_json(record: dict) -> None:
    sys.stdout.write(json.dumps(record, sort_keys=True, indent=2) + "\n")


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def load_output_schema() -> dict:
    """The published schema every OutputRecord must validate against."""
    text = resources.files("besselgeom").joinpath("output_schema.json").read_text("utf-8")
    return json.loads(text)


# ---------------------------------------------------------------------------
# flag parsing


def _complex_flag(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")


def _range_flag(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) == 2:
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError:
            lo = hi = None
        if lo is not None and lo <= hi:
            return lo, hi
    raise argparse.ArgumentTypeError(f"expected LO,HI with LO <= HI, got {text!r}")


def _steps_flag(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    try:
        ns = [int(p) for p in parts]
    except ValueError:
        ns = []
    if len(ns) == 1:
        ns = ns * 3
    if len(ns) == 3 and all(n >= 1 for n in ns):
        return ns[0], ns[1], ns[2]
    raise argparse.ArgumentTypeError(f"expected N or N1,N2,N3 (each >= 1), got {text!r}")


def _resolve_workers(parallel: int) -> int:
    env = os.environ.get("BESSEL_GEOM_THREADS")
    if env is not None:
        try:
            parallel = int(env)
        except ValueError:
            raise DomainError(f"BESSEL_GEOM_THREADS must be an integer, got {env!r}")
    if parallel < 0:
        raise DomainError(f"worker count must be >= 0, got {parallel!r}")
    return parallel if parallel > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
# record builders (pure: no printing, no exiting; tests call these directly)


def eval_record(p: float, b: float, c: float, z: complex, eps: float, want_w: bool) -> dict:
    params = BesselParams(p, b, c)
    u, up, us = eval_u_derivatives(params, z, eps=eps)
    result = {"u": _series(u), "u_prime": _series(up), "u_second": _series(us)}
    if want_w:
        if z.imag != 0.0:
            raise DomainError("--w needs a real positive z, got a nonzero imaginary part")
        result["w"] = _series(eval_w(params, z.real, eps=eps))
    inputs = {"p": p, "b": b, "c": c, "z": _cnum(z), "eps": eps, "w": want_w}
    return _record("eval", inputs, result)


def check_record(
    p: float,
    b: float,
    c: float,
    alpha: float,
    beta: float,
    klass: str,
    mode: str = "all",
    variant: str = Variant.DERIVED.value,
) -> dict:
    params = BesselParams(p, b, c)
    cls = ClassSpec(alpha, beta)
    var = Variant(variant)
    star = klass == "star"
    result: dict = {}
    if mode in ("theorem", "all"):
        cond = starlike_condition if star else convex_condition
        result["theorem"] = _condition(cond(params, cls, var))
    if mode in ("lemma", "all"):
        lem = starlike_sum if star else convex_sum
        result["lemma"] = _sum_report(lem(params, cls))
    if mode in ("disk", "all"):
        kind = QuotientKind.STARLIKE if star else QuotientKind.CONVEX
        result["disk"] = _sup(sup_estimate(params, cls, kind, DEFAULT_GRID))

    # Implication chain: theorem => lemma => no sampled violations.  The
    # printed variant only asserts the first implication for c <= 0, where
    # it coincides with the derived one.
    consistent = True
    theorem_binding = var is Variant.DERIVED or c <= 0.0
    if "theorem" in result and "lemma" in result and theorem_binding:
        if result["theorem"]["holds"] and result["lemma"]["status"] == SumStatus.FAILS.value:
            consistent = False
    if "lemma" in result and "disk" in result:
        if result["lemma"]["status"] == SumStatus.HOLDS.value and result["disk"]["violations"] > 0:
            consistent = False
    result["consistent"] = consistent
    inputs = {
        "p": p, "b": b, "c": c, "alpha": alpha, "beta": beta,
        "class": klass, "mode": mode, "variant": variant,
    }
    return _record("check", inputs, result)


def threshold_record(figure: int, tol: float) -> dict:
    spec = FIGURES.get(figure)
    if spec is None:
        raise DomainError(f"figure id must be in 1..6, got {figure!r}")
    roots = find_all_thresholds(figure, tol)
    low = spec.singularity + POSITIVITY_MARGIN
    brackets = positivity_scan(figure, low, POSITIVITY_HIGH, POSITIVITY_STEP)
    positivity = {
        "low": low,
        "high": POSITIVITY_HIGH,
        "step": POSITIVITY_STEP,
        "sign_changes": len(brackets),
        "positive": not brackets and figure_eval(figure, low) > 0.0,
    }
    result = {
        "label": spec.label,
        "singularity": spec.singularity,
        "roots": [_root(r) for r in roots],
        "threshold": roots[-1].x0 if roots else None,
        "no_bracket": not roots,
        "positivity": positivity,
    }
    return _record("threshold", {"figure": figure, "tol": tol}, result)


def figure_record(figure: int, low: float, high: float, step: float) -> dict:
    spec = FIGURES.get(figure)
    if spec is None:
        raise DomainError(f"figure id must be in 1..6, got {figure!r}")
    if low >= high:
        raise DomainError(f"empty range: low {low!r} >= high {high!r}")
    if step <= 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    n = int((high - low) / step + 1e-9)
    rows = []
    for i in range(n + 1):
        x = low + i * step
        if abs(x - spec.singularity) < SINGULAR_SKIP:
            continue  # drop the singular sample instead of aborting the grid
        rows.append({"x": x, "g": figure_eval(figure, x)})
    result = {"label": spec.label, "singularity": spec.singularity, "rows": rows}
    inputs = {"figure": figure, "low": low, "high": high, "step": step}
    return _record("figure", inputs, result)


def scan_record(
    b: float,
    c: float,
    p_range: tuple[float, float],
    alpha_range: tuple[float, float],
    beta_range: tuple[float, float],
    klass: str,
    steps: tuple[int, int, int],
    workers: int = 1,
) -> dict:
    star = klass == "star"
    cond = starlike_condition if star else convex_condition
    lem = starlike_sum if star else convex_sum
    kind = QuotientKind.STARLIKE if star else QuotientKind.CONVEX

    ps = np.linspace(p_range[0], p_range[1], steps[0]).tolist()
    alphas = np.linspace(alpha_range[0], alpha_range[1], steps[1]).tolist()
    betas = np.linspace(beta_range[0], beta_range[1], steps[2]).tolist()
    points = [(p, a, bt) for p in ps for a in alphas for bt in betas]

    def classify(point: tuple[float, float, float]) -> dict:
        p, a, bt = point
        params = BesselParams(p, b, c)
        cls = ClassSpec(a, bt)
        thm = cond(params, cls)
        rep = lem(params, cls)
        est = sup_estimate(params, cls, kind, DEFAULT_GRID)
        bad = (thm.holds and rep.status is SumStatus.FAILS) or (
            rep.status is SumStatus.HOLDS and est.violations > 0
        )
        return {
            "p": p, "alpha": a, "beta": bt,
            "theorem": "holds" if thm.holds else "fails",
            "lemma": rep.status.value,
            "disk_max": est.max_quotient,
            "consistent": not bad,
        }

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(classify, points))  # map preserves grid order
    else:
        rows = [classify(pt) for pt in points]

    flags = [r.pop("consistent") for r in rows]
    result = {"rows": rows, "consistent": all(flags)}
    inputs = {
        "b": b, "c": c,
        "p_range": list(p_range),
        "alpha_range": list(alpha_range),
        "beta_range": list(beta_range),
        "class": klass,
        "steps": list(steps),
    }
    return _record("scan", inputs, result)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_eval(args: argparse.Namespace) -> int:
    _emit_json(eval_record(args.p, args.b, args.c, args.z, args.eps, args.w))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    record = check_record(
        args.p, args.b, args.c, args.alpha, args.beta,
        args.klass, args.mode, args.variant,
    )
    _emit_json(record)
    if not record["result"]["consistent"]:
        print("error: implication chain violated", file=sys.stderr)
        return 3
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    _emit_json(threshold_record(args.figure, args.tol))
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    record = figure_record(args.figure, args.low, args.high, args.step)
    if args.format == "csv":
        out = ["x,g"]
        out += [f"{_g17(r['x'])},{_g17(r['g'])}" for r in record["result"]["rows"]]
        sys.stdout.write("\n".join(out) + "\n")
    else:
        _emit_json(record)
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    workers = _resolve_workers(args.parallel)
    record = scan_record(
        args.b, args.c, args.p_range, args.alpha_range, args.beta_range,
        args.klass, args.steps, workers,
    )
    out = ["p,alpha,beta,theorem,lemma,disk_max"]
    for r in record["result"]["rows"]:
        out.append(
            f"{_g17(r['p'])},{_g17(r['alpha'])},{_g17(r['beta'])},"
            f"{r['theorem']},{r['lemma']},{_g17(r['disk_max'])}"
        )
    sys.stdout.write("\n".join(out) + "\n")
    if not record["result"]["consistent"]:
        print("error: implication chain violated on the grid", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="besselgeom",
        description="Geometric classification of normalized Bessel-type power series.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate u, u', u'' (and optionally w)")
    pe.add_argument("--p", type=float, required=True)
    pe.add_argument("--b", type=float, required=True)
    pe.add_argument("--c", type=float, required=True)
    pe.add_argument("--z", type=_complex_flag, required=True, metavar="RE[,IM]")
    pe.add_argument("--eps", type=float, default=1e-12)
    pe.add_argument("--w", action="store_true",
                    help="also evaluate the unnormalized function at x = Re z > 0")
    pe.set_defaults(handler=_cmd_eval)

    pc = sub.add_parser("check", help="run condition, coefficient and disk layers")
    pc.add_argument("--p", type=float, required=True)
    pc.add_argument("--b", type=float, required=True)
    pc.add_argument("--c", type=float, required=True)
    pc.add_argument("--alpha", type=float, required=True)
    pc.add_argument("--beta", type=float, required=True)
    pc.add_argument("--class", dest="klass", choices=("star", "convex"), required=True)
    pc.add_argument("--mode", choices=("lemma", "theorem", "disk", "all"), default="all")
    pc.add_argument("--variant", choices=("printed", "derived"), default="derived")
    pc.set_defaults(handler=_cmd_check)

    pt = sub.add_parser("threshold", help="locate the positivity threshold of a figure function")
    pt.add_argument("--figure", type=int, choices=sorted(FIGURES), required=True)
    pt.add_argument("--tol", type=float, default=1e-10)
    pt.set_defaults(handler=_cmd_threshold)

    pf = sub.add_parser("figure", help="tabulate a figure function for plotting")
    pf.add_argument("--figure", type=int, choices=sorted(FIGURES), required=True)
    pf.add_argument("--low", type=float, required=True)
    pf.add_argument("--high", type=float, required=True)
    pf.add_argument("--step", type=float, required=True)
    pf.add_argument("--format", choices=("csv", "json"), default="json")
    pf.set_defaults(handler=_cmd_figure)

    ps = sub.add_parser("scan", help="classify a parameter grid, CSV to stdout")
    ps.add_argument("--b", type=float, required=True)
    ps.add_argument("--c", type=float, required=True)
    ps.add_argument("--p-range", type=_range_flag, required=True, metavar="LO,HI")
    ps.add_argument("--alpha-range", type=_range_flag, required=True, metavar="LO,HI")
    ps.add_argument("--beta-range", type=_range_flag, required=True, metavar="LO,HI")
    ps.add_argument("--class", dest="klass", choices=("star", "convex"), required=True)
    ps.add_argument("--steps", type=_steps_flag, required=True, metavar="N[,N2,N3]")
    ps.add_argument("--parallel", type=int, default=1)
    ps.set_defaults(handler=_cmd_scan)
    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except BesselGeomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
