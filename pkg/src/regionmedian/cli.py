"""Command-line front end: JSON region files in, JSON reports and SVG out.

Subcommands:
  median      geometric median of a polygonal region
  medianoid   generalized median for a radial cost kernel
  discrete    geometric median of a weighted point set
  degenerate  flattening-limit study for triangles with shrinking third side
  check       evaluate the residual (and certificate) at a given point

Exit codes: 0 success, 1 invalid input, 2 solver did not converge
(the best iterate is still reported).
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional

import numpy as np

from .errors import (
    EmptySampleError,
    InvalidPolygonError,
    InvalidTriangleError,
    NonConvergenceError,
    RegionFileError,
    SingularRegionError,
)
from .geometry import Point2, Polygon
from .kernels import RadialKernel
from .oracle import OracleConfig, oracle_minimize
from .residuals import general_boundary_residual, mean_distance_certificate, polygon_residual
from .solver import SolveConfig, degenerate_limit_study, solve_median, solve_medianoid
from .svg import region_figure
from .weiszfeld import PointSet, weiszfeld

_INPUT_ERRORS = (
    RegionFileError,
    InvalidPolygonError,
    InvalidTriangleError,
    SingularRegionError,
    EmptySampleError,
    NonConvergenceError,
)


# ---------------------------------------------------------------- JSON out

def _fmt_number(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    s = format(float(v), ".17g")
    # keep floats recognizably floats so reports parse back to the same types
    if not any(ch in s for ch in ".eE") and s.lstrip("-").isdigit():
        s += ".0"
    return s


def _write_json(obj, out: list, indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = list(obj.items())
        for i, (k, v) in enumerate(items):
            out.append(f'{pad}  {json.dumps(k)}: ')
            _write_json(v, out, indent + 1)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        simple = all(isinstance(v, (int, float)) for v in obj)
        if simple and len(obj) <= 4:
            out.append("[" + ", ".join(_fmt_number(v) for v in obj) + "]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad + "  ")
            _write_json(v, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif obj is None:
        out.append("null")
    else:
        out.append(_fmt_number(obj))


def dumps_report(obj) -> str:
    """Serialize a report with 17 significant digit numbers."""
    out: list = []
    _write_json(obj, out, 0)
    return "".join(out) + "\n"


def _emit(report: dict, json_out: Optional[str]) -> None:
    text = dumps_report(report)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- input

def _parse_kernel_arg(text: str) -> RadialKernel:
    text = text.strip().lower()
    if text == "euclidean":
        return RadialKernel.euclidean()
    if text.startswith("power:"):
        try:
            return RadialKernel.power(float(text.split(":", 1)[1]))
        except ValueError as exc:
            raise RegionFileError(f"bad kernel argument {text!r}: {exc}") from exc
    raise RegionFileError(f"unknown kernel argument {text!r}; use 'euclidean' or 'power:P'")


def _kernel_from_dict(d) -> RadialKernel:
    if not isinstance(d, dict) or "kind" not in d:
        raise RegionFileError("kernel must be an object with a 'kind' field")
    kind = d["kind"]
    if kind == "euclidean":
        return RadialKernel.euclidean()
    if kind == "power":
        if "p" not in d:
            raise RegionFileError("power kernel needs a 'p' exponent")
        try:
            return RadialKernel.power(float(d["p"]))
        except (TypeError, ValueError) as exc:
            raise RegionFileError(f"bad power kernel exponent: {exc}") from exc
    raise RegionFileError(f"unknown kernel kind {kind!r}")


def _coord_list(raw, label: str) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise RegionFileError(f"{label} must be a list of [x, y] pairs") from exc
    if arr.ndim != 2 or arr.shape[1] != 2 or len(arr) == 0:
        raise RegionFileError(f"{label} must be a nonempty list of [x, y] pairs")
    if not np.all(np.isfinite(arr)):
        raise RegionFileError(f"{label} contains non-finite coordinates")
    return arr


class RegionInput:
    """Parsed content of a region file."""

    def __init__(self, form: str, polygon: Optional[Polygon], point_set: Optional[PointSet], kernel: Optional[RadialKernel]):
        self.form = form
        self.polygon = polygon
        self.point_set = point_set
        self.kernel = kernel


def load_region_file(path: str) -> RegionInput:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise RegionFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise RegionFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise RegionFileError("region file must be a JSON object")
    forms = [k for k in ("polygon", "points", "boundary_samples") if k in data]
    if len(forms) != 1:
        raise RegionFileError(
            "region file must contain exactly one of 'polygon', 'points', 'boundary_samples'"
        )
    form = forms[0]
    kernel = _kernel_from_dict(data["kernel"]) if "kernel" in data else None
    if "weights" in data and form != "points":
        raise RegionFileError("'weights' is only valid alongside 'points'")

    if form == "points":
        coords = _coord_list(data["points"], "points")
        weights = data.get("weights")
        try:
            ps = PointSet(coords, weights)
        except ValueError as exc:
            raise RegionFileError(str(exc)) from exc
        return RegionInput(form, None, ps, kernel)

    coords = _coord_list(data[form], form)
    poly = Polygon(coords)  # InvalidPolygonError propagates with its message
    return RegionInput(form, poly, None, kernel)


def _require_region(inp: RegionInput, cmd: str) -> Polygon:
    if inp.polygon is None:
        raise RegionFileError(
            f"the {cmd} command needs a 'polygon' or 'boundary_samples' region; "
            "point sets belong to the discrete command"
        )
    return inp.polygon


def _parse_point(text: str) -> Point2:
    parts = text.split(",")
    if len(parts) != 2:
        raise RegionFileError(f"expected --point x,y, got {text!r}")
    try:
        return Point2(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise RegionFileError(f"bad --point {text!r}: {exc}") from exc


def _oracle_config() -> OracleConfig:
    seed = os.environ.get("REGION_MEDIAN_SEED")
    if seed is not None:
        try:
            return OracleConfig(seed=int(seed))
        except ValueError as exc:
            raise RegionFileError(f"REGION_MEDIAN_SEED must be an integer: {exc}") from exc
    return OracleConfig()


# ---------------------------------------------------------------- commands

def _solve_config(args) -> SolveConfig:
    return SolveConfig(tol_rel=args.tol, max_iter=args.max_iter)


def _region_report(poly: Polygon, result, kernel: RadialKernel, quad_tol: float) -> dict:
    if kernel.is_euclidean:
        rep = polygon_residual(poly, result.median)
    else:
        rep = general_boundary_residual(poly, result.median, kernel, tol=quad_tol)
    report = {
        "median": [result.median.x, result.median.y],
        "residual_norm": result.residual_norm,
        "normalized_norm": result.normalized_norm,
        "iterations": result.iterations,
        "edge_means": list(rep.edge_means),
    }
    if result.certificate is not None:
        report["certificate_spread"] = result.certificate
    return report


def _attach_oracle(report: dict, poly: Polygon, kernel: RadialKernel, median: Point2) -> None:
    minimizer = oracle_minimize(poly, kernel, _oracle_config())
    report["oracle_check"] = {
        "minimizer": [minimizer.x, minimizer.y],
        "distance_to_median": minimizer.distance_to(median),
    }


def _maybe_svg(args, outline, median, trace, points=None) -> None:
    if getattr(args, "svg_out", None):
        with open(args.svg_out, "w", encoding="utf-8") as fh:
            fh.write(region_figure(outline, median, trace=trace, points=points))


def cmd_median(args) -> int:
    inp = load_region_file(args.file)
    poly = _require_region(inp, "median")
    cfg = _solve_config(args)
    kernel = RadialKernel.euclidean()
    result = solve_median(poly, cfg)
    report = _region_report(poly, result, kernel, cfg.quad_tol)
    if args.oracle:
        _attach_oracle(report, poly, kernel, result.median)
    _emit(report, args.json_out)
    _maybe_svg(args, poly.coords, result.median, result.trace)
    return 0 if result.converged else 2


def cmd_medianoid(args) -> int:
    inp = load_region_file(args.file)
    poly = _require_region(inp, "medianoid")
    kernel = _parse_kernel_arg(args.kernel) if args.kernel else (inp.kernel or RadialKernel.euclidean())
    cfg = _solve_config(args)
    result = solve_medianoid(poly, kernel, cfg)
    report = _region_report(poly, result, kernel, cfg.quad_tol)
    if args.oracle:
        _attach_oracle(report, poly, kernel, result.median)
    _emit(report, args.json_out)
    _maybe_svg(args, poly.coords, result.median, result.trace)
    return 0 if result.converged else 2


def _discrete_brute_force(ps: PointSet) -> Point2:
    # independent minimizer for the point-set objective: Nelder-Mead from
    # the weighted centroid plus shrinking grid passes, mirroring the
    # region oracle's strategy
    from scipy.optimize import minimize

    pts, w = ps.coords, ps.weights

    def objective(v):
        return float(np.sum(w * np.hypot(pts[:, 0] - v[0], pts[:, 1] - v[1])))

    total = float(w.sum())
    start = np.array([np.sum(w * pts[:, 0]) / total, np.sum(w * pts[:, 1]) / total])
    diam = max(ps.diameter, 1e-12)
    res = minimize(objective, start, method="Nelder-Mead",
                   options={"xatol": 1e-12 * diam, "fatol": 1e-15, "maxiter": 2000, "maxfev": 3000})
    best, fbest = np.asarray(res.x), float(res.fun)
    half = 1e-3 * diam
    for _ in range(3):
        offs = np.linspace(-half, half, 11)
        gx, gy = np.meshgrid(best[0] + offs, best[1] + offs)
        for cand in np.stack([gx.ravel(), gy.ravel()], axis=1):
            f = objective(cand)
            if f < fbest:
                best, fbest = cand.copy(), f
        half /= 10.0
    return Point2(float(best[0]), float(best[1]))


def cmd_discrete(args) -> int:
    inp = load_region_file(args.file)
    if inp.point_set is None:
        raise RegionFileError("the discrete command needs a 'points' region file")
    ps = inp.point_set
    result = weiszfeld(ps, tol=args.tol, max_iter=args.max_iter)
    report = {
        "median": [result.median.x, result.median.y],
        "residual_norm": result.residual_norm,
        "normalized_norm": result.normalized_norm,
        "iterations": result.iterations,
        "edge_means": [],
    }
    if args.oracle:
        minimizer = _discrete_brute_force(ps)
        report["oracle_check"] = {
            "minimizer": [minimizer.x, minimizer.y],
            "distance_to_median": minimizer.distance_to(result.median),
        }
    _emit(report, args.json_out)
    _maybe_svg(args, None, result.median, result.trace, points=ps.coords)
    return 0 if result.converged else 2


def cmd_degenerate(args) -> int:
    try:
        gammas = [float(g) for g in args.gammas.split(",") if g.strip()]
    except ValueError as exc:
        raise RegionFileError(f"bad --gammas list: {exc}") from exc
    if not gammas:
        raise RegionFileError("--gammas must list at least one value")
    alpha, beta = max(args.alpha, args.beta), min(args.alpha, args.beta)
    rows = degenerate_limit_study(alpha, beta, gammas)
    limit = math.sqrt(alpha * beta / 2.0)
    report = {
        "alpha": alpha,
        "beta": beta,
        "rows": [
            {"gamma": g, "distance": d, "limit": limit, "gap": abs(d - limit)}
            for g, d in rows
        ],
    }
    _emit(report, getattr(args, "json_out", None))
    return 0


def cmd_check(args) -> int:
    inp = load_region_file(args.file)
    poly = _require_region(inp, "check")
    point = _parse_point(args.point)
    kernel = inp.kernel or RadialKernel.euclidean()
    if kernel.is_euclidean:
        rep = polygon_residual(poly, point)
    else:
        rep = general_boundary_residual(poly, point, kernel)
    report = {
        "point": [point.x, point.y],
        "residual": [rep.residual.dx, rep.residual.dy],
        "gradient": [rep.gradient.dx, rep.gradient.dy],
        "residual_norm": rep.norm,
        "normalized_norm": rep.normalized_norm,
        "edge_means": list(rep.edge_means),
    }
    if len(poly) == 3 and kernel.is_euclidean:
        report["certificate_spread"] = mean_distance_certificate(poly, point).spread
    _emit(report, getattr(args, "json_out", None))
    return 0


# ---------------------------------------------------------------- parser

def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-12, help="relative residual tolerance")
    p.add_argument("--max-iter", type=int, default=100, help="iteration budget")
    p.add_argument("--oracle", action="store_true", help="cross-check against the brute-force minimizer")
    p.add_argument("--json-out", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--svg-out", metavar="PATH", help="write an SVG figure of the region and median")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regionmedian",
        description="Geometric medians of planar regions via boundary-integral residuals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("median", help="median of a polygonal region")
    p.add_argument("file", help="region JSON file (polygon or boundary_samples)")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("medianoid", help="generalized median for a radial kernel")
    p.add_argument("file", help="region JSON file (polygon or boundary_samples)")
    p.add_argument("--kernel", help="'euclidean' or 'power:P' (overrides the file)")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_medianoid)

    p = sub.add_parser("discrete", help="median of a weighted point set")
    p.add_argument("file", help="region JSON file with 'points' (and optional 'weights')")
    _add_solver_flags(p)
    p.set_defaults(func=cmd_discrete)

    p = sub.add_parser("degenerate", help="flattening-limit study for triangles")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gammas", required=True, help="comma-separated third-side lengths")
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("check", help="evaluate the residual at a point")
    p.add_argument("file", help="region JSON file (polygon or boundary_samples)")
    p.add_argument("--point", required=True, help="query point as x,y")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
