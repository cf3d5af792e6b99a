"""Command line front end.

Exit codes: 0 success (whatever the soliton verdict), 1 bad parameters,
2 unreadable or malformed input / unwritable output, 3 the algebra fails
validation.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import math
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from . import _numeric as num
from . import catalog, io
from .algebra import MetricError, StructuralError, ValidationError, validate
from .curvature import curvature_report
from .derivations import derivation_basis
from .soliton import soliton_solve
from .structure import CompleteSolvability, analyze_structure

EXIT_OK, EXIT_PARAM, EXIT_IO, EXIT_INVALID = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------------
# parameter handling


def _angle_args(args, exact: bool):
    given = [x is not None for x in (args.theta, args.theta_deg)]
    pair = args.cos is not None or args.sin is not None
    if sum(given) + pair > 1:
        raise catalog.ParameterError("use only one of --theta, --theta-deg, --cos/--sin")
    if pair:
        if args.cos is None or args.sin is None:
            raise catalog.ParameterError("--cos and --sin must be given together")
        c, s = num.parse_scalar(args.cos), num.parse_scalar(args.sin)
        if exact:
            if isinstance(c, float) or isinstance(s, float):
                raise catalog.ParameterError("--exact needs rational --cos/--sin values")
            return dict(cos=Fraction(c), sin=Fraction(s))
        return dict(cos=float(c), sin=float(s))
    if exact:
        raise catalog.ParameterError("--exact needs the angle as a rational --cos/--sin pair")
    if args.theta_deg is not None:
        return dict(theta=math.radians(args.theta_deg))
    if args.theta is not None:
        return dict(theta=args.theta)
    raise catalog.ParameterError("an angle is required (--theta, --theta-deg or --cos/--sin)")


def _require_n(args) -> int:
    if args.n is None:
        raise catalog.ParameterError("--n is required")
    return args.n


def _hypersurface(args) -> catalog.HypersurfaceAlgebra:
    return catalog.build_lie_hypersurface(_require_n(args), **_angle_args(args, args.exact))


def _build_family(args):
    """Returns ``(metric algebra, canonical triangular order or None)``."""
    family = args.family
    if family == "lie-hypersurface":
        h = _hypersurface(args)
        return h.metric_algebra, list(range(h.metric_algebra.dim))
    if family == "solvable-model":
        return catalog.build_solvable_model(_require_n(args), exact=args.exact).metric_algebra, None
    if family == "heisenberg":
        dim = args.dim if args.dim is not None else 2 * _require_n(args) - 1
        return catalog.build_heisenberg(dim, exact=args.exact), None
    if family == "r-alpha":
        if args.alpha is None:
            raise catalog.ParameterError("--alpha is required for r-alpha")
        alpha = num.parse_scalar(args.alpha)
        if args.exact and isinstance(alpha, float):
            raise catalog.ParameterError("--exact needs a rational --alpha")
        return catalog.build_r_alpha(alpha if args.exact else float(alpha), exact=args.exact), None
    raise catalog.ParameterError(f"unknown family {family!r}; choose from {', '.join(catalog.FAMILIES)}")


def _load(args):
    if args.input and args.family:
        raise catalog.ParameterError("use either --input or --family")
    if args.input:
        m = io.load_algebra(args.input)
        return m, None
    if args.family:
        return _build_family(args)
    raise catalog.ParameterError("give --input PATH or --family NAME")


def _tol(args, exact: bool):
    return None if exact else args.tol


# --------------------------------------------------------------------------
# records


def classification_record(h: catalog.HypersurfaceAlgebra, tol=None, samples: int = 64, seed: int = 0) -> dict:
    m = h.metric_algebra
    names = m.basis_names
    result = soliton_solve(m, tol=None if m.exact else tol)
    structure = analyze_structure(m, order=list(range(m.dim)), samples=samples, seed=seed)
    certified = structure.complete_solvability is CompleteSolvability.CERTIFIED
    return {
        "n": h.n,
        "theta": {"cos": io.scalar_str(h.cos), "sin": io.scalar_str(h.sin), "radians": repr(h.theta)},
        "basis": list(names),
        "mode": "exact" if m.exact else "float",
        "soliton": io.soliton_to_dict(result, names),
        "structure": io.structure_to_dict(structure, names),
        "ricci": io.matrix_strs(result.ricci),
        "verdict_scope": "ricci-soliton" if certified else "algebraic-only",
    }


def theta_grid(steps: int) -> list[float]:
    if steps < 2:
        raise catalog.ParameterError("--theta-steps must be >= 2")
    return [math.pi / 2 * k / (steps - 1) for k in range(steps)]


def sweep_manifest(n_min: int, n_max: int, steps: int, tol: float, exact: bool, seed: int = 0, samples: int = 64) -> dict:
    if n_min < 2 or n_max < n_min:
        raise catalog.ParameterError("need 2 <= --n-min <= --n-max")
    grid = theta_grid(steps)
    points = []
    for theta in grid:
        if exact:
            c, s = catalog.pythagorean_pair(theta)
            points.append({"nominal_radians": repr(theta), "cos": io.scalar_str(c), "sin": io.scalar_str(s)})
        else:
            points.append({"nominal_radians": repr(theta)})
    records = []
    for n in range(n_min, n_max + 1):
        for theta in grid:
            if exact:
                c, s = catalog.pythagorean_pair(theta)
                h = catalog.build_lie_hypersurface(n, cos=c, sin=s)
            else:
                h = catalog.build_lie_hypersurface(n, theta)
            rec = classification_record(h, tol, samples, seed)
            rec["theta"]["nominal_radians"] = repr(theta)
            records.append(rec)
    return {
        "header": {
            "tool": "metriclie",
            "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        },
        "body": {
            "n_range": [n_min, n_max],
            "theta_grid": {"kind": "uniform on [0, pi/2], endpoints included", "steps": steps, "points": points},
            "tolerance": None if exact else repr(tol),
            "mode": "exact" if exact else "float",
            "seed": seed,
            "samples": samples,
            "records": records,
        },
    }


def sweep_csv(manifest: dict) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "theta", "status", "residual", "c"])
    for rec in manifest["body"]["records"]:
        sol = rec["soliton"]
        writer.writerow([rec["n"], rec["theta"]["nominal_radians"], sol["status"], sol["residual"], sol["c"] or ""])
    return buf.getvalue()


# --------------------------------------------------------------------------
# commands


def cmd_validate(args):
    m, _ = _load(args)
    report = validate(m, _tol(args, m.exact))
    return io.validation_to_dict(report, m.basis_names), (EXIT_OK if report.ok else EXIT_INVALID)


def cmd_curvature(args):
    m, _ = _load(args)
    return io.curvature_to_dict(curvature_report(m)), EXIT_OK


def cmd_derivations(args):
    m, _ = _load(args)
    return io.derivations_to_dict(derivation_basis(m, _tol(args, m.exact))), EXIT_OK


def cmd_soliton(args):
    m, order = _load(args)
    result = soliton_solve(m, _tol(args, m.exact))
    out = io.soliton_to_dict(result, m.basis_names)
    structure = analyze_structure(m, order=order, samples=args.samples, seed=args.seed)
    certified = structure.complete_solvability is CompleteSolvability.CERTIFIED
    out["verdict_scope"] = "ricci-soliton" if certified else "algebraic-only"
    return out, EXIT_OK


def cmd_classify(args):
    h = _hypersurface(args)
    return classification_record(h, args.tol, args.samples, args.seed), EXIT_OK


def cmd_sweep(args):
    manifest = sweep_manifest(
        args.n_min, args.n_max, args.theta_steps, args.tol, args.exact, args.seed, args.samples
    )
    if args.format == "csv":
        return sweep_csv(manifest), EXIT_OK
    return manifest, EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "curvature": cmd_curvature,
    "derivations": cmd_derivations,
    "soliton": cmd_soliton,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="algebra JSON file")
    common.add_argument("--family", choices=catalog.FAMILIES)
    common.add_argument("--n", type=int)
    common.add_argument("--dim", type=int, help="Heisenberg dimension (default 2n-1)")
    common.add_argument("--theta", type=float, help="angle in radians, 0 <= theta <= pi/2")
    common.add_argument("--theta-deg", type=float)
    common.add_argument("--cos", metavar="RAT")
    common.add_argument("--sin", metavar="RAT")
    common.add_argument("--alpha", metavar="RAT")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--exact", action="store_true", help="exact rational arithmetic")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=64)

    parser = argparse.ArgumentParser(prog="metriclie", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"metriclie {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "curvature", "derivations", "soliton", "classify"):
        sub.add_parser(name, parents=[common])
    sweep = sub.add_parser("sweep", parents=[common])
    sweep.add_argument("--n-min", type=int, default=2)
    sweep.add_argument("--n-max", type=int, default=6)
    sweep.add_argument("--theta-steps", type=int, default=5)
    return parser


def _emit(payload, out: str | None) -> None:
    text = payload if isinstance(payload, str) else io.dumps(payload)
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot write {out}: {exc}", EXIT_IO) from None
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAM if exc.code else EXIT_OK
    try:
        payload, code = COMMANDS[args.command](args)
        _emit(payload, args.out)
        return code
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (catalog.ParameterError, num.MixedModeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except (OSError, io.ParseError, StructuralError, MetricError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
