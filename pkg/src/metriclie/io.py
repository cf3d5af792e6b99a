"""JSON forms of algebras and of every result type.

Algebra file::

    {"dim": 3, "basis": ["A0", "Y1", "Z0"], "gram": null,
     "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "v": "1/2"}]}]}

Scalars are strings: ``"p/q"`` or integers for exact values, decimals for
floats.  A file mixing rationals and decimals is rejected; integers go with
either.  ``"gram": null`` means the basis is orthonormal.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import _numeric as num
from .algebra import LieAlgebra, MetricLieAlgebra, StructuralError, ValidationReport
from .curvature import CurvatureReport
from .derivations import DerivationSpace
from .soliton import SolitonResult
from .structure import StructureReport


class ParseError(ValueError):
    """The input file is not a well-formed algebra description."""


def scalar_str(v) -> str:
    return num.format_scalar(v)


def matrix_strs(M) -> list:
    M = np.asarray(M)
    if M.ndim == 0:
        return scalar_str(M.item())
    return [matrix_strs(row) for row in M]


def algebra_to_dict(m: MetricLieAlgebra) -> dict:
    a = m.algebra
    brackets = [
        {"i": i, "j": j, "terms": [{"k": k, "v": scalar_str(v)} for k, v in sorted(terms.items())]}
        for (i, j), terms in sorted(a.structure.items())
    ]
    return {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "gram": None if m.is_orthonormal else matrix_strs(m.gram),
        "brackets": brackets,
    }


def algebra_from_dict(data: dict) -> MetricLieAlgebra:
    try:
        dim = data["dim"]
        basis = data.get("basis") or [f"E{i}" for i in range(dim)]
        entries = data.get("brackets", [])
        gram = data.get("gram")
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from None
    if not isinstance(dim, int) or dim < 1:
        raise StructuralError(f"dim must be a positive integer, got {dim!r}")
    if len(basis) != dim:
        raise StructuralError(f"basis has {len(basis)} names but dim is {dim}")

    brackets: dict[tuple[int, int], dict[int, object]] = {}
    values = []
    for n, entry in enumerate(entries):
        try:
            i, j = entry["i"], entry["j"]
            terms = {t["k"]: _scalar(t["v"]) for t in entry["terms"]}
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bracket entry #{n} is malformed: {exc}") from None
        for idx in (i, j, *terms):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < dim:
                raise StructuralError(f"bracket entry #{n} {entry!r}: index {idx!r} out of range")
        if i >= j:
            raise StructuralError(f"bracket entry #{n} {entry!r}: need i < j")
        if (i, j) in brackets:
            raise StructuralError(f"bracket entry #{n}: pair ({i}, {j}) listed twice")
        brackets[(i, j)] = terms
        values.extend(terms.values())

    gram_vals = None
    if gram is not None:
        try:
            gram_vals = [[_scalar(v) for v in row] for row in gram]
        except TypeError:
            raise ParseError("gram must be a list of rows") from None
        values.extend(v for row in gram_vals for v in row)
    try:
        exact = num.infer_exact(values)
    except num.MixedModeError as exc:
        raise ParseError(f"file mixes exact rationals and decimal floats ({exc})") from None
    algebra = LieAlgebra.from_brackets(basis, brackets, exact)
    return MetricLieAlgebra(algebra, gram_vals)


def _scalar(v):
    if isinstance(v, bool):
        raise ParseError(f"not a scalar: {v!r}")
    try:
        return num.parse_scalar(v)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_algebra(path) -> MetricLieAlgebra:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return algebra_from_dict(data)


def save_algebra(m: MetricLieAlgebra, path) -> None:
    Path(path).write_text(dumps(algebra_to_dict(m)), encoding="utf-8")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def validation_to_dict(report: ValidationReport, names) -> dict:
    return {
        "ok": report.ok,
        "jacobi_max_residual": scalar_str(report.jacobi_max_residual),
        "gram_pd": report.gram_pd,
        "failures": [
            {"triple": [names[t] for t in triple], "residual": matrix_strs(vec)}
            for triple, vec in report.failures
        ],
    }


def curvature_to_dict(report: CurvatureReport) -> dict:
    R = report.riemann
    nonzero = [
        {"ijkl": list(map(int, idx)), "v": scalar_str(v)}
        for idx, v in np.ndenumerate(R)
        if v != 0
    ]
    return {
        "ricci": matrix_strs(report.ricci),
        "scalar": scalar_str(report.scalar),
        "connection": matrix_strs(report.connection.nabla),
        "riemann_nonzero": nonzero,
    }


def derivations_to_dict(space: DerivationSpace) -> dict:
    return {
        "dimension": space.dimension,
        "basis": matrix_strs(space.basis),
        "max_leibniz_residual": scalar_str(space.max_leibniz_residual),
    }


def residual_str(result: SolitonResult) -> str:
    exact = result.exact_residual
    return scalar_str(exact) if exact is not None else scalar_str(result.residual)


def soliton_to_dict(result: SolitonResult, names) -> dict:
    obstruction = None
    if result.obstruction is not None:
        ob = result.obstruction
        obstruction = {"row": names[ob.row], "col": names[ob.col], "value": scalar_str(ob.value)}
    return {
        "status": result.status.value,
        "c": None if result.c is None else scalar_str(result.c),
        "c_unique": result.c_unique,
        "D": None if result.D is None else matrix_strs(result.D),
        "derivation_coords": None if result.derivation_coords is None else matrix_strs(result.derivation_coords),
        "residual": residual_str(result),
        "residual_squared": scalar_str(result.residual_squared),
        "obstruction": obstruction,
    }


def structure_to_dict(report: StructureReport, names) -> dict:
    out = report.to_dict()
    if report.triangular_order is not None:
        out["triangular_order"] = [names[i] for i in report.triangular_order]
    return out
