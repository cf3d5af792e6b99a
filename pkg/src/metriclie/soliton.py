"""Algebraic Ricci soliton test: is ``Ric = c * id + D`` for some derivation ``D``?

The condition is linear in ``(c, D)``, so it is decided as membership of the
Ricci operator in the subspace ``span{id} + Der(g)`` of operator matrices,
measured in the Frobenius norm.  A positive result comes with a certificate
``(c, D)``.  A negative one comes with the distance to the subspace and the
largest entry of the residual matrix.

For simply-connected completely solvable groups, a positive answer is the
same as the left-invariant metric being a Ricci soliton.  For other groups
it only answers the algebraic question (see :mod:`metriclie.structure`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import _numeric as num
from .algebra import MetricLieAlgebra, StructuralError, require_valid
from .curvature import ricci_operator
from .derivations import DerivationSpace, derivation_basis, leibniz_residual

DEFAULT_TOL = 1e-9


class Status(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Obstruction:
    row: int
    col: int
    value: object


@dataclass(frozen=True)
class SolitonResult:
    status: Status
    residual: float
    residual_squared: object
    c: object = None
    D: np.ndarray | None = None
    derivation_coords: np.ndarray | None = None
    c_unique: bool = True
    obstruction: Obstruction | None = None
    ricci: np.ndarray | None = None
    derivations: DerivationSpace | None = None

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    @property
    def exact_residual(self):
        """The residual as an exact rational, when it is one (exact mode only)."""
        if isinstance(self.residual_squared, Fraction):
            return num.rational_sqrt(self.residual_squared)
        return None


class CertificateCheck(NamedTuple):
    ok: bool
    ricci_residual: float
    leibniz_residual: object


def _tol(exact: bool, tol):
    if tol is None:
        return Fraction(0) if exact else DEFAULT_TOL
    return tol


def soliton_solve(m: MetricLieAlgebra, tol=None, validate: bool = True) -> SolitonResult:
    """Distance from ``Ric`` to ``span{id} + Der(g)`` and, if zero, ``(c, D)``.

    When ``id`` is itself a derivation the split into ``c`` and ``D`` is not
    unique.  The returned representative minimizes ``c**2 + |D|_F**2`` and
    ``c_unique`` is False.
    """
    if validate:
        require_valid(m)
    exact, dim = m.exact, m.dim
    tol = _tol(exact, tol)
    ric = ricci_operator(m, validate=False)
    der = derivation_basis(m, tol=None if exact else max(float(tol), 1e-10), validate=False)
    ident = num.eye(dim, exact)
    flat = der.basis.reshape(der.dimension, dim * dim)
    target = ric.reshape(-1)

    id_is_derivation = leibniz_residual(m, ident) <= (0 if exact else tol)
    if id_is_derivation:
        coords = num.project_coefficients(target, flat, exact)
        P = (coords @ flat).reshape(dim, dim) if der.dimension else num.zeros((dim, dim), exact)
        c = np.trace(P) / (dim + 1)
        D = P - c * ident
        id_coords = num.project_coefficients(ident.reshape(-1), flat, exact)
        coords = coords - c * id_coords
    else:
        rows = np.vstack([ident.reshape(1, -1), flat]) if der.dimension else ident.reshape(1, -1)
        coef = num.project_coefficients(target, rows, exact)
        c, coords = coef[0], coef[1:]
        D = (coords @ flat).reshape(dim, dim) if der.dimension else num.zeros((dim, dim), exact)
        if not exact:
            c = float(c)

    residual_matrix = ric - c * ident - D
    res_sq = num.frobenius_sq(residual_matrix)
    residual = math.sqrt(float(res_sq))
    feasible = res_sq == 0 if exact else residual <= tol
    common = dict(
        residual=residual,
        residual_squared=res_sq,
        ricci=ric,
        derivations=der,
    )
    if feasible:
        return SolitonResult(
            Status.FEASIBLE,
            c=c,
            D=D,
            derivation_coords=coords,
            c_unique=not id_is_derivation,
            **common,
        )
    span = np.vstack([ident.reshape(1, -1), flat])
    return SolitonResult(Status.INFEASIBLE, obstruction=_obstruction(residual_matrix, span), **common)


def _obstruction(residual: np.ndarray, span: np.ndarray) -> Obstruction:
    """Entry of the residual to report for an infeasible instance.

    Entries on which every element of ``span{id} + Der(g)`` vanishes cannot
    be corrected by any choice of ``(c, D)``; the largest nonzero one of
    those is reported.  Without such an entry, the largest residual entry.
    """
    mags = np.abs(num.to_float(residual)).reshape(-1)
    span_mags = np.abs(num.to_float(span))
    pinned = np.all(span_mags <= 1e-10 * max(1.0, span_mags.max(initial=0.0)), axis=0)
    candidates = np.where(pinned & (mags > 1e-10 * mags.max()), mags, -1.0)
    flat_index = int(np.argmax(candidates)) if candidates.max() > 0 else int(np.argmax(mags))
    r, c = np.unravel_index(flat_index, residual.shape)
    return Obstruction(int(r), int(c), residual[r, c])


def verify_certificate(m: MetricLieAlgebra, c, D, tol=None) -> CertificateCheck:
    """Check ``Ric = c * id + D`` and ``D in Der(g)`` directly.

    Returns ``(ok, |Ric - c id - D|_F, leibniz_residual(D))``.  In exact mode
    ``tol`` defaults to zero and the comparison is exact.
    """
    exact = m.exact
    if np.shape(D) != (m.dim, m.dim):
        raise StructuralError(f"D must be {m.dim}x{m.dim}, got {np.shape(D)}")
    D = num.as_array(D, exact)
    c = num.coerce(c, exact)
    tol = _tol(exact, tol)
    diff = ricci_operator(m) - c * num.eye(m.dim, exact) - D
    sq = num.frobenius_sq(diff)
    lres = leibniz_residual(m, D)
    ok = sq <= tol * tol and lres <= tol
    return CertificateCheck(bool(ok), math.sqrt(float(sq)), lres)
