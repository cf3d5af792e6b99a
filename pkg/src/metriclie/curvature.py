"""Levi-Civita connection, curvature and Ricci operator of a metric Lie algebra.

Sign conventions::

    2 <nabla_X Y, Z> = <[X, Y], Z> + <[Z, X], Y> + <X, [Z, Y]>
    R(X, Y)          = nabla_[X,Y] - nabla_X nabla_Y + nabla_Y nabla_X
    Ric(X)           = sum_i R(E_i, X) E_i          ({E_i} orthonormal)

With these, the Heisenberg algebra has ``Ric(Z) = +1/2`` and the real
hyperbolic plane has ``Ric = -id``.  Operator matrices put the image of the
j-th basis vector in column j.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _numeric as num
from .algebra import MetricLieAlgebra, orthonormalize, require_valid


@dataclass(frozen=True)
class ConnectionCoefficients:
    """``nabla[i, j]`` is the coordinate vector of ``nabla_{E_i} E_j``."""

    nabla: np.ndarray
    weights: np.ndarray

    def covariant(self, i: int, j: int) -> np.ndarray:
        return self.nabla[i, j]


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature data.

    ``connection`` and ``riemann`` are expressed in the orthogonalized basis
    used for the computation (the stored basis when it is already
    orthonormal); ``ricci`` is the operator matrix in the stored basis.
    """

    connection: ConnectionCoefficients
    riemann: np.ndarray
    ricci: np.ndarray
    scalar: object
    basis_change: np.ndarray


def _weights(m: MetricLieAlgebra) -> np.ndarray:
    return np.array([m.gram[i, i] for i in range(m.dim)], dtype=object if m.exact else float)


def _koszul(C: np.ndarray, w: np.ndarray) -> np.ndarray:
    # orthogonal basis with squared norms w
    num2 = (
        C * w[None, None, :]
        + np.transpose(C, (1, 2, 0)) * w[None, :, None]
        + np.transpose(C, (2, 1, 0)) * w[:, None, None]
    )
    two_w = w * 2
    return num2 / two_w[None, None, :]


def _orthogonal_frame(m: MetricLieAlgebra, validate: bool):
    if validate:
        require_valid(m)
    if m.is_orthogonal:
        return m, None
    frame, B = orthonormalize(m)
    return frame, B


def connection(m: MetricLieAlgebra, validate: bool = True) -> ConnectionCoefficients:
    """Connection coefficients from the Koszul formula.

    Non-orthogonal inner products are first orthogonalized; the coefficients
    refer to that basis.
    """
    frame, _ = _orthogonal_frame(m, validate)
    w = _weights(frame)
    return ConnectionCoefficients(_koszul(frame.algebra.structure_tensor, w), w)


def _ricci_in_frame(frame: MetricLieAlgebra) -> np.ndarray:
    C = frame.algebra.structure_tensor
    w = _weights(frame)
    G = _koszul(C, w)
    # R(E_a, E_j) E_a split into its three terms
    t1 = np.einsum("ajm,mak->ajk", C, G)
    t2 = np.einsum("jap,apk->ajk", G, G)
    diag = np.einsum("aap->ap", G)
    t3 = np.einsum("ap,jpk->ajk", diag, G)
    terms = t1 - t2 + t3
    return np.einsum("ajl,a->lj", terms, 1 / w)


def _back_to_stored(M: np.ndarray, B, exact: bool) -> np.ndarray:
    if B is None:
        return M
    return B @ M @ num.inverse(B, exact)


def ricci_operator(m: MetricLieAlgebra, validate: bool = True) -> np.ndarray:
    """Matrix of the Ricci operator in the stored basis (column j = Ric(E_j))."""
    frame, B = _orthogonal_frame(m, validate)
    return _back_to_stored(_ricci_in_frame(frame), B, m.exact)


def scalar_curvature(m: MetricLieAlgebra, validate: bool = True):
    return np.trace(ricci_operator(m, validate))


def riemann_tensor(m: MetricLieAlgebra, validate: bool = True) -> np.ndarray:
    """``R[i, j, k, l] = <R(E_i, E_j) E_k, E_l>`` in the orthogonalized basis."""
    frame, _ = _orthogonal_frame(m, validate)
    return _riemann(frame)


def _riemann(frame: MetricLieAlgebra) -> np.ndarray:
    C = frame.algebra.structure_tensor
    w = _weights(frame)
    G = _koszul(C, w)
    t1 = np.einsum("ijm,mkl->ijkl", C, G)
    t2 = np.einsum("jkp,ipl->ijkl", G, G)
    t3 = np.einsum("ikp,jpl->ijkl", G, G)
    return (t1 - t2 + t3) * w[None, None, None, :]


def ricci_from_riemann(R: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Contract a Riemann tensor into the Ricci operator of its (orthogonal) frame."""
    # <Ric(E_j), E_l> = sum_a R[a, j, a, l] / w_a; divide by w_l for coordinates
    w = num.as_array(w, R.dtype == object)
    return np.einsum("ajal,a->lj", R, 1 / w) / w[:, None]


def curvature_report(m: MetricLieAlgebra, validate: bool = True) -> CurvatureReport:
    frame, B = _orthogonal_frame(m, validate)
    w = _weights(frame)
    nabla = _koszul(frame.algebra.structure_tensor, w)
    R = _riemann(frame)
    ric = _back_to_stored(ricci_from_riemann(R, w), B, m.exact)
    basis_change = num.eye(m.dim, m.exact) if B is None else B
    return CurvatureReport(ConnectionCoefficients(nabla, w), R, ric, np.trace(ric), basis_change)
