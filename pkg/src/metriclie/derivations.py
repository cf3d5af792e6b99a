"""Derivation algebra ``Der(g)`` as the nullspace of the Leibniz constraints."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _numeric as num
from .algebra import LieAlgebra, MetricLieAlgebra, StructuralError, require_valid

#: relative singular-value cutoff floor for the float nullspace
RANK_RTOL_FLOOR = 1e-10


@dataclass(frozen=True)
class DerivationSpace:
    basis: np.ndarray  # shape (dimension, dim, dim)
    max_leibniz_residual: object

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]


def _algebra(m) -> LieAlgebra:
    return m.algebra if isinstance(m, MetricLieAlgebra) else m


def leibniz_matrix(m) -> np.ndarray:
    """Linear map ``vec(D) -> Leibniz defects`` as a dense matrix.

    Columns are indexed by ``a * dim + b`` for the entry ``D[a, b]``; rows by
    ``(pair, m)`` for each basis pair ``i < j`` and output coordinate ``m``.
    The defect is ``D[E_i,E_j] - [D E_i, E_j] - [E_i, D E_j]``.
    """
    a = _algebra(m)
    dim = a.dim
    pairs = list(itertools.combinations(range(dim), 2))
    row_of = {p: r for r, p in enumerate(pairs)}
    L = num.zeros((len(pairs) * dim, dim * dim), a.exact)

    def add(i, j, mm, col, v):
        L[row_of[(i, j)] * dim + mm, col] += v

    for (i, j) in pairs:
        for k, v in a.basis_bracket(i, j).items():
            for mm in range(dim):
                add(i, j, mm, mm * dim + k, v)
    for p in range(dim):
        for q in range(dim):
            for mm, v in a.basis_bracket(p, q).items():
                # -[D E_i, E_j] picks D[p, i] with [E_p, E_j], j = q
                for i in range(q):
                    add(i, q, mm, p * dim + i, -v)
                # -[E_i, D E_j] picks D[q, j] with [E_i, E_q], i = p
                for j in range(p + 1, dim):
                    add(p, j, mm, q * dim + j, -v)
    return L


def leibniz_defects(m, D) -> np.ndarray:
    """``defect[i, j] = D[E_i,E_j] - [D E_i, E_j] - [E_i, D E_j]`` for all i, j."""
    a = _algebra(m)
    if np.shape(D) != (a.dim, a.dim):
        raise StructuralError(f"operator must be {a.dim}x{a.dim}, got {np.shape(D)}")
    D = num.as_array(D, a.exact)
    out = num.zeros((a.dim,) * 3, a.exact)
    # walk the nonzero brackets only; exact-mode dense contractions are slow
    for (p, q), terms in a.nonzero_brackets():
        for k, v in terms.items():
            out[p, q, :] += v * D[:, k]  # D[E_p, E_q]
            out[:, q, k] -= v * D[p, :]  # [D E_i, E_q] through D[p, i]
            out[p, :, k] -= v * D[q, :]  # [E_p, D E_j] through D[q, j]
    return out


def leibniz_residual(m, D):
    """Largest Leibniz defect over basis pairs; zero exactly for derivations."""
    a = _algebra(m)
    defects = leibniz_defects(a, D)
    iu = np.triu_indices(a.dim, 1)
    return num.max_abs(defects[iu])


def derivation_basis(m, tol=None, validate: bool = True) -> DerivationSpace:
    """Basis of ``Der(g)``.

    Exact mode reads the basis off the reduced echelon form of the Leibniz
    system.  Float mode takes right singular vectors whose singular value is
    below ``max(tol, 1e-10) * sigma_max``; the flattened basis is orthonormal.
    """
    if validate and isinstance(m, MetricLieAlgebra):
        require_valid(m)
    a = _algebra(m)
    L = leibniz_matrix(a)
    if a.exact:
        null = num.nullspace(L, True)
    else:
        rtol = max(1e-9 if tol is None else float(tol), RANK_RTOL_FLOOR)
        null = num.nullspace(L, False, rtol=rtol)
    basis = null.reshape(-1, a.dim, a.dim)
    worst = max((leibniz_residual(a, D) for D in basis), default=Fraction(0) if a.exact else 0.0)
    return DerivationSpace(basis, worst)
