"""Solvability and complete solvability witnesses.

Complete solvability (solvable, and every ``ad X`` has real spectrum) is
*certified* by exhibiting a basis order in which every ``ad E_i`` is lower
triangular, and *refuted* by finding a sampled ``ad X`` with a non-real
eigenvalue.  When neither happens the answer is left undetermined.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _numeric as num
from .algebra import LieAlgebra, MetricLieAlgebra, StructuralError

DEFAULT_SAMPLES = 64


class CompleteSolvability(str, Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class StructureReport:
    derived_series_dims: list[int]
    solvable: bool
    triangular_basis_found: bool
    triangular_order: list[int] | None
    eigen_sample_real: bool
    samples_used: int

    @property
    def complete_solvability(self) -> CompleteSolvability:
        if not self.solvable or not self.eigen_sample_real:
            return CompleteSolvability.REFUTED
        if self.triangular_basis_found:
            return CompleteSolvability.CERTIFIED
        return CompleteSolvability.UNDETERMINED

    def to_dict(self) -> dict:
        out = asdict(self)
        out["complete_solvability"] = self.complete_solvability.value
        return out


def _algebra(m) -> LieAlgebra:
    return m.algebra if isinstance(m, MetricLieAlgebra) else m


def _zero_tol(exact: bool, tol):
    if exact:
        return 0
    return 1e-9 if tol is None else tol


def derived_series(m) -> list[int]:
    """Dimensions of ``g, [g,g], [[g,g],[g,g]], ...`` until they stop changing."""
    a = _algebra(m)
    C = a.structure_tensor
    sub = num.eye(a.dim, a.exact)
    dims = [a.dim]
    while sub.shape[0] > 0:
        images = np.einsum("ai,bj,ijk->abk", sub, sub, C).reshape(-1, a.dim)
        sub = num.row_basis(images, a.exact)
        if sub.shape[0] == dims[-1]:
            break
        dims.append(sub.shape[0])
    return dims


def is_lower_triangular_order(m, order: Sequence[int], tol=None) -> bool:
    """True if every ``ad E_i`` is lower triangular in the basis reordered by ``order``."""
    a = _algebra(m)
    order = list(order)
    if sorted(order) != list(range(a.dim)):
        raise StructuralError(f"{order} is not a permutation of range({a.dim})")
    tol = _zero_tol(a.exact, tol)
    pos = {b: p for p, b in enumerate(order)}
    for i in range(a.dim):
        for j in range(a.dim):
            for k, v in a.basis_bracket(i, j).items():
                # image of E_j may only reach E_k at or after E_j in the order
                if pos[k] < pos[j] and abs(v) > tol:
                    return False
    return True


def find_triangular_order(m, tol=None) -> list[int] | None:
    """Greedy search for a basis flag; ``None`` means the search failed.

    Builds the order from the end: a basis vector can be appended to the
    tail once every ``ad E_i`` maps it into the span of itself and the
    vectors already placed.  Failure is not a proof that no flag exists.
    """
    a = _algebra(m)
    tol = _zero_tol(a.exact, tol)
    placed: list[int] = []
    remaining = list(range(a.dim))
    while remaining:
        allowed = set(placed)
        for p in remaining:
            ok = all(
                k in allowed or k == p or abs(v) <= tol
                for i in range(a.dim)
                for k, v in a.basis_bracket(i, p).items()
            )
            if ok:
                placed.append(p)
                remaining.remove(p)
                break
        else:
            return None
    return placed[::-1]


def triangularity_witness(m, order: Sequence[int] | None = None, tol=None) -> tuple[bool, list[int] | None]:
    if order is not None:
        order = list(order)
        return (True, order) if is_lower_triangular_order(m, order, tol) else (False, None)
    found = find_triangular_order(m, tol)
    return found is not None, found


def eigen_sample_check(m, samples: int = DEFAULT_SAMPLES, seed: int = 0) -> bool:
    """Sample ``ad X`` for pseudo-random X and test for non-real eigenvalues.

    An eigenvalue counts as non-real when its imaginary part exceeds
    ``1e-9`` times the spectral radius (floored at ``1e-12 |ad X|_F`` so a
    nilpotent ``ad X`` is not judged on rounding noise).  ``True`` is
    evidence, not proof.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    a = _algebra(m)
    C = num.to_float(a.structure_tensor)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        x = rng.standard_normal(a.dim)
        adx = np.einsum("i,ijk->kj", x, C)
        eig = np.linalg.eigvals(adx)
        radius = np.max(np.abs(eig)) if eig.size else 0.0
        bound = 1e-9 * max(radius, 1e-12 * np.linalg.norm(adx))
        if np.any(np.abs(eig.imag) > bound):
            return False
    return True


def analyze_structure(
    m, order: Sequence[int] | None = None, samples: int = DEFAULT_SAMPLES, seed: int = 0, tol=None
) -> StructureReport:
    """Derived series plus both complete-solvability witnesses.

    An explicit ``order`` is tried first; if it is not triangular the greedy
    search runs as a fallback.
    """
    dims = derived_series(m)
    found, tri_order = triangularity_witness(m, order, tol)
    if not found and order is not None:
        found, tri_order = triangularity_witness(m, None, tol)
    real = eigen_sample_check(m, samples, seed)
    return StructureReport(dims, dims[-1] == 0, found, tri_order, real, samples)
