"""Lie algebras given by structure constants, and inner products on them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from . import _numeric as num
from ._numeric import MixedModeError


class StructuralError(ValueError):
    """Malformed input: bad indices, wrong shapes, mismatched lengths."""


class MetricError(ValueError):
    """The inner product is not symmetric positive definite."""


class ValidationError(ValueError):
    """The data does not satisfy the Lie algebra axioms."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """A real Lie algebra in a fixed basis.

    ``structure`` maps ordered pairs ``(i, j)`` with ``i < j`` to the sparse
    expansion ``{k: c_ij^k}`` of ``[E_i, E_j]``.  The other pairs follow from
    antisymmetry.  All coefficients share one numeric mode (``exact``).
    """

    basis_names: tuple[str, ...]
    structure: Mapping[tuple[int, int], Mapping[int, object]]
    exact: bool = True

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @classmethod
    def from_brackets(
        cls,
        basis_names: Sequence[str],
        brackets: Mapping,
        exact: bool | None = None,
    ) -> "LieAlgebra":
        """Build from ``{(a, b): {c: value}}`` where a, b, c are indices or basis names.

        Pairs with ``a > b`` are accepted and stored negated.  ``exact=None``
        infers the mode from the values (integers alone give exact mode).
        """
        names = tuple(str(n) for n in basis_names)
        if not names:
            raise StructuralError("a Lie algebra needs at least one basis vector")
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate basis names in {names}")
        lookup = {n: i for i, n in enumerate(names)}

        def index(key, where):
            if isinstance(key, str):
                if key not in lookup:
                    raise StructuralError(f"unknown basis name {key!r} in bracket {where}")
                return lookup[key]
            if isinstance(key, bool) or not isinstance(key, (int, np.integer)):
                raise StructuralError(f"bad basis index {key!r} in bracket {where}")
            if not 0 <= key < len(names):
                raise StructuralError(f"basis index {key} out of range in bracket {where}")
            return int(key)

        raw = [v for terms in brackets.values() for v in terms.values()]
        raw = [num.parse_scalar(v) if isinstance(v, str) else v for v in raw]
        mode = num.infer_exact(raw) if exact is None else exact

        table: dict[tuple[int, int], dict[int, object]] = {}
        for pair, terms in brackets.items():
            i, j = (index(p, pair) for p in pair)
            if i == j:
                raise StructuralError(f"bracket {pair} pairs a basis vector with itself")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if (i, j) in table:
                raise StructuralError(f"bracket {pair} given twice")
            row = {}
            for k, v in terms.items():
                kk = index(k, pair)
                val = sign * num.coerce(v, mode)
                if val != 0:
                    row[kk] = row.get(kk, 0) + val
            row = {k: v for k, v in row.items() if v != 0}
            if row:
                table[(i, j)] = row
        return cls(names, table, mode)

    @classmethod
    def abelian(cls, dim: int, exact: bool = True) -> "LieAlgebra":
        if dim < 1:
            raise StructuralError("dimension must be positive")
        return cls(tuple(f"E{i}" for i in range(dim)), {}, exact)

    def __post_init__(self):
        if self.dim < 1:
            raise StructuralError("a Lie algebra needs at least one basis vector")
        for (i, j), terms in self.structure.items():
            if not (0 <= i < j < self.dim):
                raise StructuralError(f"structure entry ({i}, {j}) must satisfy 0 <= i < j < dim")
            for k, v in terms.items():
                if not 0 <= k < self.dim:
                    raise StructuralError(f"structure entry ({i}, {j}, {k}) has k out of range")
                if self.exact and not isinstance(v, Fraction):
                    raise MixedModeError(f"entry ({i}, {j}, {k}) = {v!r} is not exact")
                if not self.exact and isinstance(v, Fraction):
                    raise MixedModeError(f"entry ({i}, {j}, {k}) = {v!r} in a float algebra")

    @cached_property
    def _table(self) -> dict[tuple[int, int], dict[int, object]]:
        full = {}
        for (i, j), terms in self.structure.items():
            full[(i, j)] = dict(terms)
            full[(j, i)] = {k: -v for k, v in terms.items()}
        return full

    def nonzero_brackets(self):
        """``((i, j), {k: c_ij^k})`` for every ordered pair with a nonzero bracket."""
        return self._table.items()

    def basis_bracket(self, i: int, j: int) -> dict[int, object]:
        """Sparse expansion of ``[E_i, E_j]``."""
        return self._table.get((i, j), {})

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        """Dense ``C[i, j, k] = c_ij^k`` (read-only)."""
        C = num.zeros((self.dim,) * 3, self.exact)
        for (i, j), terms in self._table.items():
            for k, v in terms.items():
                C[i, j, k] = v
        return _freeze(C)

    def ad(self, i: int) -> np.ndarray:
        """Matrix of ``ad E_i``; column ``j`` holds ``[E_i, E_j]``."""
        return np.ascontiguousarray(self.structure_tensor[i].T)

    def bracket(self, x, y) -> np.ndarray:
        x = self._vector(x)
        y = self._vector(y)
        return np.einsum("i,j,ijk->k", x, y, self.structure_tensor)

    def _vector(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=object if self.exact else None)
        if x.shape != (self.dim,):
            raise StructuralError(f"expected a vector of length {self.dim}, got shape {x.shape}")
        return num.as_array(x, self.exact)

    def unit(self, name_or_index) -> np.ndarray:
        i = self.basis_names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        v = num.zeros(self.dim, self.exact)
        v[i] = Fraction(1) if self.exact else 1.0
        return v

    def change_basis(self, B, names: Sequence[str] | None = None) -> "LieAlgebra":
        """Rewrite the brackets in the basis ``E'_j = sum_i B[i, j] E_i``."""
        B = num.as_array(B, self.exact)
        if B.shape != (self.dim, self.dim):
            raise StructuralError(f"change of basis must be {self.dim}x{self.dim}")
        Binv = num.inverse(B, self.exact)
        Cn = np.einsum("ijk,ck->ijc", self.structure_tensor, Binv)
        Cn = np.einsum("ia,ijc->ajc", B, Cn)
        Cn = np.einsum("jb,ajc->abc", B, Cn)
        return LieAlgebra(tuple(names or self.basis_names), _sparse_from_dense(Cn), self.exact)

    def to_float(self) -> "LieAlgebra":
        if not self.exact:
            return self
        table = {p: {k: float(v) for k, v in t.items()} for p, t in self.structure.items()}
        return LieAlgebra(self.basis_names, table, False)


def _sparse_from_dense(C: np.ndarray) -> dict[tuple[int, int], dict[int, object]]:
    dim = C.shape[0]
    table = {}
    for i, j in itertools.combinations(range(dim), 2):
        terms = {k: C[i, j, k] for k in range(dim) if C[i, j, k] != 0}
        if terms:
            table[(i, j)] = terms
    return table


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """A Lie algebra with an inner product given by its Gram matrix.

    ``gram=None`` means the stored basis is orthonormal.
    """

    algebra: LieAlgebra
    gram: np.ndarray | None = field(default=None)

    def __post_init__(self):
        exact = self.algebra.exact
        if self.gram is None:
            g = num.eye(self.dim, exact)
        else:
            raw = np.asarray(self.gram, dtype=object)
            if raw.shape != (self.dim, self.dim):
                raise StructuralError(f"gram must be {self.dim}x{self.dim}, got {raw.shape}")
            g = num.as_array(raw, exact)
            if not all(g[i, j] == g[j, i] for i in range(self.dim) for j in range(i)):
                raise MetricError("gram matrix is not symmetric")
        object.__setattr__(self, "gram", _freeze(g))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def exact(self) -> bool:
        return self.algebra.exact

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.algebra.basis_names

    @cached_property
    def is_orthonormal(self) -> bool:
        return bool(np.all(self.gram == num.eye(self.dim, self.exact)))

    @cached_property
    def is_orthogonal(self) -> bool:
        off = self.gram - np.diag(np.diag(self.gram))
        return bool(np.all(off == 0))

    def bracket(self, x, y) -> np.ndarray:
        return bracket(self, x, y)

    def inner(self, x, y):
        return self.algebra._vector(x) @ self.gram @ self.algebra._vector(y)

    def scaled(self, lam) -> "MetricLieAlgebra":
        """Same bracket, inner product multiplied by ``lam``."""
        lam = num.coerce(lam, self.exact)
        return MetricLieAlgebra(self.algebra, self.gram * lam)

    def to_float(self) -> "MetricLieAlgebra":
        return MetricLieAlgebra(self.algebra.to_float(), num.to_float(self.gram))


@dataclass(frozen=True)
class ValidationReport:
    jacobi_max_residual: object
    gram_pd: bool
    failures: list[tuple[tuple[int, int, int], np.ndarray]]

    @property
    def ok(self) -> bool:
        return self.gram_pd and not self.failures


def _default_tol(exact: bool):
    return Fraction(0) if exact else 1e-9


def jacobi_residual(a: LieAlgebra, i: int, j: int, k: int) -> np.ndarray:
    """``[[E_i,E_j],E_k] + [[E_j,E_k],E_i] + [[E_k,E_i],E_j]`` as a vector."""
    out = num.zeros(a.dim, a.exact)
    for (p, q, r) in ((i, j, k), (j, k, i), (k, i, j)):
        for s, v in a.basis_bracket(p, q).items():
            for t, w in a.basis_bracket(s, r).items():
                out[t] += v * w
    return out


def gram_is_pd(gram: np.ndarray, exact: bool) -> bool:
    if exact:
        return _leading_minors_positive(gram)
    try:
        np.linalg.cholesky(np.asarray(gram, float))
    except np.linalg.LinAlgError:
        return False
    return True


def _leading_minors_positive(gram: np.ndarray) -> bool:
    # Gaussian elimination without pivoting: the k-th pivot is the ratio of
    # consecutive leading minors, so all minors are positive iff all pivots are.
    A = [list(row) for row in gram]
    n = len(A)
    for k in range(n):
        if A[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = A[r][k] / A[k][k]
            if f:
                for c in range(k, n):
                    A[r][c] -= f * A[k][c]
    return True


def validate(m: MetricLieAlgebra, tol=None) -> ValidationReport:
    """Check the Jacobi identity on every basis triple and the Gram matrix."""
    a = m.algebra
    tol = _default_tol(m.exact) if tol is None else tol
    worst = Fraction(0) if m.exact else 0.0
    failures = []
    for i, j, k in itertools.combinations(range(a.dim), 3):
        vec = jacobi_residual(a, i, j, k)
        res = num.max_abs(vec)
        worst = max(worst, res)
        if res > tol:
            failures.append(((i, j, k), vec))
    return ValidationReport(worst, gram_is_pd(m.gram, m.exact), failures)


def require_valid(m: MetricLieAlgebra, tol=None) -> None:
    report = validate(m, tol)
    if not report.gram_pd:
        raise ValidationError("gram matrix is not positive definite", report)
    if report.failures:
        (i, j, k), _ = report.failures[0]
        names = m.basis_names
        raise ValidationError(
            f"Jacobi identity fails on {len(report.failures)} triple(s), "
            f"first ({names[i]}, {names[j]}, {names[k]})",
            report,
        )


def bracket(m: MetricLieAlgebra, x, y) -> np.ndarray:
    """Bracket of two coefficient vectors."""
    return m.algebra.bracket(x, y)


def orthonormalize(m: MetricLieAlgebra) -> tuple[MetricLieAlgebra, np.ndarray]:
    """Change to a basis in which the inner product is diagonal.

    Returns the rewritten algebra and ``B`` with ``E'_j = sum_i B[i, j] E_i``;
    ``B`` is upper triangular.  In float mode the new Gram matrix is the
    identity (Cholesky).  In exact mode Gram-Schmidt gives an orthogonal basis;
    vectors whose squared norm is the square of a rational are normalized, the
    rest keep their squared norm on the diagonal of the new Gram matrix.
    """
    dim, exact = m.dim, m.exact
    if m.is_orthonormal:
        return m, num.eye(dim, exact)
    if not gram_is_pd(m.gram, exact):
        raise MetricError("gram matrix is not positive definite")
    G = m.gram
    if exact:
        B = num.eye(dim, True)
        norms = []
        for j in range(dim):
            for i in range(j):
                coef = (B[:, j] @ G @ B[:, i]) / norms[i]
                B[:, j] = B[:, j] - coef * B[:, i]
            norms.append(B[:, j] @ G @ B[:, j])
        new_gram = num.zeros((dim, dim), True)
        for j, w in enumerate(norms):
            root = num.rational_sqrt(w)
            if root is None:
                new_gram[j, j] = w
            else:
                B[:, j] = B[:, j] / root
                new_gram[j, j] = Fraction(1)
    else:
        L = np.linalg.cholesky(np.asarray(G, float))
        B = np.linalg.inv(L.T)
        new_gram = None
    return MetricLieAlgebra(m.algebra.change_basis(B), new_gram), B
