"""Scalar modes and the small dense linear algebra shared by the exact and float paths.

Two numeric modes are supported.  Float mode stores ``float`` values in
``float64`` arrays; exact mode stores :class:`fractions.Fraction` values in
``object`` arrays.  Plain integers are neutral and adopt whichever mode the
surrounding data uses.  Mixing a float with a fraction is refused instead of
being coerced silently.
"""
from __future__ import annotations

import math
import numbers
import re
from fractions import Fraction
from typing import Iterable

import numpy as np


class MixedModeError(TypeError):
    """Raised when exact rationals and floats meet in the same computation."""


_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$")


def parse_scalar(text):
    """Parse a scalar string.

    ``"3"`` gives an ``int``, ``"-5/4"`` a ``Fraction`` and anything else
    that ``float`` accepts (``"0.5"``, ``"1e-3"``) a ``float``.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a scalar: {text!r}")
    if isinstance(text, (int, Fraction, float)):
        return text
    s = str(text).strip()
    if _RATIONAL_RE.match(s):
        if "/" in s:
            num, den = s.split("/")
            if int(den) == 0:
                raise ValueError(f"zero denominator in {text!r}")
            return Fraction(int(num), int(den))
        return int(s)
    try:
        return float(s)
    except ValueError:
        raise ValueError(f"cannot parse scalar {text!r}") from None


def format_scalar(value) -> str:
    """Lossless string form: ``"p/q"`` for rationals, shortest repr for floats."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, numbers.Integral):
        return str(int(value))
    return repr(float(value))


def _kind(value) -> str:
    if isinstance(value, bool):
        raise TypeError(f"booleans are not scalars: {value!r}")
    if isinstance(value, numbers.Integral):
        return "int"
    if isinstance(value, Fraction):
        return "exact"
    if isinstance(value, numbers.Real):
        return "float"
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def infer_exact(values: Iterable, default: bool = True) -> bool:
    """Decide the mode of a collection of raw scalars (ints are neutral)."""
    kinds = {_kind(v) for v in values}
    if "exact" in kinds and "float" in kinds:
        raise MixedModeError("values mix exact rationals and floats")
    if "float" in kinds:
        return False
    if "exact" in kinds:
        return True
    return default


def coerce(value, exact: bool):
    """Convert one raw scalar into the requested mode."""
    if isinstance(value, str):
        value = parse_scalar(value)
    kind = _kind(value)
    if exact:
        if kind == "float":
            raise MixedModeError(f"float {value!r} given where an exact rational is required")
        return Fraction(value)
    if kind == "exact":
        raise MixedModeError(f"rational {value} given to a float-mode computation")
    return float(value)


def as_array(values, exact: bool) -> np.ndarray:
    arr = np.asarray(values, dtype=object if exact else None)
    if exact:
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = coerce(v, True)
        return out
    if arr.dtype == object:
        for v in arr.flat:
            if isinstance(v, Fraction):
                raise MixedModeError("rational entry in a float-mode array")
    return arr.astype(float)


def zeros(shape, exact: bool) -> np.ndarray:
    if exact:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros(shape)


def eye(n: int, exact: bool) -> np.ndarray:
    out = zeros((n, n), exact)
    for i in range(n):
        out[i, i] = Fraction(1) if exact else 1.0
    return out


def is_exact_array(arr: np.ndarray) -> bool:
    return arr.dtype == object


def to_float(arr) -> np.ndarray:
    return np.asarray(arr).astype(float)


def max_abs(arr):
    """Max-norm; exact arrays give an exact value, empty arrays give zero."""
    arr = np.asarray(arr)
    if arr.size == 0:
        return Fraction(0) if arr.dtype == object else 0.0
    if arr.dtype == object:
        return max(abs(v) for v in arr.flat)
    return float(np.max(np.abs(arr)))


def frobenius_sq(arr):
    arr = np.asarray(arr)
    if arr.dtype == object:
        return sum((v * v for v in arr.flat), Fraction(0))
    return float(np.sum(arr * arr))


def rational_sqrt(q: Fraction):
    """Exact square root of a non-negative rational, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative argument")
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# ---------------------------------------------------------------------------
# exact elimination on sparse rows


def _sparse_rows(A) -> list[dict[int, Fraction]]:
    rows = []
    for row in np.asarray(A, dtype=object):
        d = {j: Fraction(v) for j, v in enumerate(row) if v != 0}
        if d:
            rows.append(d)
    return rows


def rref(A, ncols: int | None = None) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Rows are kept as sparse ``{column: value}`` dicts; the Leibniz systems fed
    through here have a handful of nonzeros per row.  Returns the pivot rows
    (each normalized to a leading 1) and their pivot columns.
    """
    A = np.asarray(A, dtype=object)
    if ncols is None:
        ncols = A.shape[1] if A.ndim == 2 else 0
    pending = _sparse_rows(A) if A.size else []
    pivot_rows: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for col in range(ncols):
        pick = next((i for i, r in enumerate(pending) if col in r), None)
        if pick is None:
            continue
        prow = pending.pop(pick)
        inv = 1 / prow[col]
        prow = {j: v * inv for j, v in prow.items()}
        for r in pending:
            _eliminate(r, prow, col)
        for r in pivot_rows:
            _eliminate(r, prow, col)
        pending = [r for r in pending if r]
        pivot_rows.append(prow)
        pivots.append(col)
    return pivot_rows, pivots


def _eliminate(row: dict, prow: dict, col: int) -> None:
    f = row.get(col)
    if not f:
        return
    for j, v in prow.items():
        nv = row.get(j, 0) - f * v
        if nv:
            row[j] = nv
        else:
            row.pop(j, None)


def _svd_rank(s: np.ndarray, rtol: float, atol: float) -> int:
    if s.size == 0 or s[0] <= atol:
        return 0
    return int(np.sum(s > max(rtol * s[0], atol)))


def nullspace(A, exact: bool, rtol: float = 1e-10, atol: float = 0.0) -> np.ndarray:
    """Basis of ``{x : A x = 0}`` as the rows of the returned array.

    Exact mode reads the basis off the reduced echelon form (one vector per
    free column).  Float mode uses the SVD and treats singular values at or
    below ``rtol * sigma_max`` as zero; the rows are then orthonormal.
    """
    A = np.asarray(A, dtype=object if exact else float)
    ncols = A.shape[1]
    if exact:
        rows, pivots = rref(A, ncols)
        free = [c for c in range(ncols) if c not in set(pivots)]
        basis = zeros((len(free), ncols), True)
        for b, f in enumerate(free):
            basis[b, f] = Fraction(1)
            for r, p in zip(rows, pivots):
                if f in r:
                    basis[b, p] = -r[f]
        return basis
    if A.shape[0] == 0:
        return np.eye(ncols)
    _, s, vt = np.linalg.svd(A, full_matrices=True)
    return vt[_svd_rank(s, rtol, atol):].copy()


def row_basis(A, exact: bool, rtol: float = 1e-10, atol: float = 1e-12) -> np.ndarray:
    """Independent rows spanning the row space of ``A``."""
    A = np.asarray(A, dtype=object if exact else float)
    ncols = A.shape[1]
    if exact:
        rows, _ = rref(A, ncols)
        out = zeros((len(rows), ncols), True)
        for i, r in enumerate(rows):
            for j, v in r.items():
                out[i, j] = v
        return out
    if A.shape[0] == 0:
        return np.zeros((0, ncols))
    _, s, vt = np.linalg.svd(A, full_matrices=False)
    return vt[:_svd_rank(s, rtol, atol)].copy()


def rank(A, exact: bool, rtol: float = 1e-10, atol: float = 1e-12) -> int:
    return row_basis(A, exact, rtol, atol).shape[0]


def solve(A, b, exact: bool) -> np.ndarray:
    """Solve a square nonsingular system; ``b`` may be a vector or a matrix."""
    if not exact:
        return np.linalg.solve(np.asarray(A, float), np.asarray(b, float))
    A = np.asarray(A, dtype=object)
    b = np.asarray(b, dtype=object)
    vec = b.ndim == 1
    B = b.reshape(-1, 1) if vec else b
    n = A.shape[0]
    rows, pivots = rref(np.hstack([A, B]), n)
    if pivots != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    x = zeros((n, B.shape[1]), True)
    for i, r in enumerate(rows):
        for j, v in r.items():
            if j >= n:
                x[i, j - n] = v
    return x[:, 0] if vec else x


def inverse(A, exact: bool) -> np.ndarray:
    if not exact:
        return np.linalg.inv(np.asarray(A, float))
    return solve(A, eye(np.asarray(A).shape[0], True), True)


def project_coefficients(target, rows, exact: bool, rtol: float = 1e-12):
    """Least-squares coefficients ``a`` minimizing ``|target - a @ rows|``.

    ``rows`` must be linearly independent in exact mode.  Float mode defers
    to ``numpy.linalg.lstsq`` (minimum-norm solution on rank deficiency).
    """
    rows = np.asarray(rows, dtype=object if exact else float)
    target = np.asarray(target, dtype=object if exact else float)
    if rows.shape[0] == 0:
        return zeros(0, exact)
    if exact:
        gram = rows @ rows.T
        return solve(gram, rows @ target, True)
    coef, *_ = np.linalg.lstsq(rows.T, target, rcond=rtol)
    return coef
