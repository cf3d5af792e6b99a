"""Named metric Lie algebras from the complex hyperbolic space picture.

All of them come with orthonormal bases:

* the solvable model ``s`` of ``CH^n`` (holomorphic sectional curvature -1),
  basis ``A0, X1, Y1, ..., X_{n-1}, Y_{n-1}, Z0``;
* its codimension-one subalgebras ``s(theta)``, the Lie hypersurfaces, in the
  basis ``T, Y1, X2, Y2, ..., X_{n-1}, Y_{n-1}, Z0`` with
  ``T = cos(theta) A0 - sin(theta) X1``;
* Heisenberg algebras;
* the three-dimensional family ``r_alpha``: ``[A, X] = X, [A, Y] = alpha Y``.

An angle may be a float in radians, which gives float mode, or an explicit
``(cos, sin)`` pair.  A pair of rationals gives exact mode.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _numeric as num
from .algebra import LieAlgebra, MetricLieAlgebra


class ParameterError(ValueError):
    """Catalog parameters outside their allowed range."""


@dataclass(frozen=True)
class SolvableModel:
    metric_algebra: MetricLieAlgebra
    complex_structure: np.ndarray
    n: int


@dataclass(frozen=True)
class HypersurfaceAlgebra:
    metric_algebra: MetricLieAlgebra
    n: int
    cos: object
    sin: object

    @property
    def theta(self) -> float:
        return math.atan2(float(self.sin), float(self.cos))

    @property
    def exact(self) -> bool:
        return self.metric_algebra.exact


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"n must be an integer >= 2, got {n!r}")
    return int(n)


def angle_pair(theta=None, cos=None, sin=None):
    """Normalize an angle in ``[0, pi/2]`` to ``(cos, sin, exact)``."""
    if theta is not None:
        if cos is not None or sin is not None:
            raise ParameterError("give either theta or a (cos, sin) pair, not both")
        theta = float(theta)
        if not 0.0 <= theta <= math.pi / 2:
            raise ParameterError(f"theta must lie in [0, pi/2], got {theta}")
        return math.cos(theta), math.sin(theta), False
    if cos is None or sin is None:
        raise ParameterError("an angle needs theta or both cos and sin")
    raw = [num.parse_scalar(v) if isinstance(v, str) else v for v in (cos, sin)]
    exact = num.infer_exact(raw)
    c, s = (num.coerce(v, exact) for v in raw)
    if c < 0 or s < 0:
        raise ParameterError(f"(cos, sin) = ({c}, {s}) is outside [0, pi/2]")
    defect = c * c + s * s - 1
    if (defect != 0) if exact else abs(defect) > 1e-15:
        raise ParameterError(f"cos^2 + sin^2 != 1 for ({c}, {s})")
    return c, s, exact


def _names_v0(n: int) -> list[str]:
    return [f"{p}{k}" for k in range(2, n) for p in ("X", "Y")]


def build_solvable_model(n: int, exact: bool = True) -> SolvableModel:
    """Solvable model of ``CH^n``: ``[A0, X_i] = X_i/2``, ``[A0, Y_i] = Y_i/2``,
    ``[A0, Z0] = Z0``, ``[X_i, Y_i] = Z0``."""
    n = _check_n(n)
    half = Fraction(1, 2) if exact else 0.5
    one = Fraction(1) if exact else 1.0
    names = ["A0"] + [f"{p}{k}" for k in range(1, n) for p in ("X", "Y")] + ["Z0"]
    brackets = {("A0", "Z0"): {"Z0": one}}
    for k in range(1, n):
        brackets[("A0", f"X{k}")] = {f"X{k}": half}
        brackets[("A0", f"Y{k}")] = {f"Y{k}": half}
        brackets[(f"X{k}", f"Y{k}")] = {"Z0": one}
    algebra = LieAlgebra.from_brackets(names, brackets, exact)
    idx = {nm: i for i, nm in enumerate(names)}
    J = num.zeros((2 * n, 2 * n), exact)
    # J(A0) = Z0, J(Z0) = -A0, J(X_i) = Y_i, J(Y_i) = -X_i
    pairs = [("A0", "Z0")] + [(f"X{k}", f"Y{k}") for k in range(1, n)]
    for u, v in pairs:
        J[idx[v], idx[u]] = one
        J[idx[u], idx[v]] = -one
    return SolvableModel(MetricLieAlgebra(algebra), J, n)


def build_lie_hypersurface(n: int, theta=None, *, cos=None, sin=None) -> HypersurfaceAlgebra:
    """The subalgebra ``s(theta)``, the orthogonal complement of
    ``cos(theta) X1 + sin(theta) A0`` in the solvable model."""
    n = _check_n(n)
    c, s, exact = angle_pair(theta, cos, sin)
    half = Fraction(1, 2) if exact else 0.5
    one = Fraction(1) if exact else 1.0
    names = ["T", "Y1"] + _names_v0(n) + ["Z0"]
    brackets = {
        ("T", "Y1"): {"Y1": half * c, "Z0": -s},
        ("T", "Z0"): {"Z0": c},
    }
    for k in range(2, n):
        brackets[("T", f"X{k}")] = {f"X{k}": half * c}
        brackets[("T", f"Y{k}")] = {f"Y{k}": half * c}
        brackets[(f"X{k}", f"Y{k}")] = {"Z0": one}
    algebra = LieAlgebra.from_brackets(names, brackets, exact)
    return HypersurfaceAlgebra(MetricLieAlgebra(algebra), n, c, s)


def ricci_closed_form(n: int, theta=None, *, cos=None, sin=None) -> np.ndarray:
    """Ricci operator of ``s(theta)`` from the known closed-form expressions.

    Diagonal: ``-(2 + (2n-1) cos^2)/4`` on ``T`` and on ``v0``,
    ``-(2 + (2n-3) cos^2)/4`` on ``Y1``, ``((n-1) - 2n cos^2)/2`` on ``Z0``;
    the only off-diagonal pair is ``(Y1, Z0)`` with ``(n/2) sin cos``.
    """
    n = _check_n(n)
    c, s, exact = angle_pair(theta, cos, sin)
    one = Fraction(1) if exact else 1.0
    dim = 2 * n - 1
    c2 = c * c
    ric = num.zeros((dim, dim), exact)
    generic = -(2 * one + (2 * n - 1) * c2) / 4
    for i in [0] + list(range(2, dim - 1)):
        ric[i, i] = generic
    ric[1, 1] = -(2 * one + (2 * n - 3) * c2) / 4
    ric[dim - 1, dim - 1] = ((n - 1) * one - 2 * n * c2) / 2
    ric[1, dim - 1] = ric[dim - 1, 1] = n * one / 2 * s * c
    return ric


def build_heisenberg(m: int, exact: bool = True) -> MetricLieAlgebra:
    """Heisenberg algebra of odd dimension ``m``: ``[X_k, Y_k] = Z``."""
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 3 or m % 2 == 0:
        raise ParameterError(f"Heisenberg dimension must be odd and >= 3, got {m!r}")
    p = (m - 1) // 2
    one = Fraction(1) if exact else 1.0
    names = [f"{q}{k}" for k in range(1, p + 1) for q in ("X", "Y")] + ["Z"]
    brackets = {(f"X{k}", f"Y{k}"): {"Z": one} for k in range(1, p + 1)}
    return MetricLieAlgebra(LieAlgebra.from_brackets(names, brackets, exact))


def build_r_alpha(alpha, exact: bool | None = None) -> MetricLieAlgebra:
    """``r_alpha = span{A, X, Y}`` with ``[A, X] = X``, ``[A, Y] = alpha Y``.

    The usual range is ``-1 <= alpha <= 1``; values outside it are built
    anyway with a ``UserWarning``.
    """
    if isinstance(alpha, str):
        alpha = num.parse_scalar(alpha)
    if exact is None:
        exact = num.infer_exact([alpha])
    a = num.coerce(alpha, exact)
    if not -1 <= a <= 1:
        warnings.warn(f"alpha = {a} lies outside [-1, 1]", UserWarning, stacklevel=2)
    one = Fraction(1) if exact else 1.0
    brackets = {("A", "X"): {"X": one}, ("A", "Y"): {"Y": a}}
    return MetricLieAlgebra(LieAlgebra.from_brackets(["A", "X", "Y"], brackets, exact))


def build_rotation_algebra(exact: bool = True) -> MetricLieAlgebra:
    """``[A, X] = Y``, ``[A, Y] = -X``: solvable but not completely solvable."""
    one = Fraction(1) if exact else 1.0
    brackets = {("A", "X"): {"Y": one}, ("A", "Y"): {"X": -one}}
    return MetricLieAlgebra(LieAlgebra.from_brackets(["A", "X", "Y"], brackets, exact))


FAMILIES = ("solvable-model", "lie-hypersurface", "heisenberg", "r-alpha")


def pythagorean_pair(theta: float, max_denominator: int = 1000) -> tuple[Fraction, Fraction]:
    """A rational point ``(cos, sin)`` on the unit circle close to angle ``theta``.

    Uses ``t = tan(theta/2)`` rounded to a rational, so the pair satisfies
    ``cos^2 + sin^2 = 1`` exactly; the endpoints 0 and pi/2 map to (1, 0) and (0, 1).
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ParameterError(f"theta must lie in [0, pi/2], got {theta}")
    t = Fraction(math.tan(theta / 2)).limit_denominator(max_denominator)
    if math.isclose(theta, math.pi / 2):
        t = Fraction(1)
    return (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
