from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EXACT_CATALOG, FLOAT_CATALOG, catalog_params
from metriclie import (
    LieAlgebra,
    MetricError,
    MetricLieAlgebra,
    MixedModeError,
    StructuralError,
    bracket,
    build_lie_hypersurface,
    build_solvable_model,
    orthonormalize,
    validate,
)
from metriclie.algebra import gram_is_pd


def test_validate_hypersurface_float():
    m = build_lie_hypersurface(3, 0.3).metric_algebra
    report = validate(m)
    assert report.jacobi_max_residual == 0
    assert report.gram_pd


def test_validate_abelian():
    report = validate(MetricLieAlgebra(LieAlgebra.abelian(4)))
    assert report.jacobi_max_residual == 0 and report.ok


def test_validate_detects_broken_jacobi():
    # solvable model with [A0, Z0] = 2 Z0 instead of Z0
    good = build_solvable_model(3).metric_algebra.algebra
    table = {k: dict(v) for k, v in good.structure.items()}
    a0, z0 = good.basis_names.index("A0"), good.basis_names.index("Z0")
    table[(a0, z0)] = {z0: Fraction(2)}
    bad = MetricLieAlgebra(LieAlgebra(good.basis_names, table, True))
    report = validate(bad)
    assert not report.ok
    triples = {t: vec for t, vec in report.failures}
    idx = [good.basis_names.index(n) for n in ("A0", "X2", "Y2")]
    vec = triples[tuple(idx)]
    expected = [Fraction(0)] * good.dim
    expected[z0] = Fraction(-1)
    assert list(vec) == expected


@pytest.mark.parametrize("m", catalog_params(EXACT_CATALOG))
def test_catalog_exact_jacobi_is_zero(m):
    assert validate(m).jacobi_max_residual == 0


@pytest.mark.parametrize("m", catalog_params(FLOAT_CATALOG))
def test_catalog_float_jacobi_small(m):
    assert validate(m).jacobi_max_residual <= 1e-13


def test_malformed_indices_are_named():
    with pytest.raises(StructuralError, match="out of range"):
        LieAlgebra.from_brackets(["a", "b"], {(0, 5): {0: 1}})
    with pytest.raises(StructuralError, match="itself"):
        LieAlgebra.from_brackets(["a", "b"], {(1, 1): {0: 1}})
    with pytest.raises(StructuralError, match="unknown basis name"):
        LieAlgebra.from_brackets(["a", "b"], {("a", "c"): {"a": 1}})
    with pytest.raises(StructuralError):
        LieAlgebra(("a", "b"), {(1, 0): {0: Fraction(1)}}, True)


def test_zero_dimension_rejected():
    with pytest.raises(StructuralError):
        LieAlgebra.from_brackets([], {})


def test_mixed_mode_rejected():
    with pytest.raises(MixedModeError):
        LieAlgebra.from_brackets(["a", "b", "c"], {(0, 1): {2: Fraction(1, 2)}, (0, 2): {2: 0.5}})
    a = LieAlgebra.abelian(2)
    with pytest.raises(MixedModeError):
        MetricLieAlgebra(a, [[1.5, 0], [0, 1]])


def test_reversed_pair_is_negated():
    a = LieAlgebra.from_brackets(["x", "y", "z"], {("y", "x"): {"z": 1}})
    assert a.structure == {(0, 1): {2: Fraction(-1)}}


def test_bracket_examples():
    h = build_lie_hypersurface(3, 0.7).metric_algebra
    e = {n: h.algebra.unit(n) for n in h.basis_names}
    np.testing.assert_allclose(bracket(h, e["T"], e["Z0"]), np.cos(0.7) * e["Z0"])
    np.testing.assert_allclose(bracket(h, e["X2"], e["Y2"]), e["Z0"])


def test_bracket_length_mismatch():
    h = build_lie_hypersurface(2, 0.7).metric_algebra
    with pytest.raises(StructuralError):
        bracket(h, [1, 0], [0, 1, 0])


vectors5 = st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=20), min_size=5, max_size=5)


@given(vectors5, vectors5, vectors5)
@settings(max_examples=50, deadline=None)
def test_bracket_antisymmetric_bilinear_exact(x, y, z):
    m = build_lie_hypersurface(3, cos=Fraction(3, 5), sin=Fraction(4, 5)).metric_algebra
    assert np.all(bracket(m, x, y) == -bracket(m, y, x))
    assert np.all(bracket(m, x, x) == 0)
    xz = [a + b for a, b in zip(x, z)]
    assert np.all(bracket(m, xz, y) == bracket(m, x, y) + bracket(m, z, y))


@given(st.lists(st.floats(-10, 10), min_size=7, max_size=7), st.lists(st.floats(-10, 10), min_size=7, max_size=7))
@settings(max_examples=50, deadline=None)
def test_bracket_antisymmetric_float(x, y):
    m = build_lie_hypersurface(4, 0.4).metric_algebra
    np.testing.assert_allclose(bracket(m, x, y), -bracket(m, y, x), atol=1e-12)


def test_orthonormalize_identity_gram():
    m = build_lie_hypersurface(2, 0.3).metric_algebra
    out, B = orthonormalize(m)
    assert out is m
    assert np.array_equal(B, np.eye(3))


def test_orthonormalize_scaling_dim1():
    m = MetricLieAlgebra(LieAlgebra.abelian(1), [[4]])
    out, B = orthonormalize(m)
    assert B[0, 0] == Fraction(1, 2)
    assert out.is_orthonormal
    mf = MetricLieAlgebra(LieAlgebra.abelian(1, exact=False), [[4.0]])
    assert orthonormalize(mf)[1][0, 0] == pytest.approx(0.5)


@pytest.mark.parametrize("exact", [True, False])
def test_orthonormalize_dim2(exact):
    gram = [[2, 1], [1, 1]]
    m = MetricLieAlgebra(LieAlgebra.abelian(2, exact=exact), gram)
    out, B = orthonormalize(m)
    assert B[1, 0] == 0  # upper triangular
    G = np.asarray(gram, dtype=object if exact else float)
    if exact:
        # 1/sqrt(2) is irrational: orthogonal basis with the squared norms kept
        assert np.all(B.T @ G @ B == out.gram)
        assert out.is_orthogonal
    else:
        np.testing.assert_allclose(B.T @ G @ B, np.eye(2), atol=1e-14)


def test_orthonormalize_transforms_brackets():
    m = MetricLieAlgebra(build_lie_hypersurface(2, 0.4).metric_algebra.algebra, [[2.0, 0.3, 0], [0.3, 1.0, 0.1], [0, 0.1, 3.0]])
    out, B = orthonormalize(m)
    C = m.algebra.structure_tensor
    for a in range(3):
        for b in range(3):
            lhs = B @ out.algebra.structure_tensor[a, b]
            rhs = np.einsum("i,j,ijk->k", B[:, a], B[:, b], C)
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_orthonormalize_idempotent():
    m = MetricLieAlgebra(LieAlgebra.abelian(2), [[4, 0], [0, 9]])
    once, _ = orthonormalize(m)
    twice, B2 = orthonormalize(once)
    assert np.all(B2 == np.eye(2, dtype=int))


def test_orthonormalize_rejects_indefinite():
    with pytest.raises(MetricError):
        orthonormalize(MetricLieAlgebra(LieAlgebra.abelian(2), [[1, 2], [2, 1]]))
    with pytest.raises(MetricError):
        MetricLieAlgebra(LieAlgebra.abelian(2), [[1, 2], [0, 1]])


small_ints = st.integers(-1000, 1000)


@given(st.lists(small_ints, min_size=6, max_size=6), st.lists(st.integers(1, 50), min_size=6, max_size=6))
@settings(max_examples=200, deadline=None)
def test_pd_verdict_agrees_between_modes(nums, dens):
    vals = [Fraction(a, b) for a, b in zip(nums, dens)]
    G = [[vals[0], vals[1], vals[2]], [vals[1], vals[3], vals[4]], [vals[2], vals[4], vals[5]]]
    exact = gram_is_pd(np.array(G, dtype=object), True)
    fl = gram_is_pd(np.array(G, dtype=float), False)
    evals = np.linalg.eigvalsh(np.array(G, dtype=float))
    if np.min(np.abs(evals)) > 1e-9 * max(1.0, np.max(np.abs(evals))):
        assert exact == fl
