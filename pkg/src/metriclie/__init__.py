"""Curvature, derivations and algebraic Ricci solitons of metric Lie algebras."""

__version__ = "0.1.0"

from ._numeric import MixedModeError
from .algebra import (
    LieAlgebra,
    MetricError,
    MetricLieAlgebra,
    StructuralError,
    ValidationError,
    ValidationReport,
    bracket,
    orthonormalize,
    validate,
)
from .catalog import (
    HypersurfaceAlgebra,
    ParameterError,
    SolvableModel,
    build_heisenberg,
    build_lie_hypersurface,
    build_r_alpha,
    build_rotation_algebra,
    build_solvable_model,
    ricci_closed_form,
)
from .curvature import (
    ConnectionCoefficients,
    CurvatureReport,
    connection,
    curvature_report,
    ricci_operator,
    riemann_tensor,
    scalar_curvature,
)
from .derivations import DerivationSpace, derivation_basis, leibniz_residual
from .soliton import SolitonResult, Status, soliton_solve, verify_certificate
from .structure import (
    CompleteSolvability,
    StructureReport,
    analyze_structure,
    derived_series,
    eigen_sample_check,
    triangularity_witness,
)
