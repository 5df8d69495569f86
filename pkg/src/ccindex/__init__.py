"""Central configurations of the n-body problem under the mass metric.

Find central configurations by multistart Newton on the centered inertia
ellipsoid, compute Morse indices of the restricted potential on the rotation
quotient and fixed point indices of the normalized-gradient map, verify the
identity between the two, and evaluate the closed-form topology of the
configuration-space quotients.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import (
    CollisionError,
    ConsistencyError,
    DegenerateInputError,
    PreconditionError,
    SpecFileError,
    UndefinedIndexError,
)
from .indices import (
    DifferentialOfF,
    SpectralReport,
    TheoremReport,
    dF,
    fixed_point_index,
    map_F,
    morse_data,
    restricted_hessian,
    verify_theorem,
)
from .massgeometry import (
    Configuration,
    MassSystem,
    TangentFrame,
    center_of_mass,
    mass_inner,
    mass_norm,
    normalize_to_ellipsoid,
    project_center,
    rotation_orbit_dimension,
    tangent_frame,
)
from .potential import (
    FiniteDifferenceReport,
    PotentialEvaluation,
    euclidean_hessian,
    evaluate,
    finite_difference_check,
    mass_gradient,
    potential,
)
from .solver import (
    CensusClass,
    CentralConfigCandidate,
    IsometryClassKey,
    cc_residual,
    census,
    classify,
    newton_solve,
)
from .topology import (
    IntPolynomial,
    MorseInequalityReport,
    dim_maximal_orbit_manifold,
    lefschetz_and_degree,
    mccord_M_dimensions,
    morse_inequality_report,
    pacella_series,
    poincare_configuration,
    poincare_planar_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # errors
    "CollisionError",
    "ConsistencyError",
    "DegenerateInputError",
    "PreconditionError",
    "SpecFileError",
    "UndefinedIndexError",
    # mass geometry
    "MassSystem",
    "Configuration",
    "TangentFrame",
    "mass_inner",
    "mass_norm",
    "center_of_mass",
    "project_center",
    "normalize_to_ellipsoid",
    "tangent_frame",
    "rotation_orbit_dimension",
    # potential
    "PotentialEvaluation",
    "FiniteDifferenceReport",
    "potential",
    "mass_gradient",
    "euclidean_hessian",
    "evaluate",
    "finite_difference_check",
    # solver
    "CentralConfigCandidate",
    "IsometryClassKey",
    "CensusClass",
    "cc_residual",
    "newton_solve",
    "classify",
    "census",
    # indices
    "SpectralReport",
    "DifferentialOfF",
    "TheoremReport",
    "map_F",
    "dF",
    "restricted_hessian",
    "morse_data",
    "fixed_point_index",
    "verify_theorem",
    # topology
    "IntPolynomial",
    "MorseInequalityReport",
    "poincare_configuration",
    "poincare_planar_quotient",
    "mccord_M_dimensions",
    "pacella_series",
    "dim_maximal_orbit_manifold",
    "lefschetz_and_degree",
    "morse_inequality_report",
]
