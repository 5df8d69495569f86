"""Morse indices and fixed point indices at central configurations.

At a critical point of U restricted to the centered ellipsoid, the second
fundamental form of the ellipsoid turns the ambient second derivative into

    H[v, w] = D2U[v, w] + alpha U <v, w>_m

on the tangent space.  The normalized negative-gradient map
F(q) = -grad U / |grad U| fixes exactly the central configurations, and its
differential there satisfies <DF v, w>_m = -D2U[v, w] / (alpha U), hence
H = alpha U (I - DF).  The Morse index is counted on the complement of the
rotation-orbit directions (which span the kernel at a nondegenerate point),
and the fixed point index is the sign of det(I - DF) on that complement,
computed from a finite-difference DF so the two routes stay independent.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import ConsistencyError, PreconditionError, UndefinedIndexError
from .massgeometry import Configuration, TangentFrame, tangent_frame
from .potential import euclidean_hessian, mass_gradient, potential
from .solver import cc_residual

TOL_ZERO = 1e-7  # kernel threshold, relative to the largest |eigenvalue|
CRITICAL_TOL = 1e-8  # residual bound for "is a central configuration"
DF_STEP = 1e-6
DF_CONSISTENCY_TOL = 1e-4


def map_F(q: Configuration) -> Configuration:
    """Normalized negative mass-metric gradient; fixes central configurations."""
    sys = q.system
    g = mass_gradient(q)
    norm = np.sqrt(float(np.dot(sys.weights * g, g)))
    return Configuration(sys, (-g / norm).reshape(sys.n, sys.d))


def _map_F_raw(points: np.ndarray, sys) -> np.ndarray:
    g = _kernels.mass_gradient(points, sys.masses, sys.alpha)
    gf = g.reshape(-1)
    return -g / np.sqrt(float(np.dot(sys.weights * gf, gf)))


def _require_critical(q: Configuration) -> float:
    _, res = cc_residual(q)
    if res > CRITICAL_TOL:
        raise PreconditionError(
            f"not a central configuration: residual {res:.2e} > {CRITICAL_TOL}"
        )
    return res


def restricted_hessian(q: Configuration, frame: TangentFrame) -> np.ndarray:
    """Matrix of the constrained Hessian H[v,w] = D2U[v,w] + alpha U <v,w>_m."""
    _require_critical(q)
    sys = q.system
    basis = frame.basis
    if basis.shape[0] == 0:
        return np.zeros((0, 0))
    h = basis @ euclidean_hessian(q) @ basis.T
    h += sys.alpha * potential(q) * np.eye(basis.shape[0])
    return 0.5 * (h + h.T)


@dataclass(frozen=True, eq=False)
class DifferentialOfF:
    """The differential of F on a frame, computed two independent ways.

    ``analytic`` comes from the second derivatives of U; ``numeric`` from
    central differences of F along the frame directions.  Entry (a, b) is
    <DF v_a, v_b>_m.
    """

    analytic: np.ndarray
    numeric: np.ndarray
    max_disagreement: float
    step: float


def dF(q: Configuration, frame: TangentFrame, step: float = DF_STEP) -> DifferentialOfF:
    """Differential of F at a central configuration, with self-check.

    Raises ConsistencyError when the two routes disagree beyond 1e-4
    entrywise; agreement within 1e-5 is the expected behavior at a
    well-converged critical point.
    """
    _require_critical(q)
    sys = q.system
    basis = frame.basis
    k = basis.shape[0]
    if k == 0:
        empty = np.zeros((0, 0))
        return DifferentialOfF(empty, empty, 0.0, step)

    alpha_u = sys.alpha * potential(q)
    analytic = -(basis @ euclidean_hessian(q) @ basis.T) / alpha_u

    w = sys.weights
    numeric = np.zeros((k, k))
    for a in range(k):
        v = basis[a].reshape(sys.n, sys.d)
        fp = _map_F_raw(q.points + step * v, sys)
        fm = _map_F_raw(q.points - step * v, sys)
        deriv = (fp - fm).reshape(-1) / (2.0 * step)
        numeric[a] = basis @ (w * deriv)

    disagreement = float(np.max(np.abs(analytic - numeric)))
    if disagreement > DF_CONSISTENCY_TOL:
        raise ConsistencyError(
            f"analytic and finite-difference DF disagree by {disagreement:.2e}"
        )
    return DifferentialOfF(analytic, numeric, disagreement, step)


@dataclass(frozen=True, eq=False)
class SpectralReport:
    """Spectrum of the restricted Hessian and the indices derived from it.

    ``morse_index`` counts negative eigenvalues on the orbit-complement
    block.  A point is nondegenerate when the kernel consists exactly of a
    full-dimensional rotation orbit: kernel_dim == orbit_dim == d(d-1)/2.
    ``fixed_point_index`` is the determinant-sign route (finite-difference
    DF), None at degenerate points.
    """

    eigenvalues: np.ndarray = field(repr=False)
    kernel_dim: int
    morse_index: int
    nondegenerate: bool
    fixed_point_index: int | None
    orbit_dim: int

    @property
    def positive_count(self) -> int:
        scale = float(np.max(np.abs(self.eigenvalues))) if self.eigenvalues.size else 0.0
        return int(np.sum(self.eigenvalues > TOL_ZERO * scale))


def _spectral_parts(q: Configuration, frame: TangentFrame, h: np.ndarray):
    sys = q.system
    if h.shape[0] == 0:
        eigs = np.zeros(0)
        kernel_dim = 0
        mu = 0
    else:
        eigs = np.linalg.eigvalsh(h)
        scale = float(np.max(np.abs(eigs)))
        kernel_dim = int(np.sum(np.abs(eigs) <= TOL_ZERO * scale))
        hc = h[frame.orbit_dim :, frame.orbit_dim :]
        eigs_c = np.linalg.eigvalsh(hc) if hc.shape[0] else np.zeros(0)
        mu = int(np.sum(eigs_c < -TOL_ZERO * scale))
    max_orbit = sys.d * (sys.d - 1) // 2
    nondeg = kernel_dim == frame.orbit_dim == max_orbit
    return eigs, kernel_dim, mu, nondeg


def _determinant_index(frame: TangentFrame, diff: DifferentialOfF) -> int:
    """Sign of det(I - DF) on the orbit complement, via the numeric DF."""
    k = frame.size
    block = np.eye(k) - diff.numeric
    block = block[frame.orbit_dim :, frame.orbit_dim :]
    if block.shape[0] == 0:
        return 1
    sym = 0.5 * (block + block.T)
    negatives = int(np.sum(np.linalg.eigvalsh(sym) < 0.0))
    return -1 if negatives % 2 else 1


def morse_data(q: Configuration, rng: np.random.Generator | None = None) -> SpectralReport:
    """Full spectral report at a converged central configuration.

    An optional generator randomizes the Gram-Schmidt completion of the
    frame; no integer in the report depends on that choice.
    """
    frame = tangent_frame(q, rng)
    h = restricted_hessian(q, frame)
    eigs, kernel_dim, mu, nondeg = _spectral_parts(q, frame, h)
    fpi = _determinant_index(frame, dF(q, frame)) if nondeg else None
    return SpectralReport(
        eigenvalues=eigs,
        kernel_dim=kernel_dim,
        morse_index=mu,
        nondegenerate=nondeg,
        fixed_point_index=fpi,
        orbit_dim=frame.orbit_dim,
    )


def fixed_point_index(q: Configuration) -> int:
    """Fixed point index at a nondegenerate central configuration."""
    report = morse_data(q)
    if not report.nondegenerate:
        raise UndefinedIndexError(
            "fixed point index undefined at a degenerate critical point "
            f"(kernel_dim={report.kernel_dim}, orbit_dim={report.orbit_dim})"
        )
    assert report.fixed_point_index is not None
    return report.fixed_point_index


@dataclass(frozen=True, eq=False)
class TheoremReport:
    """Cross-check of the index identity and the Hessian/DF correspondence.

    ``passed`` is True/False for nondegenerate critical points, None when
    the point is degenerate (the index identity does not apply), and False
    with an explanatory message when the point is not critical at all.
    """

    critical: bool
    residual: float
    lam: float
    potential: float
    spectral: SpectralReport | None
    corollary_residual: float | None
    corollary_bound: float | None
    index_from_determinant: int | None
    index_from_morse: int | None
    passed: bool | None
    message: str


def verify_theorem(
    q: Configuration, rng: np.random.Generator | None = None
) -> TheoremReport:
    """Verify ind = (-1)^mu and H = alpha U (I - DF) at one configuration.

    Failures are reported, never raised: a non-critical input or a
    degenerate spectrum produces a report saying so.
    """
    sys = q.system
    u = potential(q)
    _, res = cc_residual(q)
    lam = -sys.alpha * u
    if res > CRITICAL_TOL:
        return TheoremReport(
            critical=False,
            residual=res,
            lam=lam,
            potential=u,
            spectral=None,
            corollary_residual=None,
            corollary_bound=None,
            index_from_determinant=None,
            index_from_morse=None,
            passed=False,
            message=f"not a critical point: residual {res:.2e}",
        )

    frame = tangent_frame(q, rng)
    h = restricted_hessian(q, frame)
    eigs, kernel_dim, mu, nondeg = _spectral_parts(q, frame, h)
    diff = dF(q, frame)
    alpha_u = sys.alpha * u
    if frame.size:
        corollary = float(
            np.max(np.abs(h - alpha_u * (np.eye(frame.size) - diff.numeric)))
        )
    else:
        corollary = 0.0
    bound = 1e-6 * alpha_u

    index_det = _determinant_index(frame, diff) if nondeg else None
    index_morse = -1 if mu % 2 else 1
    spectral = SpectralReport(
        eigenvalues=eigs,
        kernel_dim=kernel_dim,
        morse_index=mu,
        nondegenerate=nondeg,
        fixed_point_index=index_det,
        orbit_dim=frame.orbit_dim,
    )
    if not nondeg:
        return TheoremReport(
            critical=True,
            residual=res,
            lam=lam,
            potential=u,
            spectral=spectral,
            corollary_residual=corollary,
            corollary_bound=bound,
            index_from_determinant=None,
            index_from_morse=index_morse,
            passed=None,
            message=(
                "degenerate critical point: "
                f"kernel_dim={kernel_dim}, orbit_dim={frame.orbit_dim}, "
                f"max orbit dim={sys.d * (sys.d - 1) // 2}"
            ),
        )
    passed = (index_det == index_morse) and (corollary <= bound)
    return TheoremReport(
        critical=True,
        residual=res,
        lam=lam,
        potential=u,
        spectral=spectral,
        corollary_residual=corollary,
        corollary_bound=bound,
        index_from_determinant=index_det,
        index_from_morse=index_morse,
        passed=passed,
        message="" if passed else "index identity or corollary residual failed",
    )
