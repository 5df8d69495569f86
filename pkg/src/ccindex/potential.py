"""The homogeneous pair potential, its mass-metric gradient and second derivatives.

U(q) = sum_{i<j} m_i m_j / |q_i - q_j|^alpha, homogeneous of degree -alpha.
The gradient is taken with respect to the mass metric (so the Euler identity
reads <grad U, q>_m = -alpha U); the Hessian is the plain Euclidean matrix of
second partials, assembled from closed-form pair blocks.  A central-difference
harness serves as the independent oracle for both.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import CollisionError
from .massgeometry import Configuration, mass_inner

COLLISION_GUARD = 1e-14


def _checked_points(q: Configuration) -> np.ndarray:
    if q.min_distance() < COLLISION_GUARD:
        raise CollisionError(
            f"bodies closer than the collision guard ({q.min_distance():.2e})"
        )
    return q.points


def potential(q: Configuration) -> float:
    """Value of the potential; strictly positive away from collisions."""
    return _kernels.potential_value(_checked_points(q), q.system.masses, q.system.alpha)


def mass_gradient(q: Configuration) -> np.ndarray:
    """Mass-metric gradient as a flat vector of length n*d."""
    g = _kernels.mass_gradient(_checked_points(q), q.system.masses, q.system.alpha)
    return g.reshape(-1)


def euclidean_hessian(q: Configuration) -> np.ndarray:
    """Symmetric (nd) x (nd) matrix of second partial derivatives of U."""
    return _kernels.euclidean_hessian(_checked_points(q), q.system.masses, q.system.alpha)


@dataclass(frozen=True, eq=False)
class PotentialEvaluation:
    """Value, mass gradient and Euclidean Hessian at one configuration."""

    value: float
    mass_gradient: np.ndarray
    euclidean_hessian: np.ndarray


def evaluate(q: Configuration) -> PotentialEvaluation:
    return PotentialEvaluation(potential(q), mass_gradient(q), euclidean_hessian(q))


@dataclass(frozen=True)
class FiniteDifferenceReport:
    """Max relative deviations of the analytic derivatives from central differences."""

    gradient_deviation: float
    hessian_deviation: float
    gradient_step: float
    hessian_step: float

    @property
    def max_deviation(self) -> float:
        return max(self.gradient_deviation, self.hessian_deviation)


def finite_difference_check(
    q: Configuration, h: float = 1e-5, hessian_h: float = 1e-4
) -> FiniteDifferenceReport:
    """Check gradient and Hessian against central differences of U alone.

    The gradient uses first-order central differences with step ``h``; the
    Hessian uses nested central differences with the coarser step
    ``hessian_h`` to balance truncation against roundoff.
    """
    if not h > 0 or not hessian_h > 0:
        raise ValueError("finite-difference steps must be positive")
    sys = q.system
    x0 = q.flat.copy()

    def u_at(x: np.ndarray) -> float:
        return _kernels.potential_value(
            x.reshape(sys.n, sys.d), sys.masses, sys.alpha
        )

    n = x0.size
    grad_fd = np.zeros(n)
    for a in range(n):
        xp, xm = x0.copy(), x0.copy()
        xp[a] += h
        xm[a] -= h
        grad_fd[a] = (u_at(xp) - u_at(xm)) / (2.0 * h)
    grad_analytic = sys.weights * mass_gradient(q)  # Euclidean gradient
    grad_dev = float(
        np.max(np.abs(grad_fd - grad_analytic)) / np.max(np.abs(grad_analytic))
    )

    hh = hessian_h
    hess_fd = np.zeros((n, n))
    for a in range(n):
        for b in range(a, n):
            xpp, xpm, xmp, xmm = x0.copy(), x0.copy(), x0.copy(), x0.copy()
            xpp[a] += hh
            xpp[b] += hh
            xpm[a] += hh
            xpm[b] -= hh
            xmp[a] -= hh
            xmp[b] += hh
            xmm[a] -= hh
            xmm[b] -= hh
            val = (u_at(xpp) - u_at(xpm) - u_at(xmp) + u_at(xmm)) / (4.0 * hh * hh)
            hess_fd[a, b] = val
            hess_fd[b, a] = val
    hess_analytic = euclidean_hessian(q)
    hess_dev = float(
        np.max(np.abs(hess_fd - hess_analytic)) / np.max(np.abs(hess_analytic))
    )

    return FiniteDifferenceReport(grad_dev, hess_dev, h, hh)


def euler_identity_residuals(q: Configuration) -> tuple[float, float]:
    """Relative residuals of the first and second order Euler identities.

    Degree -alpha homogeneity forces <grad U, q>_m = -alpha U and
    q^T D2U q = alpha (alpha + 1) U.
    """
    sys = q.system
    u = potential(q)
    first = abs(mass_inner(mass_gradient(q), q.flat, sys) + sys.alpha * u) / u
    quad = float(q.flat @ euclidean_hessian(q) @ q.flat)
    second = abs(quad - sys.alpha * (sys.alpha + 1.0) * u) / (
        sys.alpha * (sys.alpha + 1.0) * u
    )
    return first, second
