"""Mass-metric linear algebra on the configuration space of n point masses.

The configuration space is R^(n*d) with the inner product
``<v, w> = sum_j m_j v_j . w_j``.  Everything downstream works on the
centered unit ellipsoid of that metric: configurations with zero center of
mass and unit mass norm.  This module provides the metric itself, centering
and normalization, and mass-orthonormal frames of the tangent space to the
centered ellipsoid, split into rotation-orbit directions and a complement.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import CollisionError, DegenerateInputError, PreconditionError
from ._kernels import min_pair_distance

CENTER_TOL = 1e-10
NORM_TOL = 1e-10
RANK_CUTOFF = 1e-10  # relative singular-value cutoff for numerical rank


@dataclass(frozen=True)
class MassSystem:
    """Problem instance: body count, dimension, homogeneity exponent, masses.

    Masses are rescaled at construction so they sum to one.
    """

    n: int
    d: int
    alpha: float
    masses: np.ndarray

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least two bodies, got n={self.n}")
        if self.d < 1:
            raise ValueError(f"need dimension >= 1, got d={self.d}")
        if not self.alpha > 0:
            raise ValueError(f"homogeneity exponent must be positive, got {self.alpha}")
        m = np.asarray(self.masses, dtype=float).reshape(-1)
        if m.shape[0] != self.n:
            raise ValueError(f"expected {self.n} masses, got {m.shape[0]}")
        if not np.all(m > 0):
            raise ValueError("all masses must be positive")
        m = m / m.sum()
        m.setflags(write=False)
        object.__setattr__(self, "masses", m)
        w = np.repeat(m, self.d)
        w.setflags(write=False)
        object.__setattr__(self, "_weights", w)

    @property
    def dof(self) -> int:
        """Ambient degrees of freedom n*d."""
        return self.n * self.d

    @property
    def weights(self) -> np.ndarray:
        """Per-coordinate metric weights: each mass repeated d times."""
        return self._weights


@dataclass(frozen=True, eq=False)
class Configuration:
    """n labeled points in R^d, collision-free, tied to a MassSystem."""

    system: MassSystem
    points: np.ndarray = field(repr=False)

    def __post_init__(self):
        p = np.ascontiguousarray(self.points, dtype=float).reshape(
            self.system.n, self.system.d
        )
        if not np.all(np.isfinite(p)):
            raise ValueError("configuration has non-finite coordinates")
        if min_pair_distance(p) == 0.0:
            raise CollisionError("two bodies coincide")
        p.setflags(write=False)
        object.__setattr__(self, "points", p)

    @property
    def flat(self) -> np.ndarray:
        return self.points.reshape(-1)

    def min_distance(self) -> float:
        return min_pair_distance(self.points)

    def replace_points(self, points: np.ndarray) -> "Configuration":
        return Configuration(self.system, points)


@dataclass(frozen=True, eq=False)
class TangentFrame:
    """Mass-orthonormal basis of the tangent space to the centered ellipsoid.

    ``basis`` has shape (k, n*d) with k = d(n-1) - 1; the first ``orbit_dim``
    rows span the rotation-orbit directions {xi q : xi antisymmetric}, the
    remaining rows their mass-orthogonal complement.
    """

    point: Configuration
    basis: np.ndarray = field(repr=False)
    orbit_dim: int

    @property
    def size(self) -> int:
        return self.basis.shape[0]

    @property
    def orbit_basis(self) -> np.ndarray:
        return self.basis[: self.orbit_dim]

    @property
    def complement_basis(self) -> np.ndarray:
        return self.basis[self.orbit_dim :]


def mass_inner(v, w, system: MassSystem) -> float:
    """Mass scalar product sum_j m_j v_j . w_j of two ambient vectors."""
    v = np.asarray(v, dtype=float).reshape(-1)
    w = np.asarray(w, dtype=float).reshape(-1)
    if v.shape[0] != system.dof or w.shape[0] != system.dof:
        raise ValueError(
            f"expected vectors of length {system.dof}, got {v.shape[0]} and {w.shape[0]}"
        )
    return float(np.dot(system.weights * v, w))


def mass_norm(v, system: MassSystem) -> float:
    return np.sqrt(mass_inner(v, v, system))


def center_of_mass(q: Configuration) -> np.ndarray:
    """Mass-weighted barycenter, a point of R^d."""
    return q.system.masses @ q.points


def project_center(q: Configuration) -> Configuration:
    """Translate so the center of mass sits at the origin."""
    return q.replace_points(q.points - center_of_mass(q))


def normalize_to_ellipsoid(q: Configuration) -> Configuration:
    """Rescale to unit mass norm."""
    norm = mass_norm(q.flat, q.system)
    if norm < 1e-15:
        raise DegenerateInputError("cannot normalize a zero configuration")
    return q.replace_points(q.points / norm)


def so_generators(d: int) -> list[np.ndarray]:
    """Standard basis of the antisymmetric d x d matrices, in fixed (a, b) order."""
    gens = []
    for a in range(d):
        for b in range(a + 1, d):
            xi = np.zeros((d, d))
            xi[a, b] = -1.0
            xi[b, a] = 1.0
            gens.append(xi)
    return gens


def _require_on_centered_ellipsoid(q: Configuration) -> None:
    c = center_of_mass(q)
    if np.linalg.norm(c) > CENTER_TOL:
        raise PreconditionError(f"configuration not centered: |center| = {np.linalg.norm(c):.2e}")
    r = abs(mass_inner(q.flat, q.flat, q.system) - 1.0)
    if r > NORM_TOL:
        raise PreconditionError(f"configuration not normalized: |<q,q> - 1| = {r:.2e}")


def _orbit_directions(q: Configuration) -> tuple[np.ndarray, int]:
    """Mass-orthonormal basis of span{xi q} and its rank.

    Returns (rows, rank) with rows of shape (rank, n*d).
    """
    sys = q.system
    gens = so_generators(sys.d)
    if not gens:
        return np.zeros((0, sys.dof)), 0
    raw = np.stack([(q.points @ xi.T).reshape(-1) for xi in gens], axis=1)  # (nd, k)
    sqrtw = np.sqrt(sys.weights)
    u, s, _ = np.linalg.svd(sqrtw[:, None] * raw, full_matrices=False)
    rank = int(np.sum(s > RANK_CUTOFF * s[0])) if s[0] > 0 else 0
    rows = (u[:, :rank] / sqrtw[:, None]).T
    return np.ascontiguousarray(rows), rank


def rotation_orbit_dimension(q: Configuration) -> int:
    """Dimension of the rotation orbit through q.

    Equals d(d-1)/2 exactly when the points span an affine subspace of
    dimension >= d-1.
    """
    _require_on_centered_ellipsoid(q)
    return _orbit_directions(q)[1]


def _mgs_project(v: np.ndarray, rows: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Remove the mass-metric components of v along the given orthonormal rows."""
    for u in rows:
        v = v - np.dot(w * u, v) * u
    return v


def tangent_frame(q: Configuration, rng: np.random.Generator | None = None) -> TangentFrame:
    """Mass-orthonormal frame of the tangent space at q, orbit directions first.

    The complement is completed by modified Gram-Schmidt (one
    reorthogonalization pass) against q, the uniform translation directions
    and the orbit directions.  A generator gives a randomized completion;
    by default coordinate vectors are used, making the frame deterministic.
    """
    _require_on_centered_ellipsoid(q)
    sys = q.system
    w = sys.weights
    dim = sys.d * (sys.n - 1) - 1

    translations = np.zeros((sys.d, sys.dof))
    for b in range(sys.d):
        translations[b, b :: sys.d] = 1.0
    orbit, orbit_dim = _orbit_directions(q)

    # q, translations and orbit directions are mutually mass-orthonormal
    # already (q centered, orbit vectors centered and tangent).
    known = np.vstack([q.flat[None, :], translations, orbit])

    rows: list[np.ndarray] = []
    n_candidates = sys.dof if rng is None else 4 * sys.dof
    for k in range(n_candidates):
        if len(rows) == dim - orbit_dim:
            break
        if rng is None:
            v = np.zeros(sys.dof)
            v[k] = 1.0
        else:
            v = rng.standard_normal(sys.dof)
        v = _mgs_project(v, known, w)
        if rows:
            v = _mgs_project(v, np.array(rows), w)
        norm = np.sqrt(np.dot(w * v, v))
        if norm < 1e-6:
            continue
        v = v / norm
        # one reorthogonalization pass
        v = _mgs_project(v, known, w)
        if rows:
            v = _mgs_project(v, np.array(rows), w)
        v = v / np.sqrt(np.dot(w * v, v))
        rows.append(v)
    if len(rows) != dim - orbit_dim:
        raise RuntimeError("failed to complete the tangent frame")

    basis = np.vstack([orbit] + rows) if dim > 0 else np.zeros((0, sys.dof))
    return TangentFrame(point=q, basis=basis, orbit_dim=orbit_dim)
