"""Central configurations as zeros of grad U - lambda q on the centered ellipsoid.

A central configuration satisfies grad U(q) = lambda q (gradient in the mass
metric); on the unit ellipsoid the multiplier is forced to lambda = -alpha U(q).
The solver runs damped Newton on the augmented system

    grad U(q) - lambda q = 0,   <q, q>_m = 1,

with unknowns (q, lambda), re-centering and re-normalizing every iterate, and
a multistart census deduplicates converged solutions into isometry classes
keyed by their pairwise distance vectors and orientation.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import PreconditionError
from .massgeometry import Configuration, MassSystem, RANK_CUTOFF
from .potential import mass_gradient, potential

MIN_START_DISTANCE = 1e-3
MIN_ITER_DISTANCE = 1e-6
DEDUP_RTOL = 1e-6
ARMIJO = 1e-4
BACKTRACK = 0.5


def cc_residual(q: Configuration) -> tuple[np.ndarray, float]:
    """Residual grad U - lambda q with lambda = -alpha U, and its mass norm."""
    sys = q.system
    c = sys.masses @ q.points
    norm_err = abs(float(np.dot(sys.weights * q.flat, q.flat)) - 1.0)
    if np.linalg.norm(c) > 1e-8 or norm_err > 1e-8:
        raise PreconditionError("cc_residual needs a centered, normalized configuration")
    lam = -sys.alpha * potential(q)
    r = mass_gradient(q) - lam * q.flat
    return r, float(np.sqrt(np.dot(sys.weights * r, r)))


@dataclass(frozen=True, eq=False)
class CentralConfigCandidate:
    """Outcome of one Newton solve."""

    q: Configuration
    lam: float
    residual_norm: float
    converged: bool
    iterations: int


def _retract(points: np.ndarray, masses: np.ndarray, w: np.ndarray) -> np.ndarray | None:
    """Center and normalize; None when the configuration degenerates."""
    p = points - masses @ points
    pf = p.reshape(-1)
    nrm = np.sqrt(float(np.dot(w * pf, pf)))
    if nrm < 1e-15:
        return None
    return p / nrm


def _merit(
    points: np.ndarray, lam: float, masses: np.ndarray, alpha: float, w: np.ndarray
) -> float:
    r = _kernels.mass_gradient(points, masses, alpha) - lam * points
    rf = r.reshape(-1)
    return float(np.sqrt(np.dot(w * rf, rf)))


def newton_solve(
    q0: Configuration,
    tol_residual: float = 1e-12,
    max_iter: int = 200,
) -> CentralConfigCandidate:
    """Damped Newton for the central configuration equation.

    Never raises on failure to converge: the candidate comes back with
    ``converged=False`` when the iteration cap is hit, a step cannot be
    damped into a residual decrease, or the trajectory approaches collision.
    """
    sys = q0.system
    w = sys.weights
    c = sys.masses @ q0.points
    if np.linalg.norm(c) > 1e-8:
        raise PreconditionError("initial configuration must be centered")
    if abs(float(np.dot(w * q0.flat, q0.flat)) - 1.0) > 1e-8:
        raise PreconditionError("initial configuration must be normalized")
    if q0.min_distance() < MIN_START_DISTANCE:
        raise PreconditionError(
            f"initial min distance below {MIN_START_DISTANCE}"
        )

    nd = sys.dof
    masses, alpha = sys.masses, sys.alpha
    x = np.array(q0.points)
    lam = -alpha * _kernels.potential_value(x, masses, alpha)
    res = _merit(x, lam, masses, alpha, w)

    iterations = 0
    failed = False
    while res > tol_residual and iterations < max_iter:
        iterations += 1
        hess = _kernels.euclidean_hessian(x, masses, alpha)
        jac = np.zeros((nd + 1, nd + 1))
        jac[:nd, :nd] = hess / w[:, None]
        jac[np.arange(nd), np.arange(nd)] -= lam
        jac[:nd, nd] = -x.reshape(-1)
        jac[nd, :nd] = w * x.reshape(-1)
        g = _kernels.mass_gradient(x, masses, alpha)
        rhs = np.zeros(nd + 1)
        rhs[:nd] = -(g - lam * x).reshape(-1)

        delta = None
        if sys.d == 1:
            # no rotation kernel in dimension one; the square solve is exact
            try:
                cand = np.linalg.solve(jac, rhs)
                if np.all(np.isfinite(cand)):
                    delta = cand
            except np.linalg.LinAlgError:
                delta = None
        if delta is None:
            delta = np.linalg.lstsq(jac, rhs, rcond=1e-10)[0]
        if not np.all(np.isfinite(delta)):
            failed = True
            break
        dx = delta[:nd].reshape(sys.n, sys.d)
        dlam = delta[nd]
        # clamp runaway directions: points live on the unit ellipsoid, so a
        # step of mass norm beyond 2 only wastes line-search evaluations
        dxf = dx.reshape(-1)
        dx_norm = np.sqrt(float(np.dot(w * dxf, dxf)))
        if dx_norm > 2.0:
            scale = 2.0 / dx_norm
            dx = dx * scale
            dlam = dlam * scale

        step = 1.0
        accepted = False
        while step > 1e-10:
            trial = _retract(x + step * dx, masses, w)
            if trial is not None and _kernels.min_pair_distance(trial) >= MIN_ITER_DISTANCE:
                lam_t = lam + step * dlam
                res_t = _merit(trial, lam_t, masses, alpha, w)
                if res_t <= (1.0 - ARMIJO * step) * res:
                    x, lam, res = trial, lam_t, res_t
                    accepted = True
                    break
            step *= BACKTRACK
        if not accepted:
            failed = True
            break

    converged = (not failed) and res <= tol_residual
    return CentralConfigCandidate(
        q=Configuration(sys, x),
        lam=float(lam),
        residual_norm=res,
        converged=converged,
        iterations=iterations,
    )


def pair_order(n: int) -> list[tuple[int, int]]:
    """Fixed enumeration of unordered pairs: (0,1), (0,2), ..., (n-2,n-1)."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@dataclass(frozen=True)
class IsometryClassKey:
    """Pairwise distances in fixed pair order plus an orientation sign.

    Labeled configurations are congruent iff the distance vectors agree;
    the chirality sign separates mirror images when the points span all of
    R^d (and is 0 otherwise, or always under the full orthogonal group).
    """

    distance_vector: tuple[float, ...]
    chirality: int

    def sort_key(self):
        return (self.distance_vector, self.chirality)


def _chirality(points: np.ndarray) -> int:
    """Orientation sign of deterministically pivoted difference vectors."""
    n, d = points.shape
    accepted: list[np.ndarray] = []
    for i, j in pair_order(n):
        if len(accepted) == d:
            break
        v = points[j] - points[i]
        trial = np.vstack(accepted + [v])
        s = np.linalg.svd(trial, compute_uv=False)
        if s[0] > 0 and s[-1] > RANK_CUTOFF * s[0]:
            accepted.append(v)
    if len(accepted) < d:
        return 0
    det = np.linalg.det(np.vstack(accepted))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def classify(q: Configuration, group: str = "SO") -> IsometryClassKey:
    """Isometry class key of a centered, normalized configuration."""
    if group not in ("SO", "O"):
        raise ValueError(f"group must be 'SO' or 'O', got {group!r}")
    pts = q.points
    dv = tuple(
        float(np.linalg.norm(pts[i] - pts[j])) for i, j in pair_order(q.system.n)
    )
    chi = 0 if group == "O" else _chirality(pts)
    return IsometryClassKey(distance_vector=dv, chirality=chi)


def keys_match(a: IsometryClassKey, b: IsometryClassKey, rtol: float = DEDUP_RTOL) -> bool:
    if a.chirality != b.chirality or len(a.distance_vector) != len(b.distance_vector):
        return False
    da = np.array(a.distance_vector)
    db = np.array(b.distance_vector)
    scale = max(da.max(), db.max())
    return bool(np.max(np.abs(da - db)) <= rtol * scale)


@dataclass(eq=False)
class CensusClass:
    """One isometry class of converged central configurations."""

    key: IsometryClassKey
    representative: CentralConfigCandidate
    potential: float
    hits: int = 1
    start_indices: list[int] = field(default_factory=list)


def sample_start(system: MassSystem, rng: np.random.Generator) -> Configuration | None:
    """Centered normalized standard-normal start, rejecting near-collisions."""
    for _ in range(200):
        x = _retract(
            rng.standard_normal((system.n, system.d)), system.masses, system.weights
        )
        if x is not None and _kernels.min_pair_distance(x) >= MIN_START_DISTANCE:
            return Configuration(system, x)
    return None


def _resolve_threads(threads: int | None) -> int:
    # Default is serial: the per-start solves are dominated by small numpy
    # operations that hold the GIL, so thread pools slow them down.
    # CC_INDEX_THREADS (or the keyword) opts in and caps the pool size.
    if threads is None:
        env = os.environ.get("CC_INDEX_THREADS", "").strip()
        threads = int(env) if env else 1
    return max(1, threads)


def census(
    system: MassSystem,
    group: str = "SO",
    n_starts: int = 1000,
    rng_seed: int = 42,
    tol_residual: float = 1e-12,
    max_iter: int = 200,
    threads: int | None = None,
) -> list[CensusClass]:
    """Multistart Newton census of central configuration classes.

    Deterministic for a fixed seed: start k draws from the substream
    SeedSequence(rng_seed, spawn_key=(k,)), and results are merged in start
    order regardless of how solves were scheduled.  Output is sorted by
    potential value, then lexicographically by class key.
    """
    if n_starts < 1:
        raise ValueError("n_starts must be >= 1")
    if group not in ("SO", "O"):
        raise ValueError(f"group must be 'SO' or 'O', got {group!r}")

    def run(k: int) -> CentralConfigCandidate | None:
        rng = np.random.default_rng(np.random.SeedSequence(rng_seed, spawn_key=(k,)))
        q0 = sample_start(system, rng)
        if q0 is None:
            return None
        return newton_solve(q0, tol_residual=tol_residual, max_iter=max_iter)

    nthreads = _resolve_threads(threads)
    if nthreads > 1:
        # contiguous blocks per worker; results are keyed by start index, so
        # the merge below is independent of scheduling
        results: list[CentralConfigCandidate | None] = [None] * n_starts

        def run_block(block: range) -> None:
            for k in block:
                results[k] = run(k)

        bounds = np.linspace(0, n_starts, nthreads + 1).astype(int)
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            list(pool.map(run_block, [range(a, b) for a, b in zip(bounds, bounds[1:])]))
    else:
        results = [run(k) for k in range(n_starts)]

    classes: list[CensusClass] = []
    for k, cand in enumerate(results):
        if cand is None or not cand.converged:
            continue
        key = classify(cand.q, group)
        for cls in classes:
            if keys_match(cls.key, key):
                cls.hits += 1
                cls.start_indices.append(k)
                break
        else:
            classes.append(
                CensusClass(
                    key=key,
                    representative=cand,
                    potential=potential(cand.q),
                    start_indices=[k],
                )
            )
    classes.sort(key=lambda c: (c.potential,) + c.key.sort_key())
    return classes
