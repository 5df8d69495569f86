"""Shared construction helpers for the test suite."""

import numpy as np

import ccindex as cc


def make_system(n, d, alpha=1.0, masses=None):
    if masses is None:
        masses = np.full(n, 1.0 / n)
    return cc.MassSystem(n=n, d=d, alpha=alpha, masses=np.asarray(masses, dtype=float))


def two_body(alpha=1.0):
    """Equal masses at -1 and 1 on the line: exact central configuration."""
    sysm = make_system(2, 1, alpha)
    return cc.Configuration(sysm, np.array([[-1.0], [1.0]]))


def lagrange_config(d=2, alpha=1.0, masses=None, scale=1.0):
    """Equilateral triangle, centered and normalized: central for any masses."""
    sysm = make_system(3, d, alpha, masses)
    ang = np.array([0.5, 0.5 + 2 / 3, 0.5 + 4 / 3]) * np.pi
    pts = np.zeros((3, d))
    pts[:, 0] = scale * np.cos(ang)
    pts[:, 1] = scale * np.sin(ang)
    q = cc.Configuration(sysm, pts)
    return cc.normalize_to_ellipsoid(cc.project_center(q))


def euler_symmetric_config(d=1, alpha=1.0):
    """Equal masses at (-a, 0, a) on the first axis with a = sqrt(3/2):
    exact symmetric collinear central configuration, any alpha."""
    sysm = make_system(3, d, alpha)
    a = np.sqrt(1.5)
    pts = np.zeros((3, d))
    pts[:, 0] = [-a, 0.0, a]
    return cc.Configuration(sysm, pts)


def random_config(system, rng, min_dist=0.2):
    """Centered, normalized configuration with a collision margin."""
    for _ in range(500):
        pts = rng.standard_normal((system.n, system.d))
        q = cc.normalize_to_ellipsoid(
            cc.project_center(cc.Configuration(system, pts))
        )
        if q.min_distance() >= min_dist:
            return q
    raise RuntimeError("failed to sample a well-separated configuration")


def random_orthogonal(d, rng):
    """Haar-ish random element of O(d)."""
    m = rng.standard_normal((d, d))
    q, r = np.linalg.qr(m)
    return q * np.sign(np.diag(r))


def random_rotation(d, rng):
    g = random_orthogonal(d, rng)
    if np.linalg.det(g) < 0:
        g[:, 0] = -g[:, 0]
    return g


def apply_isometry(q, g, t=None):
    pts = q.points @ g.T
    if t is not None:
        pts = pts + t
    return cc.Configuration(q.system, pts)


def affine_span(points, tol=1e-8):
    """Dimension of the affine hull of the points."""
    centered = points - points.mean(axis=0)
    s = np.linalg.svd(centered, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))
