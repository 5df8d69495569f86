"""Pure numpy implementations of the pairwise interaction kernels.

Same call signatures as the compiled backend; used as the fallback when the
extension is unavailable and as the reference in the kernel benchmark.
All functions expect C-contiguous float64 arrays: ``points`` of shape (n, d)
and ``masses`` of shape (n,).  No collision guards here; callers check.
"""

import numpy as np


def min_pair_distance(points):
    """Smallest Euclidean distance between two distinct bodies."""
    n = points.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    diff = points[iu] - points[ju]
    return float(np.sqrt((diff * diff).sum(axis=1).min()))


def potential_value(points, masses, alpha):
    """Sum of m_i m_j / r_ij**alpha over unordered pairs."""
    n = points.shape[0]
    iu, ju = np.triu_indices(n, k=1)
    diff = points[iu] - points[ju]
    r = np.sqrt((diff * diff).sum(axis=1))
    return float((masses[iu] * masses[ju] * r ** (-alpha)).sum())


def mass_gradient(points, masses, alpha):
    """Gradient of the potential in the mass metric, shape (n, d).

    Component i is -alpha * sum_{j != i} m_j (q_i - q_j) / r_ij**(alpha + 2);
    the per-body mass m_i cancels against the metric, so only m_j appears.
    """
    n = points.shape[0]
    diff = points[:, None, :] - points[None, :, :]
    r2 = (diff * diff).sum(axis=2)
    np.fill_diagonal(r2, 1.0)
    w = r2 ** (-(alpha + 2.0) / 2.0)
    np.fill_diagonal(w, 0.0)
    return -alpha * ((w * masses[None, :])[:, :, None] * diff).sum(axis=1)


def euclidean_hessian(points, masses, alpha):
    """Matrix of second partial derivatives of the potential, shape (nd, nd).

    Pair (i, j) contributes the d x d block
        alpha * m_i * m_j * r**(-alpha-2) * ((alpha+2) uu^T / r^2 - I)
    with u = q_i - q_j, added at (i,i) and (j,j) and subtracted at (i,j), (j,i).
    """
    n, d = points.shape
    eye = np.eye(d)
    out = np.zeros((n * d, n * d))
    for i in range(n):
        for j in range(i + 1, n):
            u = points[i] - points[j]
            r2 = float(u @ u)
            coeff = alpha * masses[i] * masses[j] * r2 ** (-(alpha + 2.0) / 2.0)
            block = coeff * ((alpha + 2.0) * np.outer(u, u) / r2 - eye)
            si, sj = slice(i * d, i * d + d), slice(j * d, j * d + d)
            out[si, si] += block
            out[sj, sj] += block
            out[si, sj] -= block
            out[sj, si] -= block
    return out
