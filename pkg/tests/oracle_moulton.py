"""Independent oracle for collinear central configurations.

For each left-to-right ordering of the bodies on a line there is exactly one
collinear central configuration up to translation, scaling and reflection.
It is the unique interior critical point of the translation- and
scale-invariant function

    G(x) = U(x) * I(x)^(alpha/2),   I(x) = sum_k m_k (x_k - c)^2,

on the open cell of that ordering with the two outer bodies pinned at 0 and 1
as a gauge.  The oracle locates it by cyclic per-coordinate bisection on
dG/dx_i = 0 (the partial tends to -inf at the left neighbor and +inf at the
right one, so a sign change is guaranteed).  This is deliberately a different
algorithm from the package's damped Newton; tests use it to cross-check
census results.  Pure numpy on purpose: it imports nothing from ccindex.
"""

import itertools

import numpy as np


def _potential_1d(x, masses, alpha):
    u = 0.0
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            u += masses[i] * masses[j] * abs(x[i] - x[j]) ** (-alpha)
    return u


def _g_partial(x, masses, alpha, i):
    """dG/dx_i for G = U * I^(alpha/2)."""
    n = len(x)
    c = float(masses @ x)
    inertia = float(masses @ (x - c) ** 2)
    u = _potential_1d(x, masses, alpha)
    du = 0.0
    for j in range(n):
        if j != i:
            diff = x[i] - x[j]
            du += -alpha * masses[i] * masses[j] * diff * abs(diff) ** (-alpha - 2.0)
    return du * inertia ** (alpha / 2.0) + u * alpha * inertia ** (
        alpha / 2.0 - 1.0
    ) * masses[i] * (x[i] - c)


def _bisect_coordinate(x, masses, alpha, body, lo, hi):
    gap = hi - lo
    a = lo + 1e-12 * gap
    b = hi - 1e-12 * gap

    def f(t):
        x[body] = t
        return _g_partial(x, masses, alpha, body)

    fa, fb = f(a), f(b)
    if not (fa < 0 < fb):
        raise RuntimeError("bisection bracket failed; dG must change sign in the gap")
    for _ in range(80):
        mid = 0.5 * (a + b)
        if f(mid) < 0:
            a = mid
        else:
            b = mid
    x[body] = 0.5 * (a + b)
    return x[body]


def solve_ordering(masses, order, alpha=1.0, max_sweeps=400, tol=1e-14):
    """Positions of the unique collinear central configuration with the given
    ordering, centered and normalized to unit mass norm."""
    masses = np.asarray(masses, dtype=float)
    masses = masses / masses.sum()
    n = len(masses)
    x = np.empty(n)
    for k, body in enumerate(order):
        x[body] = k / (n - 1)
    for _ in range(max_sweeps):
        moved = 0.0
        for k in range(1, n - 1):
            body = order[k]
            old = x[body]
            new = _bisect_coordinate(x, masses, alpha, body, x[order[k - 1]], x[order[k + 1]])
            moved = max(moved, abs(new - old))
        if moved < tol:
            break
    c = float(masses @ x)
    x = x - c
    x = x / np.sqrt(float(masses @ x**2))
    return x


def residual_norm(x, masses, alpha):
    """Mass norm of grad U - lambda x at the normalized configuration."""
    n = len(x)
    lam = -alpha * _potential_1d(x, masses, alpha)
    r = np.zeros(n)
    for i in range(n):
        acc = 0.0
        for j in range(n):
            if j != i:
                diff = x[i] - x[j]
                acc += -alpha * masses[j] * diff * abs(diff) ** (-alpha - 2.0)
        r[i] = acc - lam * x[i]
    return float(np.sqrt(masses @ r**2))


def distance_vector(x):
    n = len(x)
    return tuple(abs(x[i] - x[j]) for i in range(n) for j in range(i + 1, n))


def all_ordering_classes(n):
    """Orderings modulo reversal: the n!/2 collinear classes."""
    seen = set()
    classes = []
    for perm in itertools.permutations(range(n)):
        if perm in seen:
            continue
        seen.add(perm)
        seen.add(tuple(reversed(perm)))
        classes.append(perm)
    return classes


def moulton_distance_vectors(masses, alpha=1.0):
    """Distance vector of every collinear class, keyed by canonical ordering."""
    out = {}
    for order in all_ordering_classes(len(masses)):
        x = solve_ordering(masses, order, alpha)
        out[order] = distance_vector(x)
    return out
