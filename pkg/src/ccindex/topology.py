"""Closed-form topological invariants of configuration spaces and their quotients.

Everything here is exact integer arithmetic: Poincare polynomials of the
configuration space of n points in R^d and of the planar rotation quotient,
cohomology dimensions of the maximal orbit type manifold, the equivariant
Poincare series for d=3, the dimension formula for the maximal orbit type
manifold, Lefschetz sums with the induced degree in the two closed cases
(circle and complex projective line), and Morse inequality bookkeeping.
"""

from dataclasses import dataclass
from typing import Optional, Sequence


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial stored as coefficients by degree, trailing zeros trimmed."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(_poly_mul(self.coefficients, other.coefficients))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> int:
        return self.coefficients[j] if 0 <= j < len(self.coefficients) else 0


def poincare_configuration(n: int, d: int) -> IntPolynomial:
    """Poincare polynomial of the configuration space of n points in R^d:
    product over k = 1..n-1 of (1 + k t^(d-1))."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if d < 2:
        raise ValueError("the product formula requires d >= 2")
    poly = [1]
    for k in range(1, n):
        factor = [1] + [0] * (d - 2) + [k]
        poly = _poly_mul(poly, factor)
    return IntPolynomial(tuple(poly))


def poincare_planar_quotient(n: int) -> IntPolynomial:
    """Betti numbers of the planar centered ellipsoid modulo rotations:
    product over k = 2..n-1 of (1 + k t)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    poly = [1]
    for k in range(2, n):
        poly = _poly_mul(poly, [1, k])
    return IntPolynomial(tuple(poly))


def mccord_M_dimensions(n: int) -> list[int]:
    """Cohomology dimensions of the planar maximal orbit type manifold.

    dim H^k is the partial sum of the quotient Betti numbers for k <= n-3
    and zero above; the returned list covers k = 0..n-3.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    betti = poincare_planar_quotient(n).coefficients
    out = []
    acc = 0
    for k in range(n - 2):
        acc += betti[k] if k < len(betti) else 0
        out.append(acc)
    return out


def pacella_series(n: int, max_degree: int) -> IntPolynomial:
    """Truncated equivariant Poincare series for d = 3:
    product over k = 2..n-1 of (1 + k t^2), divided by (1 - t^2)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    num = [1]
    for k in range(2, n):
        num = _poly_mul(num, [1, 0, k])
    coeffs = []
    for j in range(max_degree + 1):
        total = 0
        i = j
        while i >= 0:
            if i < len(num):
                total += num[i]
            i -= 2
        coeffs.append(total)
    return IntPolynomial(tuple(coeffs))


def dim_maximal_orbit_manifold(n: int, d: int) -> int:
    """d(n-1) - 1 - d(d-1)/2; may be negative for tiny n, d."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return d * (n - 1) - 1 - d * (d - 1) // 2


def lefschetz_and_degree(
    indices: Sequence[int], case: str = "none"
) -> tuple[int, Optional[int]]:
    """Sum of fixed point indices; induced degree in the two closed cases.

    On the circle L = 1 - deg; on the complex projective line L = 1 + deg.
    No degree is inferred otherwise.
    """
    if case not in ("circle", "complex_projective_line", "none"):
        raise ValueError(f"unknown case {case!r}")
    for ind in indices:
        if ind not in (-1, 1):
            raise ValueError(f"fixed point indices must be +-1, got {ind}")
    lefschetz = int(sum(indices))
    if case == "circle":
        return lefschetz, 1 - lefschetz
    if case == "complex_projective_line":
        return lefschetz, lefschetz - 1
    return lefschetz, None


@dataclass(frozen=True)
class MorseInequalityReport:
    """Counts of critical points by Morse index against Betti numbers."""

    counts: tuple[int, ...]
    betti: tuple[int, ...]
    inequalities_hold: bool
    euler_match: bool
    perfect: bool


def morse_inequality_report(
    morse_indices: Sequence[int], betti: IntPolynomial
) -> MorseInequalityReport:
    """Check c_j >= beta_j and the alternating-sum (Euler) identity.

    Advisory only: the census feeding the counts is heuristic, so a failed
    inequality means the census is incomplete, not that the formula is wrong.
    """
    b = betti.coefficients
    top = max([len(b) - 1] + [j for j in morse_indices] + [0])
    counts = [0] * (top + 1)
    for j in morse_indices:
        if j < 0:
            raise ValueError("Morse indices must be nonnegative")
        counts[j] += 1
    betti_padded = [betti.coefficient(j) for j in range(top + 1)]
    holds = all(c >= beta for c, beta in zip(counts, betti_padded))
    euler_counts = sum((-1) ** j * c for j, c in enumerate(counts))
    euler_betti = sum((-1) ** j * beta for j, beta in enumerate(b))
    return MorseInequalityReport(
        counts=_trim(counts),
        betti=b,
        inequalities_hold=holds,
        euler_match=euler_counts == euler_betti,
        perfect=_trim(counts) == b,
    )
