"""The root lattice A_n and the weight lattice A_n* in the k-vector basis.

Vectors are stored as rational coefficient vectors over the n+1 linearly
dependent vectors k_1, ..., k_{n+1} (which sum to zero). Because of that
dependence every vector is canonicalized so its coefficients sum to zero; in
that gauge the Gram form reduces to the ordinary dot product of coefficients.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


def _canonical(coeffs: Sequence) -> tuple[Fraction, ...]:
    cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    # integer arithmetic over a common denominator is much faster than Fraction sums
    d = math.lcm(*(c.denominator for c in cs))
    nums = [c.numerator * (d // c.denominator) for c in cs]
    m = len(nums)
    total = sum(nums)
    return tuple(Fraction(m * x - total, m * d) for x in nums)


@dataclass(frozen=True, eq=True, order=True)
class LatticeVector:
    """A vector ``sum_j coeffs[j] * k_{j+1}`` in the rank-n ambient space.

    ``coeffs`` always holds the zero-sum representative, so equality and
    hashing are well defined.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(coeffs)
        if len(cs) < 2:
            raise ValueError("need at least two k-coefficients (rank n >= 1)")
        object.__setattr__(self, "coeffs", _canonical(cs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, n: int) -> LatticeVector:
        return cls([0] * (n + 1))

    def _check(self, other: LatticeVector) -> None:
        if not isinstance(other, LatticeVector):
            raise TypeError(f"expected LatticeVector, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> LatticeVector:
        return LatticeVector(-a for a in self.coeffs)

    def __mul__(self, s) -> LatticeVector:
        s = Fraction(s)
        return LatticeVector(a * s for a in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, s) -> LatticeVector:
        s = Fraction(s)
        return LatticeVector(a / s for a in self.coeffs)

    def norm2(self) -> Fraction:
        return inner_product(self, self)

    def scaled_integers(self) -> tuple[int, tuple[int, ...]]:
        """Return ``(d, m)`` with ``coeffs == m / d`` and ``d`` the common denominator."""
        d = math.lcm(*(c.denominator for c in self.coeffs))
        return d, tuple(int(c * d) for c in self.coeffs)

    def __repr__(self):
        return "LatticeVector(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def __str__(self):
        return format_k_combination(self)


def canonicalize(v: LatticeVector | Sequence) -> LatticeVector:
    if isinstance(v, LatticeVector):
        return LatticeVector(v.coeffs)
    return LatticeVector(v)


def format_k_combination(v: LatticeVector) -> str:
    """Human-readable ``sum c_j k_j`` using the zero-sum representative."""
    terms = []
    for j, c in enumerate(v.coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}"
        terms.append(("-" if c < 0 else "+", f"{coef}k{j}"))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sgn, t in terms[1:]:
        out += f" {sgn} {t}"
    return out


def format_compact(v: LatticeVector) -> str:
    """Sparsest representative with the common denominator pulled out, e.g. ``(1/5)(-2k4 - 3k5)``.

    Adding a multiple of ``k_1 + ... + k_{n+1} = 0`` does not change the vector,
    so the most frequent coefficient is subtracted from all of them.
    """
    counts: dict[Fraction, int] = {}
    for c in v.coeffs:
        counts[c] = counts.get(c, 0) + 1
    shift = max(sorted(counts), key=lambda c: (counts[c], -abs(c)))
    cs = [c - shift for c in v.coeffs]
    if not any(cs):
        return "0"
    d = math.lcm(*(c.denominator for c in cs))
    g = math.gcd(*(int(c * d) for c in cs))
    ints = [int(c * d) // g for c in cs]
    factor = Fraction(g, d)
    terms = []
    for j, c in enumerate(ints, start=1):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("-" if c < 0 else "+", f"{mag}k{j}"))
    body = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    body += "".join(f" {sg} {t}" for sg, t in terms[1:])
    if factor == 1:
        return body
    if len(terms) == 1 and terms[0][0] == "+":
        return f"({factor}){body}"
    return f"({factor})({body})"


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not (lo <= i <= hi):
        raise IndexError(f"{what} index {i} out of range {lo}..{hi}")


def k_vector(n: int, j: int) -> LatticeVector:
    """The vector k_j of rank n, 1 <= j <= n+1."""
    _check_index(j, 1, n + 1, "k-vector")
    c = [0] * (n + 1)
    c[j - 1] = 1
    return LatticeVector(c)


def subset_vector(n: int, block: Iterable[int]) -> LatticeVector:
    """``sum_{j in block} k_j`` for a set of 1-based indices."""
    c = [0] * (n + 1)
    for j in block:
        _check_index(j, 1, n + 1, "k-vector")
        c[j - 1] += 1
    return LatticeVector(c)


def inner_product(u: LatticeVector, v: LatticeVector) -> Fraction:
    """Euclidean inner product via the Gram matrix ``delta_ij - 1/(n+1)``."""
    u._check(v)
    # zero-sum gauge kills the -1/(n+1) part
    return sum((a * b for a, b in zip(u.coeffs, v.coeffs)), Fraction(0))


def gram_matrix(n: int) -> list[list[Fraction]]:
    """Gram matrix of k_1..k_{n+1}: ``n/(n+1)`` on the diagonal, ``-1/(n+1)`` off it."""
    return [[Fraction(int(i == j)) - Fraction(1, n + 1) for j in range(n + 1)] for i in range(n + 1)]


def simple_root(n: int, i: int) -> LatticeVector:
    """alpha_i = k_i - k_{i+1}."""
    _check_index(i, 1, n, "simple root")
    return k_vector(n, i) - k_vector(n, i + 1)


def fundamental_weight(n: int, i: int) -> LatticeVector:
    """omega_i = k_1 + ... + k_i."""
    _check_index(i, 1, n, "fundamental weight")
    return subset_vector(n, range(1, i + 1))


def weight_lattice_point(n: int, coefficients: Sequence[int]) -> LatticeVector:
    if len(coefficients) != n:
        raise ValueError(f"expected {n} weight coefficients, got {len(coefficients)}")
    # coefficient of k_j is the tail sum n_j + ... + n_n
    tails = list(itertools.accumulate(reversed([int(c) for c in coefficients])))[::-1]
    return LatticeVector(tails + [0])


def root_lattice_point(n: int, coefficients: Sequence[int]) -> LatticeVector:
    if len(coefficients) != n:
        raise ValueError(f"expected {n} root coefficients, got {len(coefficients)}")
    c = [0] * (n + 1)
    for i, m in enumerate(coefficients):
        c[i] += int(m)
        c[i + 1] -= int(m)
    return LatticeVector(c)


def weight_coordinates(v: LatticeVector) -> tuple[Fraction, ...]:
    """Coordinates of ``v`` in the basis omega_1..omega_n (integers iff v in A_n*)."""
    c = v.coeffs
    return tuple(c[i] - c[i + 1] for i in range(v.n))


def root_coordinates(v: LatticeVector) -> tuple[Fraction, ...]:
    """Coordinates of ``v`` in the basis alpha_1..alpha_n (integers iff v in A_n)."""
    return tuple(itertools.accumulate(v.coeffs[:-1]))


def in_weight_lattice(v: LatticeVector) -> bool:
    return all(x.denominator == 1 for x in weight_coordinates(v))


def in_root_lattice(v: LatticeVector) -> bool:
    return all(x.denominator == 1 for x in root_coordinates(v))


@dataclass(frozen=True)
class CartanMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...]


def _rational_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@lru_cache(maxsize=None)
def cartan_matrix(n: int) -> CartanMatrix:
    if n < 1:
        raise ValueError("rank must be positive")
    c = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = Fraction(2)
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = Fraction(-1)
    inv = _rational_inverse(c)
    return CartanMatrix(n, tuple(map(tuple, c)), tuple(map(tuple, inv)))


def weight_gram_min_eigenvalue_bound(n: int) -> Fraction:
    """Rational lower bound on the smallest eigenvalue of the weight Gram matrix C^-1.

    Gershgorin bounds every eigenvalue of C by 4, so every eigenvalue of
    C^-1 is at least 1/4.
    """
    c = cartan_matrix(n).entries
    gersh = max(sum(abs(x) for x in row) for row in c)
    return Fraction(1) / gersh


def enumerate_weight_lattice(n: int, radius, center: LatticeVector | None = None) -> list[LatticeVector]:
    """All q in A_n* with ``(q - center, q - center) <= radius``.

    Sorted by squared distance to the center, then by coefficients. The
    search box in weight coordinates is exact: ``|n_i|^2 <= radius / lambda_min``
    with a rational lower bound on lambda_min.
    """
    radius = Fraction(radius)
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if center is None:
        center = LatticeVector.zero(n)
    elif center.n != n:
        raise ValueError("rank mismatch between center and lattice")
    lam = weight_gram_min_eigenvalue_bound(n)
    base = [math.floor(x) for x in weight_coordinates(center)]
    offset2 = (center - weight_lattice_point(n, base)).norm2()
    # |p - base| <= sqrt(radius) + |center - base|; box half-width from lambda_min
    reach = _ceil_sqrt(radius) + _ceil_sqrt(offset2)
    bound = _ceil_sqrt(reach * reach / lam)

    # exact integer quadratic form: (n+1) * (omega_i, omega_j) = (n+1) min(i,j) - i j
    q = np.array([[(n + 1) * min(i, j) - i * j for j in range(1, n + 1)] for i in range(1, n + 1)],
                 dtype=np.int64)
    cscale = [(x * (n + 1)) for x in weight_coordinates(center)]
    cden = math.lcm(*(x.denominator for x in cscale)) if cscale else 1
    cnum = np.array([int(x * cden) for x in cscale], dtype=np.int64)  # center * (n+1) * cden

    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * n), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1) + np.array(base, dtype=np.int64)
    # d = (n+1)*cden*(p - c) in weight coords; norm2 * (n+1)^2 * cden^2 = d^T (Q/(n+1)) d
    dmax = (bound + 1) * (n + 1) * cden
    if n * n * (n + 1) ** 2 * dmax * dmax >= 2 ** 62:
        # exotic denominators: fall back to Python integers
        pts, q, cnum = pts.astype(object), q.astype(object), cnum.astype(object)
    d = pts * ((n + 1) * cden) - cnum
    qf = ((d @ q) * d).sum(axis=1)
    limit = radius * (n + 1) * (n + 1) * (n + 1) * cden * cden
    keep = qf <= math.floor(limit)
    out = [weight_lattice_point(n, [int(x) for x in row]) for row in pts[keep]]
    out.sort(key=lambda v: ((v - center).norm2(), v.coeffs))
    return out


def _ceil_sqrt(x: Fraction) -> int:
    """An integer >= sqrt(x)."""
    return math.isqrt(math.ceil(x)) + 1


def ambient_coordinates(v: LatticeVector) -> np.ndarray:
    """Orthonormal coordinates of ``v`` in R^n.

    Component pairs are ``sqrt(2/(n+1)) (cos m theta_j, sin m theta_j)`` for
    ``m = 1, 2, ...``; for odd n the last coordinate is ``(-1)^j / sqrt(n+1)``.
    The first pair spans the Coxeter plane.
    """
    return ambient_basis(v.n).T @ np.array([float(c) for c in v.coeffs])


@lru_cache(maxsize=None)
def ambient_basis(n: int) -> np.ndarray:
    """Row j holds the orthonormal coordinates of k_{j+1}; shape ``(n+1, n)``."""
    m = n + 1
    j = np.arange(1, m + 1)
    cols = []
    scale = math.sqrt(2.0 / m)
    for harmonic in range(1, n // 2 + 1):
        theta = 2.0 * math.pi * harmonic * j / m
        cols.append(scale * np.cos(theta))
        cols.append(scale * np.sin(theta))
    if n % 2 == 1:
        cols.append(((-1.0) ** j) / math.sqrt(m))
    basis = np.stack(cols, axis=1)
    basis.setflags(write=False)
    return basis


def covering_radius2(n: int) -> Fraction:
    """Squared covering radius of A_n*, the circumradius^2 of its Voronoi cell."""
    return Fraction(n * (n + 2), 12 * (n + 1))
