"""Projection onto the Coxeter plane and its orthogonal complement.

Two paths are provided. The float path works for every rank and uses the
orthonormal coordinates of the k-vectors. At n = 4 all planar dot products
lie in Q(sqrt 5) and all planar cross products lie in sin(72 deg) * Q(sqrt 5),
so every predicate used for classification and tile selection is decided
exactly with :class:`~weyltile.exact_field.GoldenNumber`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .exact_field import TAU, GoldenNumber
from .lattice import LatticeVector, ambient_basis, fundamental_weight
from .permutohedron import Face, face_vertices, faces_of_dimension

SIN72 = math.sin(2 * math.pi / 5)

_COS72 = GoldenNumber(Fraction(-1, 4), Fraction(1, 4))
_COS144 = GoldenNumber(Fraction(-1, 4), Fraction(-1, 4))
_TWO_FIFTHS = Fraction(2, 5)
_TAU_M1 = TAU - 1

# squared length of pi((k_i - k_j)/5) for cyclically adjacent i, j: the unit edge
UNIT_EDGE_SQ = Fraction(1, 25) * (2 / (2 + TAU))
FLOAT_TOL = 1e-9


class PlanePoint(NamedTuple):
    x: float
    y: float


class TileType(str, enum.Enum):
    THIN_HEXAGON = "ThinHexagon"
    THICK_HEXAGON = "ThickHexagon"
    THIN_RHOMBUS = "ThinRhombus"
    THICK_RHOMBUS = "ThickRhombus"
    DEGENERATE_SEGMENT = "DegenerateSegment"

    def __str__(self):
        return self.value


TILE_TYPES = (TileType.THIN_HEXAGON, TileType.THICK_HEXAGON, TileType.THIN_RHOMBUS, TileType.THICK_RHOMBUS)


# float path

def _coeff_array(v: LatticeVector) -> np.ndarray:
    return np.array([float(c) for c in v.coeffs])


def project(v: LatticeVector) -> PlanePoint:
    """Coxeter-plane image: sqrt(2/(n+1)) sum_j c_j (cos theta_j, sin theta_j)."""
    xy = _coeff_array(v) @ ambient_basis(v.n)[:, :2]
    return PlanePoint(float(xy[0]), float(xy[1]))


def project_perp(v: LatticeVector) -> np.ndarray:
    """Orthonormal coordinates in the orthogonal complement of the Coxeter plane."""
    return _coeff_array(v) @ ambient_basis(v.n)[:, 2:]


def projection_matrix(n: int) -> np.ndarray:
    """``(n+1, 2)`` matrix mapping coefficient rows to plane coordinates."""
    return ambient_basis(n)[:, :2]


def perp_matrix(n: int) -> np.ndarray:
    return ambient_basis(n)[:, 2:]


# exact path, n = 4

def _int_coeffs(v: LatticeVector) -> tuple[int, list[int]]:
    if v.n != 4:
        raise ValueError("exact Coxeter-plane arithmetic is available for n = 4 only")
    d, m = v.scaled_integers()
    return d, list(m)


def _shift_sums(u: LatticeVector, v: LatticeVector) -> tuple[Fraction, list[int]]:
    """``S[d] = sum_i u_i v_{i+d}`` over Z_5, as integers times a common scale."""
    du, a = _int_coeffs(u)
    dv, b = _int_coeffs(v)
    sums = [sum(a[i] * b[(i + d) % 5] for i in range(5)) for d in range(5)]
    return Fraction(1, du * dv), sums


def projected_dot_exact(u: LatticeVector, v: LatticeVector) -> GoldenNumber:
    """``pi(u) . pi(v)`` in Q(sqrt 5)."""
    scale, s = _shift_sums(u, v)
    return (s[0] + (s[1] + s[4]) * _COS72 + (s[2] + s[3]) * _COS144) * (_TWO_FIFTHS * scale)


def projected_sq_length_exact(v: LatticeVector) -> GoldenNumber:
    """``|pi(v)|^2`` in Q(sqrt 5)."""
    return projected_dot_exact(v, v)


def projected_cross_exact(u: LatticeVector, v: LatticeVector) -> GoldenNumber:
    """``pi(u) x pi(v)`` divided by sin(72 deg), in Q(sqrt 5).

    The sign of the result is the sign of the planar cross product.
    """
    scale, s = _shift_sums(u, v)
    return ((s[1] - s[4]) + (s[2] - s[3]) * _TAU_M1) * (_TWO_FIFTHS * scale)


def perp_dot_exact(u: LatticeVector, v: LatticeVector) -> GoldenNumber:
    scale, s = _shift_sums(u, v)
    return (s[0] + (s[1] + s[4]) * _COS144 + (s[2] + s[3]) * _COS72) * (_TWO_FIFTHS * scale)


def perp_sq_length_exact(v: LatticeVector) -> GoldenNumber:
    return perp_dot_exact(v, v)


def perp_cross_exact(u: LatticeVector, v: LatticeVector) -> GoldenNumber:
    """Cross product of the orthogonal-space images, divided by sin(72 deg)."""
    scale, s = _shift_sums(u, v)
    return ((s[1] - s[4]) * _TAU_M1 - (s[2] - s[3])) * (_TWO_FIFTHS * scale)


def is_cyclically_adjacent(i: int, j: int, m: int = 5) -> bool:
    return (i - j) % m in (1, m - 1)


# face classification

def face_edges(f: Face) -> list[LatticeVector]:
    verts = face_vertices(f)
    return [verts[(i + 1) % len(verts)] - verts[i] for i in range(len(verts))]


def edge_class(e: LatticeVector) -> str:
    """``"1"`` or ``"tau"`` for an edge of V(0) at n = 4, from its exact projected length."""
    ratio = projected_sq_length_exact(e) / UNIT_EDGE_SQ
    if ratio == 1:
        return "1"
    if ratio == TAU * TAU:
        return "tau"
    raise ValueError(f"{e!r} is not an edge of the Voronoi cell (length ratio {ratio})")


def edge_pattern(f: Face) -> tuple[str, ...]:
    """Edge length classes around a 2-face, with the overall factor removed."""
    return tuple(edge_class(e) for e in face_edges(f))


def classify_face_combinatorial(f: Face) -> TileType:
    """Tile type read off the blocks: cyclic adjacency of indices mod 5."""
    _require_2face(f)
    big = [b for b in f.blocks if len(b) > 1]
    if len(big) == 1:
        a, b, c = big[0]
        consecutive = sum(is_cyclically_adjacent(x, y) for x, y in ((a, b), (b, c), (a, c))) == 2
        return TileType.THIN_HEXAGON if consecutive else TileType.THICK_HEXAGON
    adj = [is_cyclically_adjacent(*p) for p in big]
    if all(adj):
        return TileType.THIN_RHOMBUS
    if not any(adj):
        return TileType.THICK_RHOMBUS
    return TileType.DEGENERATE_SEGMENT


def _require_2face(f: Face) -> None:
    if f.n != 4:
        raise ValueError("tile classification is defined for n = 4 only")
    if f.dimension != 2:
        raise ValueError(f"{f} is not a 2-face")


def classify_face(f: Face) -> TileType:
    """Tile type from exact projected edge lengths and parallelism.

    The result is cross-checked against :func:`classify_face_combinatorial`.
    """
    _require_2face(f)
    edges = face_edges(f)
    pattern = [edge_class(e) for e in edges]
    if len(edges) == 6:
        kind = TileType.THIN_HEXAGON if pattern.count("tau") == 2 else TileType.THICK_HEXAGON
    else:
        if projected_cross_exact(edges[0], edges[1]) == 0:
            kind = TileType.DEGENERATE_SEGMENT
        elif pattern == ["1"] * 4:
            kind = TileType.THIN_RHOMBUS
        elif pattern == ["tau"] * 4:
            kind = TileType.THICK_RHOMBUS
        else:
            raise RuntimeError(f"square {f} has mixed edge classes {pattern}")
    expected = classify_face_combinatorial(f)
    if kind != expected:
        raise RuntimeError(f"exact classification {kind} disagrees with block rule {expected} for {f}")
    return kind


def classify_all_faces(n: int = 4) -> dict[TileType, int]:
    counts = {t: 0 for t in TileType}
    for f in faces_of_dimension(n, 2):
        counts[classify_face(f)] += 1
    return counts


def rhombus_angle_identity(u: LatticeVector, v: LatticeVector) -> tuple[GoldenNumber, GoldenNumber]:
    """Both sides of ``4 (u.v)^2 = tau^2 |u|^2 |v|^2`` for projected edges (cos 36 = tau/2)."""
    d = projected_dot_exact(u, v)
    return 4 * d * d, TAU * TAU * projected_sq_length_exact(u) * projected_sq_length_exact(v)


# Delone cell projection

@dataclass(frozen=True)
class DeloneProjection:
    points: list[PlanePoint]
    sq_distances: dict[tuple[int, int], float]
    exact_sq_distances: dict[tuple[int, int], GoldenNumber] | None

    def distance_classes(self) -> list:
        """Distinct squared pairwise distances (exact at n = 4), ascending."""
        if self.exact_sq_distances is not None:
            return sorted(set(self.exact_sq_distances.values()))
        vals = sorted(self.sq_distances.values())
        classes: list[float] = []
        for x in vals:
            if not classes or x - classes[-1] > FLOAT_TOL:
                classes.append(x)
        return classes


def project_delone_simplex(n: int) -> DeloneProjection:
    """Images of the fundamental simplex 0, omega_1, ..., omega_n and their pairwise distances."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    verts = [LatticeVector.zero(n)] + [fundamental_weight(n, i) for i in range(1, n + 1)]
    pts = [project(v) for v in verts]
    sq = {}
    exact = {} if n == 4 else None
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            sq[(i, j)] = (pts[i].x - pts[j].x) ** 2 + (pts[i].y - pts[j].y) ** 2
            if exact is not None:
                exact[(i, j)] = projected_sq_length_exact(verts[i] - verts[j])
    return DeloneProjection(pts, sq, exact)


def rotate(p: Sequence[float], angle: float, center: Sequence[float] = (0.0, 0.0)) -> PlanePoint:
    c, s = math.cos(angle), math.sin(angle)
    x, y = p[0] - center[0], p[1] - center[1]
    return PlanePoint(center[0] + c * x - s * y, center[1] + s * x + c * y)
