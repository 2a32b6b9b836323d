"""Planar tilings from the projected Voronoi complex of A_4*.

Two constructions:

* :func:`shadow_tiling_of_cell` tiles the projected cell V(0) by the 2-faces
  on its lower shadow with respect to a direction ``w`` of the orthogonal space.
* :func:`klotz_patch` selects, over every lattice translate in a ball, the
  2-faces whose dual Delone triangle projects (orthogonally) onto a triangle
  containing the window point ``gamma``. Their Coxeter-plane images form a
  face-to-face tiling.

Both selection rules are decided exactly in Q(sqrt 5); float arithmetic only
prefilters clear-cut cases and produces coordinates.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .lattice import LatticeVector, enumerate_weight_lattice, k_vector, weight_coordinates
from .permutohedron import Face, face_dual_chain, face_vertices, faces_of_dimension, voronoi_vertices
from .projection import (
    FLOAT_TOL,
    PlanePoint,
    TILE_TYPES,
    TileType,
    classify_face,
    perp_cross_exact,
    perp_matrix,
    perp_sq_length_exact,
    projection_matrix,
)

N = 4


class NonGenericError(ValueError):
    """The window point or direction lies on the boundary of a selection region."""


@dataclass(frozen=True)
class Tile:
    type: TileType
    vertices: tuple[PlanePoint, ...]
    translate: LatticeVector
    face: Face
    window: tuple[PlanePoint, ...] = ()
    boundary_incomplete: bool = False

    def area(self) -> float:
        return polygon_area(self.vertices)

    def centroid(self) -> PlanePoint:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return PlanePoint(sum(xs) / len(xs), sum(ys) / len(ys))


@dataclass
class Patch:
    tiles: list[Tile]
    gamma: LatticeVector | None = None
    radius: Fraction | None = None
    center: PlanePoint = PlanePoint(0.0, 0.0)
    covered_radius: float = 0.0
    meta: dict = field(default_factory=dict)


# geometry helpers

def polygon_area(pts: Sequence[Sequence[float]]) -> float:
    """Signed shoelace area (positive for counter-clockwise)."""
    s = 0.0
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def convex_hull(points: Iterable[Sequence[float]]) -> list[PlanePoint]:
    """Counter-clockwise hull, collinear points dropped."""
    pts = sorted(set((float(p[0]), float(p[1])) for p in points))
    if len(pts) <= 2:
        return [PlanePoint(*p) for p in pts]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= FLOAT_TOL:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= FLOAT_TOL:
            upper.pop()
        upper.append(p)
    return [PlanePoint(*p) for p in lower[:-1] + upper[:-1]]


def _plane(v: LatticeVector) -> np.ndarray:
    return np.array([float(c) for c in v.coeffs]) @ projection_matrix(v.n)


def _perp(v: LatticeVector) -> np.ndarray:
    return np.array([float(c) for c in v.coeffs]) @ perp_matrix(v.n)


def shadow_polygon(n: int = N) -> list[PlanePoint]:
    """Convex hull of the projected vertices of V(0)."""
    return convex_hull(PlanePoint(*_plane(v)) for v in voronoi_vertices(n))


# window coordinates

def window_lift(x, y) -> LatticeVector:
    """Rational lift with orthogonal-space image ``x * pi_perp(k5) + y * pi_perp(k1 - k4)``.

    ``pi_perp(k5)`` and ``pi_perp(k1 - k4)`` are orthogonal; this is the frame
    in which ``--gamma x,y`` and ``--w x,y`` are read.
    """
    x, y = Fraction(x), Fraction(y)
    return k_vector(N, 5) * x + (k_vector(N, 1) - k_vector(N, 4)) * y


def parse_point(text: str) -> LatticeVector:
    """``"x,y"`` window coordinates or five comma-separated k-coefficients."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    vals = [Fraction(p) for p in parts]
    if len(vals) == 2:
        return window_lift(*vals)
    if len(vals) == N + 1:
        return LatticeVector(vals)
    raise ValueError(f"expected 2 window coordinates or {N + 1} k-coefficients, got {text!r}")


DEFAULT_W = window_lift(Fraction(1, 3), Fraction(1, 7))
DEFAULT_GAMMA = window_lift(Fraction(1, 7), Fraction(2, 9))
GENERIC_GAMMAS = (
    DEFAULT_GAMMA,
    window_lift(Fraction(-3, 11), Fraction(1, 13)),
    LatticeVector([Fraction(1, 3), Fraction(1, 7), Fraction(-1, 5), Fraction(2, 9), 0]),
)
# Voronoi vertex (1/5)(5k1+4k2+3k3+2k4+k5); fixed by x -> c x + k1, c the Coxeter element
SYMMETRIC_GAMMA = LatticeVector([Fraction(5, 5), Fraction(4, 5), Fraction(3, 5), Fraction(2, 5), Fraction(1, 5)])


# per-face data of V(0), cached

@dataclass(frozen=True)
class _FaceData:
    face: Face
    type: TileType
    chain: tuple[LatticeVector, LatticeVector]      # e(B1), e(B1+B2)
    chain_perp: np.ndarray                           # (2, 2)
    verts_plane: np.ndarray                          # (k, 2), counter-clockwise


@lru_cache(maxsize=1)
def _face_data() -> tuple[_FaceData, ...]:
    out = []
    for f in faces_of_dimension(N, 2):
        _, a, b = face_dual_chain(f)
        verts = np.array([_plane(v) for v in face_vertices(f)])
        if polygon_area(verts) < 0:
            verts = verts[::-1]
        out.append(_FaceData(f, classify_face(f), (a, b), np.array([_perp(a), _perp(b)]), verts))
    return tuple(out)


def _tile_vertices(fd: _FaceData, offset: np.ndarray) -> tuple[PlanePoint, ...]:
    pts = fd.verts_plane + offset
    return tuple(PlanePoint(_clean(x), _clean(y)) for x, y in pts)


def _clean(x: float) -> float:
    return float(x) + 0.0


# shadow tiling

def _cone_contains(a: LatticeVector, b: LatticeVector, u: LatticeVector) -> bool | None:
    """Exact test ``pi_perp(u)`` in the open cone of ``pi_perp(a), pi_perp(b)``.

    Returns None when ``u`` lies on the cone boundary.
    """
    s_ab = perp_cross_exact(a, b).sign()
    s_au = perp_cross_exact(a, u).sign()
    s_ub = perp_cross_exact(u, b).sign()
    if s_ab == 0:
        # flat cone: only its two rays could contain u
        for r in (a, b):
            if perp_cross_exact(r, u).sign() == 0 and _perp_dot_sign(r, u) > 0:
                return None
        return False
    if s_au == s_ab and s_ub == s_ab:
        return True
    # u along one of the bounding rays
    if (s_au == 0 and s_ub == s_ab) or (s_ub == 0 and s_au == s_ab):
        return None
    return False


def _perp_dot_sign(a: LatticeVector, b: LatticeVector) -> int:
    # |a+b|^2 - |a|^2 - |b|^2 = 2 a.b
    return (perp_sq_length_exact(a + b) - perp_sq_length_exact(a) - perp_sq_length_exact(b)).sign()


def shadow_tiling_of_cell(n: int = N, w: LatticeVector | None = None) -> Patch:
    """Tiles of the projected V(0): 2-faces whose normal cone, seen in the
    orthogonal space, contains ``-w``.

    ``w`` is a rational lift; only its orthogonal-space image matters.
    """
    if n != N:
        raise ValueError("the shadow tiling is implemented for n = 4")
    if w is None:
        w = DEFAULT_W
    if perp_sq_length_exact(w) == 0:
        raise NonGenericError("w has zero orthogonal-space component")
    u = -w
    zero = LatticeVector.zero(N)
    tiles = []
    for fd in _face_data():
        a, b = fd.chain
        inside = _cone_contains(a, b, u)
        if inside is None:
            raise NonGenericError(
                f"direction w lies on the boundary of the normal cone of {fd.face}; perturb w and retry")
        if not inside:
            continue
        if fd.type is TileType.DEGENERATE_SEGMENT:
            raise RuntimeError(f"degenerate face {fd.face} selected")
        tiles.append(Tile(fd.type, _tile_vertices(fd, np.zeros(2)), zero, fd.face))
    tiles.sort(key=_tile_order)
    return Patch(tiles, meta={"construction": "shadow", "w": [str(c) for c in w.coeffs],
                              "w_perp": [_clean(x) for x in _perp(w)]})


def _tile_order(t: Tile):
    return (t.translate.coeffs, t.face.blocks)


# Klotz patch

def _orient_exact(p: LatticeVector, q: LatticeVector, r: LatticeVector) -> int:
    return perp_cross_exact(q - p, r - p).sign()


def _in_triangle_exact(p0: LatticeVector, p1: LatticeVector, p2: LatticeVector,
                       g: LatticeVector) -> bool | None:
    """Strict containment of pi_perp(g) in the projected triangle; None on its boundary."""
    s = _orient_exact(p0, p1, p2)
    o = [_orient_exact(p0, p1, g), _orient_exact(p1, p2, g), _orient_exact(p2, p0, g)]
    if s == 0:
        # zero-area image: a segment; g on it is a boundary case
        for x, y in ((p0, p1), (p1, p2), (p2, p0)):
            if _orient_exact(x, y, g) == 0 and _between(x, y, g):
                return None
        return False
    if all(x == s for x in o):
        return True
    if all(x in (0, s) for x in o):
        return None
    return False


def _between(x: LatticeVector, y: LatticeVector, g: LatticeVector) -> bool:
    return _perp_dot_sign(g - x, y - x) >= 0 and _perp_dot_sign(g - y, x - y) >= 0


def _max_perp_reach() -> float:
    return max(float(np.hypot(*fd.chain_perp[i])) for fd in _face_data() for i in range(2))


def _max_plane_reach() -> float:
    return max(float(np.hypot(*_plane(v))) for v in voronoi_vertices(N))


def covered_radius(radius, perp_offset: float = 0.0) -> float:
    """Radius of the disc about the patch center that the patch is guaranteed to cover.

    A tile covering plane point x comes from translates t with
    ``|pi(t) - x| <= max |pi(v)|`` over vertices v of V(0) and
    ``|pi_perp(t) - gamma| <= max |pi_perp(e_B)|`` over dual chain points.
    """
    r2 = float(radius) - (_max_perp_reach() + perp_offset) ** 2
    if r2 <= 0:
        return 0.0
    return max(0.0, math.sqrt(r2) - _max_plane_reach())


def klotz_patch(n: int = N, gamma: LatticeVector | None = None, radius=9,
                center: LatticeVector | None = None) -> Patch:
    """Dual (Klotz) selection over the lattice translates ``t`` with ``|t - center|^2 <= radius``.

    A 2-face ``F`` of ``t + V(0)`` is kept iff ``pi_perp(gamma)`` is strictly
    inside ``pi_perp`` of its dual Delone triangle. ``center`` defaults to
    ``gamma`` itself, which keeps the patch equivariant under every lattice
    symmetry fixing ``gamma``; pass a lattice point to grow the patch from
    that cell (radius 0 then gives the selected faces of one cell).
    """
    if n != N:
        raise ValueError("the Klotz patch is implemented for n = 4")
    if gamma is None:
        gamma = DEFAULT_GAMMA
    if gamma.n != N:
        raise ValueError("gamma must be a rank-4 vector")
    radius = Fraction(radius)
    if center is None:
        center = gamma
    faces = _face_data()
    g_perp = _perp(gamma)
    reach = _max_perp_reach() + 1e-6
    translates = [t for t in enumerate_weight_lattice(N, radius, center=center)
                  if np.hypot(*(_perp(t) - g_perp)) <= reach]
    in_ball = set(translates)

    A = np.array([fd.chain_perp[0] for fd in faces])
    B = np.array([fd.chain_perp[1] for fd in faces])
    tri = A[:, 0] * B[:, 1] - A[:, 1] * B[:, 0]
    flat = np.abs(tri) <= FLOAT_TOL
    sgn = np.where(flat, 0.0, np.sign(tri))
    # for flat (segment) images: the longer of the two chain directions spans the line
    longer = np.where((np.hypot(A[:, 0], A[:, 1]) >= np.hypot(B[:, 0], B[:, 1]))[:, None], A, B)
    longer /= np.hypot(longer[:, 0], longer[:, 1])[:, None]

    chosen: dict[frozenset, tuple[LatticeVector, _FaceData]] = {}
    for t in translates:
        p = g_perp - _perp(t)
        o1 = (A[:, 0] * p[1] - A[:, 1] * p[0]) * sgn
        o2 = ((B[:, 0] - A[:, 0]) * (p[1] - A[:, 1]) - (B[:, 1] - A[:, 1]) * (p[0] - A[:, 0])) * sgn
        o3 = (-B[:, 0] * (p[1] - B[:, 1]) + B[:, 1] * (p[0] - B[:, 0])) * sgn
        clear_in = ~flat & (o1 > FLOAT_TOL) & (o2 > FLOAT_TOL) & (o3 > FLOAT_TOL)
        clear_out = ~flat & ((o1 < -FLOAT_TOL) | (o2 < -FLOAT_TOL) | (o3 < -FLOAT_TOL))
        off_line = np.abs(longer[:, 0] * p[1] - longer[:, 1] * p[0]) > FLOAT_TOL
        clear_out |= flat & off_line
        selected = list(np.nonzero(clear_in)[0])
        for idx in np.nonzero(~clear_in & ~clear_out)[0]:
            fd = faces[idx]
            a, b = fd.chain
            verdict = _in_triangle_exact(t, t + a, t + b, gamma)
            if verdict is None:
                raise NonGenericError(
                    f"gamma lies on the boundary of the projected dual of face {fd.face} "
                    f"at translate {t}; choose another window point")
            if verdict:
                selected.append(idx)
        for idx in selected:
            fd = faces[idx]
            if fd.type is TileType.DEGENERATE_SEGMENT:
                raise RuntimeError(f"degenerate face {fd.face} selected at {t}")
            a, b = fd.chain
            chosen.setdefault(frozenset((t, t + a, t + b)), (t, fd))

    plane_center = PlanePoint(*(_clean(x) for x in _plane(center)))
    # the covering guarantee is about the lift of the plane center into E + gamma
    cov = covered_radius(radius, float(np.hypot(*(_perp(center) - g_perp))))
    tiles = []
    for key, (t, fd) in chosen.items():
        # canonical source: smallest dual point inside the ball
        src = min(p for p in key if p in in_ball)
        face = fd.face if src == t else _face_relative(key, src)
        sfd = fd if src == t else _face_lookup()[face]
        verts = _tile_vertices(sfd, _plane(src))
        window = tuple(PlanePoint(*(_clean(x) for x in _perp(p))) for p in sorted(key))
        inside = all(math.hypot(x - plane_center.x, y - plane_center.y) <= cov + 1e-12 for x, y in verts)
        tiles.append(Tile(sfd.type, verts, src, face, window, not inside))
    tiles.sort(key=_tile_order)
    meta = {
        "construction": "klotz",
        "gamma_perp": [_clean(x) for x in g_perp],
        "translates": len(translates),
        "center": [str(c) for c in center.coeffs],
    }
    return Patch(tiles, gamma, radius, plane_center, cov, meta)


def _face_relative(key: frozenset, base: LatticeVector) -> Face:
    from .permutohedron import face_from_dual

    return face_from_dual(sorted(key), base)


@lru_cache(maxsize=1)
def _face_lookup() -> dict[Face, _FaceData]:
    return {fd.face: fd for fd in _face_data()}


# statistics and symmetry

def patch_statistics(patch: Patch) -> dict[TileType, tuple[int, float]]:
    counts = {t: 0 for t in TILE_TYPES}
    for tile in patch.tiles:
        counts[tile.type] = counts.get(tile.type, 0) + 1
    total = sum(counts.values())
    return {t: (c, (c / total if total else 0.0)) for t, c in counts.items()}


def transformed_tiles_match(tiles: Sequence[Tile], matrix: np.ndarray, center: Sequence[float],
                            tol: float = 1e-6) -> bool:
    """True when the isometry ``x -> center + M (x - center)`` maps the tile set onto itself."""
    c = np.asarray(center, dtype=float)
    src = [np.array(t.vertices) for t in tiles]
    cents = np.array([v.mean(axis=0) for v in src]) if src else np.zeros((0, 2))
    order = np.argsort(cents[:, 0]) if len(cents) else np.array([], dtype=int)
    xs = cents[order, 0] if len(cents) else np.array([])
    for tile, verts in zip(tiles, src):
        img = (verts - c) @ matrix.T + c
        ic = img.mean(axis=0)
        lo = bisect.bisect_left(xs, ic[0] - tol)
        hi = bisect.bisect_right(xs, ic[0] + tol)
        found = False
        for pos in range(lo, hi):
            j = order[pos]
            if abs(cents[j, 1] - ic[1]) > tol or tiles[j].type != tile.type:
                continue
            other = src[j]
            if len(other) == len(img) and _same_point_set(img, other, tol):
                found = True
                break
        if not found:
            return False
    return True


def _same_point_set(a: np.ndarray, b: np.ndarray, tol: float) -> bool:
    d = np.linalg.norm(a[:, None, :] - b[None, :, :], axis=2)
    return bool(np.all(d.min(axis=1) <= tol) and np.all(d.min(axis=0) <= tol))


def rotation_matrix(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def reflection_matrix(axis_angle: float) -> np.ndarray:
    c, s = math.cos(2 * axis_angle), math.sin(2 * axis_angle)
    return np.array([[c, s], [s, -c]])


def planar_symmetries(tiles: Sequence[Tile], center: Sequence[float] = (0.0, 0.0),
                      order: int = 10, tol: float = 1e-6) -> dict[str, list[float]]:
    """Rotations by multiples of 2 pi/order and reflections in axes at multiples of pi/order
    (through ``center``) that preserve the tile set."""
    rots, mirrors = [], []
    for k in range(1, order):
        ang = 2 * math.pi * k / order
        if transformed_tiles_match(tiles, rotation_matrix(ang), center, tol):
            rots.append(ang)
    for k in range(order):
        ang = math.pi * k / order
        if transformed_tiles_match(tiles, reflection_matrix(ang), center, tol):
            mirrors.append(ang)
    return {"rotations": rots, "mirrors": mirrors}


# serialization

def _fmt(x: float) -> float:
    return _clean(round(x, 12))


def patch_to_json(patch: Patch) -> dict:
    out: dict = {}
    out["gamma"] = [str(c) for c in patch.gamma.coeffs] if patch.gamma is not None else None
    out["radius"] = str(patch.radius) if patch.radius is not None else None
    out["center"] = [_fmt(patch.center.x), _fmt(patch.center.y)]
    out["covered_radius"] = _fmt(patch.covered_radius)
    out["meta"] = patch.meta
    out["census"] = {t.value: c for t, (c, _) in patch_statistics(patch).items()}
    out["tiles"] = [
        {
            "type": t.type.value,
            "vertices": [[_fmt(x), _fmt(y)] for x, y in t.vertices],
            "translate": [str(c) for c in t.translate.coeffs],
            "weight_coords": [int(c) for c in weight_coordinates(t.translate)],
            "blocks": [list(b) for b in t.face.blocks],
            "boundary_incomplete": t.boundary_incomplete,
        }
        for t in patch.tiles
    ]
    return out
