"""Verification battery behind ``weyltile verify``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_field import TAU, golden_to_float
from .lattice import (
    LatticeVector,
    ambient_coordinates,
    covering_radius2,
    enumerate_weight_lattice,
    inner_product,
    k_vector,
)
from .permutohedron import (
    Face,
    euler_check,
    euler_expected,
    face_center,
    face_count_formula,
    face_counts,
    face_type,
    face_vertices,
    face_words,
    faces_of_dimension,
    facet_center_orbit_generators,
    facet_center_orbits,
    vertex_words,
    voronoi_vertices,
    word_string,
)
from .projection import (
    classify_all_faces,
    face_edges,
    project,
    project_delone_simplex,
    projected_cross_exact,
    projected_dot_exact,
    projected_sq_length_exact,
)
from .weyl import weyl_orbit

MAX_RANK = 7

TABLE1_ROW1 = ["54321", "45321", "35421", "34521", "43521", "53421"]
TABLE2 = ["54321", "45321", "35421", "34521", "43521", "53421",
          "54312", "45312", "35412", "34512", "43512", "53412"]


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


def _census_checks(n: int) -> list[Check]:
    from math import factorial

    checks = [Check("vertex count (n+1)!", factorial(n + 1), len(voronoi_vertices(n)))]
    counts = face_counts(n)
    for d, c in enumerate(counts):
        checks.append(Check(f"N_{d} enumeration vs surjection formula", face_count_formula(n, d), c))
    checks.append(Check("Euler characteristic of the boundary sphere", euler_expected(n), euler_check(n)))
    return checks


def _voronoi_property(n: int) -> list[Check]:
    """Integer check that every vertex is nearest to 0 and touches exactly n other lattice points."""
    scale = 2 * (n + 1)  # clears all denominators of vertices and weight lattice points
    verts = np.array([[int(c * scale) for c in v.coeffs] for v in voronoi_vertices(n)], dtype=np.int64)
    zero = LatticeVector.zero(n)
    pts = [p for p in enumerate_weight_lattice(n, 4 * covering_radius2(n)) if p != zero]
    P = np.array([[int(c * scale) for c in p.coeffs] for p in pts], dtype=np.int64)
    # |v - s|^2 - |v|^2 = |s|^2 - 2 v.s
    margin = (P * P).sum(axis=1)[None, :] - 2 * (verts @ P.T)
    norms = sorted({int(x) for x in (verts * verts).sum(axis=1)})
    touching = sorted({int(x) for x in (margin == 0).sum(axis=1)})
    return [
        Check("all vertices equidistant from 0", 1, len(norms)),
        Check("vertex norm^2 = covering radius^2", str(covering_radius2(n)), str(Fraction(norms[0], scale * scale))),
        Check("no lattice point closer to a vertex than 0", True, bool((margin >= 0).all())),
        Check("other lattice points equidistant with 0 at each vertex", [n], touching),
    ]


def _gram_checks(n: int) -> list[Check]:
    worst = 0.0
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            u, v = k_vector(n, i), k_vector(n, j)
            worst = max(worst, abs(float(inner_product(u, v)) - float(ambient_coordinates(u) @ ambient_coordinates(v))))
    return [Check("Gram form vs orthonormal coordinates within 1e-12", True, worst < 1e-12)]


def _hexagon_polygon() -> list[LatticeVector]:
    """Vertices of V(0) at n = 2 in boundary order, walked along the 1-faces."""
    edges = [face_vertices(f) for f in faces_of_dimension(2, 1)]
    ring = list(edges.pop(0))
    while edges:
        nxt = next(e for e in edges if ring[-1] in e)
        edges.remove(nxt)
        other = nxt[1] if nxt[0] == ring[-1] else nxt[0]
        if other != ring[0]:
            ring.append(other)
    return ring


def _rank2_checks() -> list[Check]:
    ring = _hexagon_polygon()
    sides = [ring[(i + 1) % len(ring)] - ring[i] for i in range(len(ring))]
    lengths = {str(e.norm2()) for e in sides}
    # equal angles: equal inner products of consecutive edge vectors
    turns = {str(inner_product(sides[i], sides[(i + 1) % len(sides)])) for i in range(len(sides))}
    return [
        Check("hexagon: 6 vertices", 6, len(ring)),
        Check("hexagon: 6 edges", 6, len(sides)),
        Check("hexagon: equal edge lengths (exact)", 1, len(lengths)),
        Check("hexagon: equal angles (exact)", 1, len(turns)),
        Check("hexagon: interior angle 120 deg", True,
              2 * inner_product(sides[0], sides[1]) == sides[0].norm2()),
        Check("projected fundamental simplex: equilateral", 1,
              len(project_delone_simplex(2).distance_classes())),
    ]


def _rank4_checks() -> list[Check]:
    checks = [Check("census N_0..N_3", [120, 240, 150, 30], face_counts(4))]
    split2 = Counter(face_type(f) for f in faces_of_dimension(4, 2))
    split3 = Counter(face_type(f) for f in faces_of_dimension(4, 3))
    checks.append(Check("2-faces: hexagons + squares", {"hexagon": 60, "square": 90}, dict(sorted(split2.items()))))
    checks.append(Check("3-faces: truncated octahedra + prisms", {"hexagonal_prism": 20, "truncated_octahedron": 10},
                        dict(sorted(split3.items()))))
    checks.append(Check("alternating sum 120-240+150-30", 0, euler_check(4)))

    centers: dict[str, set] = {}
    for d in (2, 3):
        for f in faces_of_dimension(4, d):
            centers.setdefault(face_type(f), set()).add(face_center(f))
    for label, orbit in facet_center_orbits(4).items():
        checks.append(Check(f"centers of {label} faces equal the labeled orbits", True, set(orbit) == centers[label]))
        checks.append(Check(f"{label} center count", len(orbit), len(centers[label])))

    expected_sizes = {"truncated_octahedron": [5, 5], "hexagon": [20, 20, 20],
                      "hexagonal_prism": [10, 10], "square": [30, 30, 30]}
    for label, gens in facet_center_orbit_generators(4).items():
        checks.append(Check(f"{label} orbit sizes", expected_sizes[label], [len(weyl_orbit(v)) for _, v in gens]))

    hexa = Face([(1, 2, 3), (4,), (5,)])
    prism = Face([(1, 2, 3), (4, 5)])
    checks.append(Check("Table 1 row 1 vertex words", sorted(TABLE1_ROW1), sorted(word_string(w) for w in face_words(hexa))))
    checks.append(Check("Table 1 row 1 center", str((k_vector(4, 4) * -2 - k_vector(4, 5) * 3) / 5), str(face_center(hexa))))
    checks.append(Check("Table 2 vertex words", sorted(TABLE2), sorted(word_string(w) for w in face_words(prism))))
    checks.append(Check("Table 2 center (1/2) omega_3", str((k_vector(4, 4) + k_vector(4, 5)) * Fraction(-1, 2)),
                        str(face_center(prism))))

    k = [None] + [k_vector(4, j) for j in range(1, 6)]
    checks.append(Check("(k_i,k_i)", "4/5", str(inner_product(k[1], k[1]))))
    checks.append(Check("(k_i,k_j)", "-1/5", str(inner_product(k[1], k[2]))))
    checks.append(Check("|k_i-k_j|^2", "2", str((k[1] - k[2]).norm2())))
    checks.append(Check("projected |k_2-k_1|^2 = 2/(2+tau)", str(2 / (2 + TAU)), str(projected_sq_length_exact(k[2] - k[1]))))
    checks.append(Check("projected |k_3-k_1|^2 = tau^2 2/(2+tau)", str(TAU * TAU * 2 / (2 + TAU)),
                        str(projected_sq_length_exact(k[3] - k[1]))))

    worst = 0.0
    for f in faces_of_dimension(4, 2):
        for e in face_edges(f):
            p = np.array(project(e))
            worst = max(worst, abs(golden_to_float(projected_sq_length_exact(e)) - float(p @ p)))
    checks.append(Check("exact vs float projected edge lengths within 1e-9", True, worst < 1e-9))

    census = {t.value: c for t, c in classify_all_faces(4).items()}
    checks.append(Check("tile classification of the 150 2-faces",
                        {"ThinHexagon": 30, "ThickHexagon": 30, "ThinRhombus": 30, "ThickRhombus": 30,
                         "DegenerateSegment": 30}, census))

    u, v = k[1] - k[2], k[4] - k[5]
    d = projected_dot_exact(u, v)
    checks.append(Check("thin rhombus: 4(u.v)^2 = tau^2 |u|^2 |v|^2", True,
                        4 * d * d == TAU * TAU * projected_sq_length_exact(u) * projected_sq_length_exact(v)))
    checks.append(Check("degenerate square: exact zero cross product", True,
                        projected_cross_exact(k[1] - k[2], k[3] - k[5]) == 0))

    dp = project_delone_simplex(4)
    classes = dp.distance_classes()
    checks.append(Check("projected fundamental simplex: distance classes", 2, len(classes)))
    checks.append(Check("projected fundamental simplex: class ratio tau^2", str(TAU * TAU),
                        str(classes[1] / classes[0]) if len(classes) == 2 else None))
    return checks


def run_checks(n: int) -> list[Check]:
    if not 1 <= n <= MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}")
    checks = _census_checks(n) + _gram_checks(n)
    if n <= 5:
        checks += _voronoi_property(n)
    if n == 2:
        checks += _rank2_checks()
    if n == 3:
        names = {"3x1": "hexagon", "2x2": "square"}
        split = Counter(names[face_type(f)] for f in faces_of_dimension(3, 2))
        checks.append(Check("2-faces: hexagons + squares", {"hexagon": 8, "square": 6}, dict(sorted(split.items()))))
    if n == 4:
        checks += _rank4_checks()
    return checks


def report(n: int) -> dict:
    checks = run_checks(n)
    return {"n": n, "passed": all(c.passed for c in checks), "checks": [c.as_dict() for c in checks]}
