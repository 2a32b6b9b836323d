import math
import random
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from oracles import float_classify
from weyltile.exact_field import TAU, golden_to_float
from weyltile.lattice import LatticeVector, fundamental_weight, inner_product, k_vector
from weyltile.permutohedron import Face, face_vertices, faces_of_dimension
from weyltile.projection import (
    UNIT_EDGE_SQ,
    TileType,
    classify_all_faces,
    classify_face,
    classify_face_combinatorial,
    edge_pattern,
    face_edges,
    perp_cross_exact,
    perp_sq_length_exact,
    project,
    project_delone_simplex,
    project_perp,
    projected_cross_exact,
    projected_dot_exact,
    projected_sq_length_exact,
    rhombus_angle_identity,
)
from weyltile.weyl import coxeter_element

F = Fraction


def rand_vec(rng, n=4):
    return LatticeVector([F(rng.randint(-7, 7), rng.randint(1, 5)) for _ in range(n + 1)])


def test_k_images_on_circle():
    for j in range(1, 6):
        p = project(k_vector(4, j))
        assert math.hypot(*p) == pytest.approx(math.sqrt(2 / 5), abs=1e-12)
    assert project(LatticeVector.zero(4)) == (0.0, 0.0)


def test_projection_ignores_representative():
    rng = random.Random(1)
    for _ in range(20):
        c = [F(rng.randint(-5, 5), 3) for _ in range(5)]
        shifted = [x + 7 for x in c]
        # LatticeVector canonicalizes; check the raw formula on both lists
        for coeffs in (c, shifted):
            x = sum(float(a) * math.cos(2 * math.pi * j / 5) for j, a in enumerate(coeffs, 1))
            assert x * math.sqrt(2 / 5) == pytest.approx(project(LatticeVector(c)).x, abs=1e-12)


def test_norm_split():
    rng = random.Random(2)
    for _ in range(100):
        v = rand_vec(rng)
        p, q = np.array(project(v)), project_perp(v)
        assert p @ p + q @ q == pytest.approx(float(v.norm2()), abs=1e-9)
    k5 = k_vector(4, 5)
    assert np.allclose(project(k5), [2 / math.sqrt(10), 0], atol=1e-12)
    assert np.allclose(project_perp(k5), [2 / math.sqrt(10), 0], atol=1e-12)
    assert not project_perp(LatticeVector.zero(4)).any()


def test_exact_lengths():
    e = k_vector(4, 2) - k_vector(4, 1)
    f = k_vector(4, 3) - k_vector(4, 1)
    assert projected_sq_length_exact(e) == 2 / (2 + TAU)
    assert projected_sq_length_exact(f) == TAU * TAU * 2 / (2 + TAU)
    assert projected_sq_length_exact(f) / projected_sq_length_exact(e) == TAU * TAU


def test_exact_matches_float():
    rng = random.Random(3)
    for _ in range(100):
        u, v = rand_vec(rng), rand_vec(rng)
        pu, pv = np.array(project(u)), np.array(project(v))
        assert golden_to_float(projected_dot_exact(u, v)) == pytest.approx(pu @ pv, abs=1e-9)
        cross = pu[0] * pv[1] - pu[1] * pv[0]
        assert golden_to_float(projected_cross_exact(u, v)) * math.sin(2 * math.pi / 5) == pytest.approx(cross, abs=1e-9)
        qu, qv = project_perp(u), project_perp(v)
        assert golden_to_float(perp_sq_length_exact(u)) == pytest.approx(qu @ qu, abs=1e-9)
        pc = qu[0] * qv[1] - qu[1] * qv[0]
        assert golden_to_float(perp_cross_exact(u, v)) * math.sin(2 * math.pi / 5) == pytest.approx(pc, abs=1e-9)


def test_all_face_edges_exact_vs_float():
    for f in faces_of_dimension(4, 2):
        for e in face_edges(f):
            p = np.array(project(e))
            assert golden_to_float(projected_sq_length_exact(e)) == pytest.approx(p @ p, abs=1e-9)


def test_rotation_equivariance():
    rng = random.Random(4)
    c = coxeter_element(4)
    ang = 2 * math.pi / 5
    rot = np.array([[math.cos(ang), -math.sin(ang)], [math.sin(ang), math.cos(ang)]])
    for _ in range(100):
        v = rand_vec(rng)
        assert np.allclose(project(c(v)), rot @ np.array(project(v)), atol=1e-9)


def test_classification_examples():
    assert classify_face(Face([(1, 2), (4, 5), (3,)])) is TileType.THIN_RHOMBUS
    assert classify_face(Face([(1, 3), (2, 4), (5,)])) is TileType.THICK_RHOMBUS
    assert classify_face(Face([(1, 2), (3, 5), (4,)])) is TileType.DEGENERATE_SEGMENT
    assert classify_face(Face([(1, 2, 3), (4,), (5,)])) is TileType.THIN_HEXAGON
    assert classify_face(Face([(1, 2, 4), (3,), (5,)])) is TileType.THICK_HEXAGON
    with pytest.raises(ValueError):
        classify_face(Face([(1, 2, 3), (4, 5)]))


def test_hexagon_edge_patterns():
    def cyclic_forms(p):
        p = tuple(p)
        rots = [p[i:] + p[:i] for i in range(len(p))]
        return set(rots) | {tuple(reversed(r)) for r in rots}

    thin = edge_pattern(Face([(1, 2, 3), (4,), (5,)]))
    assert ("1", "tau", "1", "1", "tau", "1") in cyclic_forms(thin)
    assert ("tau", "1", "1", "tau", "1", "1") in cyclic_forms(thin)
    thick = edge_pattern(Face([(1, 2, 4), (3,), (5,)]))
    assert ("1", "tau", "tau", "1", "tau", "tau") in cyclic_forms(thick)


def test_classification_census_vs_float_oracle():
    census = classify_all_faces(4)
    assert census == {TileType.THIN_HEXAGON: 30, TileType.THICK_HEXAGON: 30, TileType.THIN_RHOMBUS: 30,
                      TileType.THICK_RHOMBUS: 30, TileType.DEGENERATE_SEGMENT: 30}
    oracle = Counter()
    for f in faces_of_dimension(4, 2):
        kind = float_classify(f)
        assert kind == classify_face(f).value == classify_face_combinatorial(f).value
        oracle[kind] += 1
    assert oracle == {"ThinHexagon": 30, "ThickHexagon": 30, "ThinRhombus": 30, "ThickRhombus": 30,
                      "DegenerateSegment": 30}


def test_rhombus_angles():
    lhs, rhs = rhombus_angle_identity(k_vector(4, 1) - k_vector(4, 2), k_vector(4, 4) - k_vector(4, 5))
    assert lhs == rhs
    # thick rhombus: cos 72 = (tau - 1)/2
    u, v = k_vector(4, 1) - k_vector(4, 3), k_vector(4, 2) - k_vector(4, 4)
    d = projected_dot_exact(u, v)
    assert 4 * d * d == (TAU - 1) ** 2 * projected_sq_length_exact(u) * projected_sq_length_exact(v)


def test_degenerate_cross_exactly_zero():
    for f in faces_of_dimension(4, 2):
        if classify_face(f) is TileType.DEGENERATE_SEGMENT:
            e = face_edges(f)
            assert projected_cross_exact(e[0], e[1]) == 0


def test_unit_edge():
    e = (k_vector(4, 1) - k_vector(4, 2)) / 5
    assert projected_sq_length_exact(e) == UNIT_EDGE_SQ


def test_delone_projection_rank4():
    dp = project_delone_simplex(4)
    classes = dp.distance_classes()
    assert len(classes) == 2
    assert classes[1] / classes[0] == TAU * TAU
    # c(omega_i) = omega_{i+1} - k_1 and c(omega_4) = -k_1, so the rotated set is the set shifted by -pi(k_1)
    pts = np.array(dp.points)
    ang = 2 * math.pi / 5
    rot = np.array([[math.cos(ang), -math.sin(ang)], [math.sin(ang), math.cos(ang)]])
    img = pts @ rot.T
    target = pts - np.array(project(k_vector(4, 1)))
    assert all(np.min(np.linalg.norm(target - q, axis=1)) < 1e-9 for q in img)


def test_delone_projection_rank2_equilateral():
    dp = project_delone_simplex(2)
    assert len(dp.distance_classes()) == 1
    assert len(dp.points) == 3
    with pytest.raises(ValueError):
        project_delone_simplex(1)
