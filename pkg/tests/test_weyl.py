import itertools
import random
from fractions import Fraction

import pytest

from weyltile.lattice import LatticeVector, fundamental_weight, inner_product, k_vector
from weyltile.permutohedron import vertex_vector, word_of_vertex
from weyltile.weyl import (
    GroupElement,
    SubgroupSpec,
    act,
    conjugate,
    coset_count,
    coxeter_element,
    dynkin_flip,
    generate,
    group_order,
    orbit,
    reflection,
    stabilizer,
    subgroup_elements,
    weyl_generators,
    weyl_orbit,
    word,
)

F = Fraction


def _random_vector(rng, n):
    return LatticeVector([F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n + 1)])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coxeter_presentation(n):
    e = GroupElement.identity(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            m = 1 if i == j else (3 if abs(i - j) == 1 else 2)
            assert (reflection(n, i) * reflection(n, j)) ** m == e
            if m > 1:
                assert not ((reflection(n, i) * reflection(n, j)) ** (m - 1)).is_identity()


@pytest.mark.parametrize("n", [2, 3])
def test_group_axioms_exhaustive(n):
    elems = generate(weyl_generators(n, include_flip=True), n)
    assert len(elems) == group_order(n, True) == 2 * len(generate(weyl_generators(n), n))
    e = GroupElement.identity(n)
    for a in elems:
        assert a * a.inverse() == e == a.inverse() * a
    for a, b, c in itertools.product(elems[:12], repeat=3):
        assert (a * b) * c == a * (b * c)


def test_composition_is_action_composition():
    rng = random.Random(5)
    elems = generate(weyl_generators(4, include_flip=True), 4)
    for _ in range(100):
        g, h = rng.choice(elems), rng.choice(elems)
        v = _random_vector(rng, 4)
        assert (g * h)(v) == g(h(v))


def test_action_preserves_inner_products():
    rng = random.Random(11)
    elems = generate(weyl_generators(4, include_flip=True), 4)
    for _ in range(100):
        g = rng.choice(elems)
        u, v = _random_vector(rng, 4), _random_vector(rng, 4)
        assert inner_product(g(u), g(v)) == inner_product(u, v)


def test_reflection_swaps_k():
    assert act(reflection(4, 1), k_vector(4, 1)) == k_vector(4, 2)
    with pytest.raises(IndexError):
        reflection(4, 5)
    with pytest.raises(ValueError):
        act(reflection(3, 1), k_vector(4, 1))


def test_flip():
    g = dynkin_flip(4)
    assert (g * g).is_identity()
    assert g(k_vector(4, 1)) == -k_vector(4, 5)
    assert g(k_vector(4, 3)) == -k_vector(4, 3)
    assert g(fundamental_weight(4, 1)) == fundamental_weight(4, 4)


def test_word_on_vertex_54321():
    a = word(4, "r1r2r3")
    images = []
    w = (5, 4, 3, 2, 1)
    for _ in range(4):
        w = word_of_vertex(a(vertex_vector(w)))
        images.append(w)
    # the first four digits cycle, the trailing 1 stays
    assert all(x[4] == 1 for x in images)
    assert images[-1] == (5, 4, 3, 2, 1)
    assert len(set(images)) == 4
    assert {x[:4] for x in images} == {(5, 4, 3, 2), (2, 5, 4, 3), (3, 2, 5, 4), (4, 3, 2, 5)}


def test_word_parsing():
    assert word(4, "r_1 r_2") == reflection(4, 1) * reflection(4, 2)
    assert word(4, "gamma r1") == dynkin_flip(4) * reflection(4, 1)
    assert word(4, "").is_identity()
    with pytest.raises(ValueError):
        word(4, "r1x")


def test_coxeter_element_order():
    for n in range(1, 7):
        c = coxeter_element(n)
        assert (c ** (n + 1)).is_identity()
        assert all(not (c ** k).is_identity() for k in range(1, n + 1))
    c = coxeter_element(4)
    assert c(k_vector(4, 1)) == k_vector(4, 2)
    assert c(k_vector(4, 5)) == k_vector(4, 1)


def test_orbits():
    assert len(weyl_orbit(fundamental_weight(4, 1))) == 5
    assert set(weyl_orbit(fundamental_weight(4, 1))) == {k_vector(4, j) for j in range(1, 6)}
    w3, w4 = fundamental_weight(4, 3), fundamental_weight(4, 4)
    assert len(weyl_orbit((w3 * 2 + w4) / 5)) == 20
    assert len(weyl_orbit(w3 / 2)) == 10
    o = weyl_orbit(w3 / 2)
    assert o == sorted(o)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbit_stabilizer(n):
    rng = random.Random(n)
    elems = generate(weyl_generators(n), n)
    candidates = [fundamental_weight(n, 1), fundamental_weight(n, n) / 2, _random_vector(rng, n),
                  LatticeVector([1] + [0] * n) + LatticeVector([0, 1] + [0] * (n - 1))]
    for v in candidates:
        assert len(weyl_orbit(v)) * len(stabilizer(elems, v)) == group_order(n)


def test_subgroups_and_cosets():
    assert len(subgroup_elements(SubgroupSpec(4, (1, 2, 3)))) == 24
    assert len(subgroup_elements(SubgroupSpec(4, (2, 3, 4)))) == 24
    assert len(subgroup_elements(SubgroupSpec(4, (1, 2, 4)))) == 12
    assert len(subgroup_elements(SubgroupSpec(4, (1, 3, 4)))) == 12
    spec = SubgroupSpec(4, (1, 4))
    assert len(subgroup_elements(spec)) == 4
    assert coset_count(spec) == 30
    assert coset_count(SubgroupSpec(4, (1, 4), include_flip=True)) == 30
    with pytest.raises(IndexError):
        SubgroupSpec(4, (5,))


def test_flip_conjugates_parabolic_subgroups():
    g = dynkin_flip(4)
    left = subgroup_elements(SubgroupSpec(4, (1, 2, 3)))
    right = subgroup_elements(SubgroupSpec(4, (2, 3, 4)))
    assert sorted(conjugate(g, h) for h in left) == right


def test_generic_orbit_helper():
    gens = [reflection(3, 1)]
    assert orbit(gens, k_vector(3, 1)) == sorted([k_vector(3, 1), k_vector(3, 2)])
