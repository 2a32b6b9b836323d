"""The Voronoi cell of A_n*: the permutohedron of order n+1.

Faces are encoded combinatorially as ordered set partitions ``(B_1, ..., B_k)``
of ``{1, ..., n+1}``. A vertex word ``w`` (``w[j-1]`` is the coefficient given
to k_j, a permutation of ``n+1, ..., 1``) lies on the face iff every index in
``B_t`` carries a larger value than every index in ``B_{t+1}``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .lattice import (
    LatticeVector,
    covering_radius2,
    enumerate_weight_lattice,
    fundamental_weight,
    in_weight_lattice,
    k_vector,
    subset_vector,
)
from .weyl import GroupElement, weyl_orbit

VertexWord = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Face:
    """A face of the permutohedron as an ordered set partition of 1..n+1."""

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Sequence[Sequence[int]]):
        bs = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
        if any(not b for b in bs):
            raise ValueError("blocks must be nonempty")
        flat = sorted(x for b in bs for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks do not partition 1..{len(flat)}: {bs}")
        object.__setattr__(self, "blocks", bs)

    @classmethod
    def _trusted(cls, blocks: tuple[tuple[int, ...], ...]) -> Face:
        # enumeration output is already a valid partition with sorted blocks
        f = object.__new__(cls)
        object.__setattr__(f, "blocks", blocks)
        return f

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks) - 1

    @property
    def dimension(self) -> int:
        return self.n + 1 - len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        """Block sizes as a sorted multiset (descending)."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def value_ranges(self) -> list[tuple[int, ...]]:
        """The coefficient values allotted to each block, top block first."""
        top = self.n + 1
        out = []
        for b in self.blocks:
            out.append(tuple(range(top, top - len(b), -1)))
            top -= len(b)
        return out

    def contains_word(self, word: VertexWord) -> bool:
        return all(sorted(word[j - 1] for j in b) == sorted(r)
                   for b, r in zip(self.blocks, self.value_ranges()))

    def refines(self, other: Face) -> bool:
        """True when ``self`` is a face of ``other`` (self's blocks merge into other's)."""
        if self.n != other.n:
            return False
        it = iter(self.blocks)
        for big in other.blocks:
            need = set(big)
            while need:
                b = next(it, None)
                if b is None or not set(b) <= need:
                    return False
                need -= set(b)
        return next(it, None) is None

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


# vertices

def vertex_vector(word: VertexWord) -> LatticeVector:
    """q = (1/(n+1)) sum_j word_j k_j."""
    return LatticeVector(Fraction(w, len(word)) for w in word)


def word_string(word: VertexWord) -> str:
    return "".join(map(str, word)) if len(word) < 10 else ",".join(map(str, word))


def parse_word(text: str) -> VertexWord:
    w = tuple(int(ch) for ch in (text.split(",") if "," in text else text))
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a vertex word: {text!r}")
    return w


def vertex_words(n: int) -> list[VertexWord]:
    return [tuple(p) for p in itertools.permutations(range(n + 1, 0, -1))]


def voronoi_vertices(n: int) -> list[LatticeVector]:
    """The (n+1)! vertices of V(0), sorted."""
    if n < 1:
        raise ValueError("rank must be positive")
    return sorted(vertex_vector(w) for w in vertex_words(n))


def word_of_vertex(v: LatticeVector) -> VertexWord:
    """Inverse of :func:`vertex_vector` for vertices of V(0)."""
    m = v.n + 1
    mean = Fraction(m + 1, 2)
    w = tuple(c * m + mean for c in v.coeffs)
    if any(x.denominator != 1 for x in w) or sorted(w) != list(range(1, m + 1)):
        raise ValueError(f"{v!r} is not a vertex of V(0)")
    return tuple(int(x) for x in w)


# faces

def ordered_set_partitions(items: Sequence[int], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ordered partitions of ``items`` into ``k`` nonempty blocks."""
    items = tuple(items)
    if k == 0:
        if not items:
            yield ()
        return
    if len(items) < k:
        return
    # first block: any nonempty subset leaving enough elements for the rest
    for size in range(1, len(items) - k + 2):
        for first in itertools.combinations(items, size):
            rest = tuple(x for x in items if x not in first)
            for tail in ordered_set_partitions(rest, k - 1):
                yield (first,) + tail


@lru_cache(maxsize=None)
def _faces(n: int, d: int) -> tuple[Face, ...]:
    parts = sorted(ordered_set_partitions(range(1, n + 2), n + 1 - d))
    return tuple(Face._trusted(p) for p in parts)


def faces_of_dimension(n: int, d: int) -> list[Face]:
    if not 0 <= d <= n:
        raise ValueError(f"face dimension {d} out of range 0..{n}")
    return list(_faces(n, d))


def face_count_formula(n: int, d: int) -> int:
    """Number of d-faces: surjections onto k = n+1-d blocks, i.e. k! S(n+1, k)."""
    m, k = n + 1, n + 1 - d
    return sum((-1) ** i * comb(k, i) * (k - i) ** m for i in range(k + 1))


def face_words(f: Face) -> list[VertexWord]:
    """Vertex words on ``f``; for 2-faces in boundary-cycle order."""
    n = f.n
    if f.dimension == 2:
        return _cycle_words(f)
    words = []
    per_block = [list(itertools.permutations(r)) for r in f.value_ranges()]
    for choice in itertools.product(*per_block):
        w = [0] * (n + 1)
        for b, vals in zip(f.blocks, choice):
            for j, val in zip(b, vals):
                w[j - 1] = val
        words.append(tuple(w))
    return sorted(words, reverse=True)


def _cycle_words(f: Face) -> list[VertexWord]:
    # a 2-face is a hexagon (one block of 3) or a square (two blocks of 2);
    # walk it by alternating the two adjacent-value transpositions
    n = f.n
    ranges = f.value_ranges()
    start = [0] * (n + 1)
    for b, r in zip(f.blocks, ranges):
        for j, val in zip(b, r):
            start[j - 1] = val
    swaps = []
    for b, r in zip(f.blocks, ranges):
        if len(b) == 3:
            swaps = [(r[0], r[1]), (r[1], r[2])]
    if not swaps:
        swaps = [tuple(r) for r in ranges if len(r) == 2]
    if len(swaps) != 2:
        raise ValueError(f"{f} is not a 2-face")
    w = tuple(start)
    cyc = [w]
    for step in itertools.count():
        a, b = swaps[step % 2]
        w = tuple(b if x == a else a if x == b else x for x in w)
        if w == cyc[0]:
            break
        cyc.append(w)
    # start at the lexicographically smallest word; walk toward the smaller neighbour
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return cyc


def face_vertices(f: Face) -> list[LatticeVector]:
    """Vertices of ``f`` as lattice vectors; 2-faces come in boundary-cycle order."""
    return [vertex_vector(w) for w in face_words(f)]


def face_center(f: Face) -> LatticeVector:
    """Barycenter of the face: each block gets the mean of its allotted values."""
    m = f.n + 1
    c = [Fraction(0)] * m
    for b, r in zip(f.blocks, f.value_ranges()):
        mean = Fraction(sum(r), len(r))
        for j in b:
            c[j - 1] = mean / m
    return LatticeVector(c)


def face_type(f: Face) -> str:
    """Combinatorial name of a face at n = 4 (other ranks: block-size tag)."""
    names = {
        (1, 1, 1, 1, 1): "vertex",
        (2, 1, 1, 1): "edge",
        (3, 1, 1): "hexagon",
        (2, 2, 1): "square",
        (4, 1): "truncated_octahedron",
        (3, 2): "hexagonal_prism",
        (5,): "cell",
    }
    if f.n == 4:
        return names[f.block_sizes]
    return "x".join(map(str, f.block_sizes))


def face_census(n: int) -> list[dict]:
    """Records ``{dimension, block_sizes, count}`` for every proper face type."""
    rows = []
    for d in range(n):
        counts = Counter(f.block_sizes for f in faces_of_dimension(n, d))
        for sizes in sorted(counts, reverse=True):
            rows.append({"dimension": d, "block_sizes": list(sizes), "count": counts[sizes]})
    return rows


def face_counts(n: int) -> list[int]:
    """N_0, ..., N_{n-1}."""
    return [len(_faces(n, d)) for d in range(n)]


def euler_check(n: int) -> int:
    """Alternating sum of proper face counts of the permutohedron."""
    return sum((-1) ** d * c for d, c in enumerate(face_counts(n)))


def euler_expected(n: int) -> int:
    """Euler characteristic of the boundary (n-1)-sphere: 1 - (-1)^n."""
    return 1 - (-1) ** n


def subfaces(f: Face) -> list[Face]:
    """Faces of dimension ``f.dimension - 1`` contained in ``f``."""
    out = []
    for t, b in enumerate(f.blocks):
        if len(b) < 2:
            continue
        for size in range(1, len(b)):
            for first in itertools.combinations(b, size):
                second = tuple(x for x in b if x not in first)
                out.append(Face(f.blocks[:t] + (first, second) + f.blocks[t + 1:]))
    return sorted(out)


def act_on_face(g: GroupElement, f: Face) -> Face:
    """Image of a face of V(0) under a group element."""
    if g.flip:
        # -reversal turns the order of blocks around, then relabels indices
        m = f.n + 1
        f = Face(tuple(tuple(m + 1 - j for j in b) for b in reversed(f.blocks)))
    return Face(tuple(tuple(g.perm[j - 1] for j in b) for b in f.blocks))


# facet-center orbits at n = 4

def facet_center_orbits(n: int = 4) -> dict[str, list[LatticeVector]]:
    """Labeled center families: each is a union of W(a_4) orbits of closed-form generators."""
    if n != 4:
        raise ValueError("labeled facet-center orbits are defined for n = 4 only")
    w = [None] + [fundamental_weight(4, i) for i in range(1, 5)]
    k = [None] + [k_vector(4, j) for j in range(1, 6)]
    F = Fraction

    def union(*gens):
        out = set()
        for g in gens:
            out.update(weyl_orbit(g))
        return sorted(out)

    return {
        "truncated_octahedron": union(k[1] * F(1, 2), k[1] * F(-1, 2)),
        "hexagon": union((w[3] * 2 + w[4]) * F(1, 5), (w[2] * 2 + w[1]) * F(1, 5), (w[1] + w[4]) * F(2, 5)),
        "hexagonal_prism": union((k[1] + k[2]) * F(1, 2), (k[1] + k[2]) * F(-1, 2)),
        "square": union((w[2] + w[3]) * F(3, 10), (w[2] * 4 + w[4] * 3) * F(1, 10),
                        (w[1] * 3 + w[3] * 4) * F(1, 10)),
    }


def facet_center_orbit_generators(n: int = 4) -> dict[str, list[tuple[str, LatticeVector]]]:
    """The individual orbit generators, labeled the way they are usually written."""
    if n != 4:
        raise ValueError("labeled facet-center orbits are defined for n = 4 only")
    w = [None] + [fundamental_weight(4, i) for i in range(1, 5)]
    k = [None] + [k_vector(4, j) for j in range(1, 6)]
    F = Fraction
    return {
        "truncated_octahedron": [("(1/2)k1", k[1] * F(1, 2)), ("-(1/2)k1", k[1] * F(-1, 2))],
        "hexagon": [("(1/5)(2w3+w4)", (w[3] * 2 + w[4]) * F(1, 5)),
                    ("(1/5)(2w2+w1)", (w[2] * 2 + w[1]) * F(1, 5)),
                    ("(2/5)(w1+w4)", (w[1] + w[4]) * F(2, 5))],
        "hexagonal_prism": [("(1/2)w3", w[3] * F(1, 2)), ("(1/2)w2", w[2] * F(1, 2))],
        "square": [("(3/10)(w2+w3)", (w[2] + w[3]) * F(3, 10)),
                   ("(1/10)(4w2+3w4)", (w[2] * 4 + w[4] * 3) * F(1, 10)),
                   ("(1/10)(3w1+4w3)", (w[1] * 3 + w[3] * 4) * F(1, 10))],
    }


def face_centers_by_type(n: int = 4) -> dict[str, list[LatticeVector]]:
    out: dict[str, set] = {}
    for d in (2, 3):
        for f in faces_of_dimension(n, d):
            out.setdefault(face_type(f), set()).add(face_center(f))
    return {key: sorted(v) for key, v in out.items()}


# Delone complex and Voronoi-Delone duality

@dataclass(frozen=True)
class DeloneSimplex:
    """A Delone cell of A_n*: ``base + {0, g(omega_1), ..., g(omega_n)}``."""

    base: LatticeVector
    vertices: tuple[LatticeVector, ...]

    def center(self) -> LatticeVector:
        total = self.vertices[0]
        for v in self.vertices[1:]:
            total = total + v
        return total / len(self.vertices)


def face_dual_chain(f: Face) -> list[LatticeVector]:
    """Lattice points sharing the face ``f`` of V(0): ``0, e(B_1), e(B_1+B_2), ...``.

    ``e(S)`` is the sum of k_j over S; these are the neighbours across the
    facets ``(B_1..B_t | rest)`` containing ``f``.
    """
    n = f.n
    out = [LatticeVector.zero(n)]
    acc: list[int] = []
    for b in f.blocks[:-1]:
        acc.extend(b)
        out.append(subset_vector(n, acc))
    return out


def delone_simplex_of_word(word: VertexWord, base: LatticeVector | None = None) -> DeloneSimplex:
    """The Delone cell centred at the vertex ``word`` of ``base + V(0)``."""
    n = len(word) - 1
    if base is None:
        base = LatticeVector.zero(n)
    order = sorted(range(1, n + 2), key=lambda j: -word[j - 1])
    f = Face([(j,) for j in order])
    return DeloneSimplex(base, tuple(base + p for p in face_dual_chain(f)))


def delone_simplices_at(n: int, q: LatticeVector) -> list[DeloneSimplex]:
    """The (n+1)! Delone simplices having the lattice point ``q`` as a vertex."""
    if q.n != n or not in_weight_lattice(q):
        raise ValueError("q must be a point of A_n*")
    return [delone_simplex_of_word(w, q) for w in vertex_words(n)]


def fundamental_simplex(n: int) -> list[LatticeVector]:
    return [LatticeVector.zero(n)] + [fundamental_weight(n, i) for i in range(1, n + 1)]


def dual_search_radius2(n: int) -> Fraction:
    """Squared radius 4 rho^2 around t within which every dual point must lie."""
    return 4 * covering_radius2(n)


def voronoi_face_dual(n: int, t: LatticeVector, f: Face) -> list[LatticeVector]:
    """Lattice points ``s`` with every vertex of ``t + f`` equidistant from ``s`` and ``t``.

    Brute-force search over the ball of squared radius ``4 rho^2`` about ``t``.
    """
    if f.dimension != 2:
        raise ValueError(f"{f} is not a 2-face")
    if f.n != n or t.n != n:
        raise ValueError("rank mismatch")
    verts = face_vertices(f)  # relative to t
    out = []
    for s in enumerate_weight_lattice(n, dual_search_radius2(n)):
        if all((v - s).norm2() == v.norm2() for v in verts):
            out.append(t + s)
    return sorted(out)


def face_from_dual(points: Sequence[LatticeVector], base: LatticeVector) -> Face:
    """Recover the face of ``base + V(0)`` whose dual is the chain ``points``.

    ``points`` must be a dual chain containing ``base``.
    """
    n = base.n
    rel = [p - base for p in points]
    subsets = []
    for r in rel:
        # r = e(S) - (|S|/(n+1)) * ones in canonical form; the entries are
        # 1 - |S|/(n+1) on S and -|S|/(n+1) off it
        vals = sorted(set(r.coeffs))
        if len(vals) == 1:
            subsets.append(frozenset())
            continue
        if len(vals) != 2 or vals[1] - vals[0] != 1:
            raise ValueError(f"{r!r} is not a subset vector")
        subsets.append(frozenset(j for j, c in enumerate(r.coeffs, start=1) if c == vals[1]))
    subsets.sort(key=len)
    if subsets[0]:
        raise ValueError("dual chain does not contain the base point")
    blocks = []
    for small, big in zip(subsets, subsets[1:]):
        if not small < big:
            raise ValueError("dual points do not form a chain")
        blocks.append(tuple(sorted(big - small)))
    rest = set(range(1, n + 2)) - set(subsets[-1])
    blocks.append(tuple(sorted(rest)))
    return Face(blocks)
