"""The Coxeter-Weyl group W(a_n) ~ S_{n+1}, extended by the Dynkin flip.

A :class:`GroupElement` is a permutation of the k-indices, optionally
preceded by the diagram symmetry gamma: ``v -> -(index reversal of v)``.
Elements act on :class:`~weyltile.lattice.LatticeVector` coefficient vectors.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .lattice import LatticeVector


@dataclass(frozen=True, order=True)
class GroupElement:
    """``x -> P(Gamma^flip(x))`` where P sends k_j to k_{perm[j-1]}.

    ``perm`` is stored 1-based: ``perm[j-1]`` is the image of index j.
    """

    perm: tuple[int, ...]
    flip: bool = False

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    @property
    def n(self) -> int:
        return len(self.perm) - 1

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(tuple(range(1, n + 2)))

    def __mul__(self, other: GroupElement) -> GroupElement:
        """Composition; ``(g * h)(v) == g(h(v))``."""
        if other.n != self.n:
            raise ValueError("rank mismatch")
        m = self.n + 1
        p2 = other.perm
        if self.flip:
            # Gamma P Gamma^-1 is conjugation of P by index reversal
            p2 = tuple(m + 1 - other.perm[m - j] for j in range(1, m + 1))
        perm = tuple(self.perm[p2[j] - 1] for j in range(m))
        return GroupElement(perm, self.flip ^ other.flip)

    def inverse(self) -> GroupElement:
        m = self.n + 1
        inv = [0] * m
        for j, pj in enumerate(self.perm, start=1):
            inv[pj - 1] = j
        g = GroupElement(tuple(inv))
        if self.flip:
            return dynkin_flip(self.n) * g
        return g

    def __pow__(self, k: int) -> GroupElement:
        g = GroupElement.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            g = g * base
        return g

    def is_identity(self) -> bool:
        return not self.flip and self.perm == tuple(range(1, self.n + 2))

    def __call__(self, v: LatticeVector) -> LatticeVector:
        return act(self, v)

    def __repr__(self):
        body = "".join(str(p) for p in self.perm) if self.n < 9 else ",".join(map(str, self.perm))
        return f"GroupElement({body}{', gamma' if self.flip else ''})"


@dataclass(frozen=True)
class SubgroupSpec:
    """Subgroup generated by the reflections r_i, i in ``generators``, plus gamma if requested."""

    n: int
    generators: tuple[int, ...]
    include_flip: bool = False

    def __post_init__(self):
        for i in self.generators:
            if not 1 <= i <= self.n:
                raise IndexError(f"reflection index {i} out of range 1..{self.n}")


def reflection(n: int, i: int) -> GroupElement:
    """r_i: swaps k_i and k_{i+1}."""
    if not 1 <= i <= n:
        raise IndexError(f"reflection index {i} out of range 1..{n}")
    p = list(range(1, n + 2))
    p[i - 1], p[i] = p[i], p[i - 1]
    return GroupElement(tuple(p))


def dynkin_flip(n: int) -> GroupElement:
    return GroupElement(tuple(range(1, n + 2)), True)


def coxeter_element(n: int) -> GroupElement:
    """c = r_1 r_2 ... r_n, the cyclic shift k_j -> k_{j+1}."""
    return word(n, "".join(f"r{i}" for i in range(1, n + 1)))


_TOKEN = re.compile(r"\s*(?:r_?(\d+)|(gamma|γ|g))\s*")


def word(n: int, text: str) -> GroupElement:
    """Parse a product such as ``"r1 r2 r3"`` or ``"r_1r_2 gamma"``.

    The rightmost factor acts first, so ``word(n, "r1r2r3")(v) == r1(r2(r3(v)))``.
    """
    g = GroupElement.identity(n)
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse group word {text!r} at position {pos}")
        g = g * (reflection(n, int(m.group(1))) if m.group(1) else dynkin_flip(n))
        pos = m.end()
    return g


def act(g: GroupElement, v: LatticeVector) -> LatticeVector:
    if g.n != v.n:
        raise ValueError(f"rank mismatch: element of rank {g.n}, vector of rank {v.n}")
    c = v.coeffs
    if g.flip:
        c = tuple(-x for x in reversed(c))
    out = [None] * len(c)
    for j, pj in enumerate(g.perm):
        out[pj - 1] = c[j]
    return LatticeVector(out)


def generate(generators: Iterable[GroupElement], n: int | None = None) -> list[GroupElement]:
    """All elements of the group generated by ``generators``, sorted."""
    gens = list(generators)
    if n is None:
        if not gens:
            raise ValueError("need the rank when no generators are given")
        n = gens[0].n
    e = GroupElement.identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def _spec_generators(spec: SubgroupSpec) -> list[GroupElement]:
    gens = [reflection(spec.n, i) for i in spec.generators]
    if spec.include_flip:
        gens.append(dynkin_flip(spec.n))
    return gens


def subgroup_elements(spec: SubgroupSpec) -> list[GroupElement]:
    return generate(_spec_generators(spec), spec.n)


def group_order(n: int, include_flip: bool = False) -> int:
    return factorial(n + 1) * (2 if include_flip else 1)


def coset_count(spec: SubgroupSpec) -> int:
    """Index of the subgroup in W(a_n), or in W(a_n):C_2 when the spec includes gamma."""
    return group_order(spec.n, spec.include_flip) // len(subgroup_elements(spec))


def weyl_generators(n: int, include_flip: bool = False) -> list[GroupElement]:
    return _spec_generators(SubgroupSpec(n, tuple(range(1, n + 1)), include_flip))


def orbit(generators: Sequence[GroupElement], v: LatticeVector) -> list[LatticeVector]:
    """Closure of ``{v}`` under the generators, sorted by canonical coefficients."""
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = act(s, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def weyl_orbit(v: LatticeVector, include_flip: bool = False) -> list[LatticeVector]:
    return orbit(weyl_generators(v.n, include_flip), v)


def stabilizer(elements: Iterable[GroupElement], v: LatticeVector) -> list[GroupElement]:
    return [g for g in elements if act(g, v) == v]


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^-1."""
    return g * h * g.inverse()
