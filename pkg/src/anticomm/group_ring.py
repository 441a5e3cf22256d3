"""Arithmetic in the group ring RG and the oriented involution ``sigma*``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .groups import ElementSet, Group
from .involutions import GroupInvolution
from .orientation import Orientation
from .rings import FiniteRing, annihilator


class MismatchedAmbient(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElement:
    """``sum_x coeffs[x] * x`` with ``coeffs`` indexed by group element."""

    coeffs: tuple[int, ...]
    group: Group = field(repr=False, compare=False)
    ring: FiniteRing = field(repr=False, compare=False)

    @classmethod
    def zero(cls, G: Group, R: FiniteRing) -> GroupRingElement:
        return cls((R.zero,) * G.order, G, R)

    @classmethod
    def basis(cls, G: Group, R: FiniteRing, x: int, coeff: int | None = None) -> GroupRingElement:
        c = [R.zero] * G.order
        c[x] = R.one if coeff is None else coeff
        return cls(tuple(c), G, R)

    @classmethod
    def from_terms(cls, G: Group, R: FiniteRing, terms: Iterable[tuple[int, int]]) -> GroupRingElement:
        """Build from ``(coeff, group element)`` pairs, summing repeats."""
        c = [R.zero] * G.order
        for coeff, x in terms:
            c[x] = R.add[c[x]][coeff]
        return cls(tuple(c), G, R)

    def support(self) -> Iterator[tuple[int, int]]:
        z = self.ring.zero
        for x, c in enumerate(self.coeffs):
            if c != z:
                yield x, c

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(c == z for c in self.coeffs)

    def _check(self, other: GroupRingElement) -> None:
        if other.group is not self.group or other.ring is not self.ring:
            raise MismatchedAmbient(f"{self.group.name}/{self.ring.name} vs {other.group.name}/{other.ring.name}")

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check(other)
        A = self.ring.add
        return GroupRingElement(tuple(A[a][b] for a, b in zip(self.coeffs, other.coeffs)), self.group, self.ring)

    def __neg__(self) -> GroupRingElement:
        n = self.ring.neg
        return GroupRingElement(tuple(n[a] for a in self.coeffs), self.group, self.ring)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def scale(self, r: int) -> GroupRingElement:
        M = self.ring.mul
        return GroupRingElement(tuple(M[r][a] for a in self.coeffs), self.group, self.ring)

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return multiply(self, other)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        R, G = self.ring, self.group
        terms = []
        for x, c in self.support():
            if c == R.one:
                terms.append(G.names[x])
            else:
                terms.append(f"{R.labels[c]}*{G.names[x]}")
        return " + ".join(terms) if terms else "0"


def multiply(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """Convolution: ``(ab)_z = sum_{xy = z} a_x b_y``."""
    a._check(b)
    R, G = a.ring, a.group
    A, M, t = R.add, R.mul, G.table
    out = [R.zero] * G.order
    sb = list(b.support())
    for x, ca in a.support():
        row, mrow = t[x], M[ca]
        for y, cb in sb:
            z = row[y]
            out[z] = A[out[z]][mrow[cb]]
    return GroupRingElement(tuple(out), G, R)


def jordan(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """``a o b = ab + ba``."""
    return multiply(a, b) + multiply(b, a)


def lie(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """``[a, b] = ab - ba``."""
    return multiply(a, b) - multiply(b, a)


def sigma_star(a: GroupRingElement, tau: GroupInvolution, sigma: Orientation) -> GroupRingElement:
    """``(sum a_x x)^{sigma*} = sum sigma(x) a_x tau(x)``."""
    if tau.ambient is not a.group or sigma.group is not a.group or sigma.ring is not a.ring:
        raise MismatchedAmbient("involution/orientation do not belong to this group ring")
    R = a.ring
    out = [R.zero] * a.group.order
    for x, c in a.support():
        tx = tau.map[x]
        out[tx] = R.add[out[tx]][R.mul[sigma.values[x]][c]]
    return GroupRingElement(tuple(out), a.group, R)


def is_symmetric(a: GroupRingElement, tau: GroupInvolution, sigma: Orientation) -> bool:
    return sigma_star(a, tau, sigma) == a


@dataclass(frozen=True)
class SymmetricGenerators:
    """Generating family of the span used in the anticommutativity question.

    ``s1_doubled`` holds ``2x`` for ``x`` in ``N_*``; ``s2`` holds ``a x`` for
    ``x`` in ``G_* \\ N`` with ``a`` running over generators of the annihilator
    of ``1 - sigma(x)``; ``s3`` holds one ``x + sigma(x) x*`` per orbit
    ``{x, x*}`` of size two (the smaller index is the representative).
    """

    s1_doubled: tuple[GroupRingElement, ...]
    s2: tuple[GroupRingElement, ...]
    s3: tuple[GroupRingElement, ...]
    n_star: ElementSet
    g_star: ElementSet
    # undoubled N_* basis elements; only used by the spanning-set oracle
    s1: tuple[GroupRingElement, ...] = ()

    @property
    def all(self) -> tuple[GroupRingElement, ...]:
        return self.s1_doubled + self.s2 + self.s3

    def labelled(self) -> list[tuple[str, GroupRingElement]]:
        return (
            [("2S1", g) for g in self.s1_doubled]
            + [("S2", g) for g in self.s2]
            + [("S3", g) for g in self.s3]
        )


def symmetric_generators(
    G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing | None = None
) -> SymmetricGenerators:
    R = sigma.ring if R is None else R
    if R is not sigma.ring:
        raise MismatchedAmbient("ring differs from the orientation's ring")
    N = sigma.kernel
    g_star = tau.fixed
    n_star = ElementSet.of(G, (x for x in g_star if x in N))
    two = R.two

    s1 = tuple(GroupRingElement.basis(G, R, x) for x in n_star)
    s1_doubled = tuple(
        GroupRingElement.basis(G, R, x, two) for x in n_star if two != R.zero
    )
    s2 = []
    for x in sorted(g_star):
        if x in N:
            continue
        v = R.minus(R.one, sigma.values[x])
        for alpha in annihilator(R, v).generators:
            if alpha != R.zero:
                s2.append(GroupRingElement.basis(G, R, x, alpha))
    s3 = []
    for x in G.elements:
        tx = tau.map[x]
        if tx != x and x < tx:
            s3.append(GroupRingElement.from_terms(G, R, [(R.one, x), (sigma.values[x], tx)]))
    return SymmetricGenerators(
        s1_doubled, tuple(s2), tuple(s3), n_star, ElementSet.of(G, g_star), s1
    )
