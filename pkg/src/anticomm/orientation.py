"""Orientations: group homomorphisms ``sigma: G -> U(R)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from .groups import ElementSet, Group, closure, derived_subgroup
from .involutions import GroupInvolution
from .rings import FiniteRing


class NotAnOrientation(ValueError):
    pass


@dataclass(frozen=True)
class Orientation:
    values: tuple[int, ...]
    group: Group = field(repr=False, compare=False)
    ring: FiniteRing = field(repr=False, compare=False)

    def __call__(self, x: int) -> int:
        return self.values[x]

    @cached_property
    def kernel(self) -> ElementSet:
        return ElementSet.of(self.group, (x for x, v in enumerate(self.values) if v == self.ring.one))

    @cached_property
    def subgroup_C(self) -> ElementSet:
        pm = {self.ring.one, self.ring.minus_one}
        return ElementSet.of(self.group, (x for x, v in enumerate(self.values) if v in pm))

    @property
    def is_trivial(self) -> bool:
        return all(v == self.ring.one for v in self.values)

    def describe(self) -> str:
        return "[" + ",".join(self.ring.labels[v] for v in self.values) + "]"


def make_orientation(G: Group, R: FiniteRing, values: Sequence[int], allow_trivial: bool = False) -> Orientation:
    """Validate per-element unit values as a homomorphism."""
    vals = tuple(int(v) for v in values)
    if len(vals) != G.order:
        raise NotAnOrientation("need one value per group element")
    for x, v in enumerate(vals):
        if v not in R.unit_set:
            raise NotAnOrientation(f"sigma({G.names[x]}) = {R.labels[v]} is not a unit")
    for x in G.elements:
        for y in G.elements:
            if vals[G.mul(x, y)] != R.mul[vals[x]][vals[y]]:
                raise NotAnOrientation(f"homomorphism law fails at ({G.names[x]}, {G.names[y]})")
    sigma = Orientation(vals, G, R)
    if sigma.is_trivial and not allow_trivial:
        raise NotAnOrientation("sigma is trivial")
    return sigma


def sigma_of(sigma: Orientation, x: int) -> int:
    return sigma.values[x]


def _abelianization_generators(G: Group) -> tuple[frozenset[int], list[int], list[int]]:
    """Derived subgroup, coset generators of ``G/G'`` and their orders there."""
    D = frozenset(derived_subgroup(G))
    gens: list[int] = []
    span = D
    # prefer elements whose coset has large order, ties by index
    def coset_order(x: int) -> int:
        k, y = 1, x
        while y not in D:
            y = G.mul(y, x)
            k += 1
        return k

    cands = sorted(G.elements, key=lambda x: (-coset_order(x), x))
    for c in cands:
        if len(span) == G.order:
            break
        if c not in span:
            gens.append(c)
            span = closure(G, list(D) + gens)
    return D, gens, [coset_order(g) for g in gens]


def enumerate_orientations(G: Group, R: FiniteRing, include_trivial: bool = False) -> list[Orientation]:
    """Every homomorphism ``G -> U(R)`` (nontrivial unless asked), sorted by value list.

    ``U(R)`` is abelian, so ``sigma`` is 1 on ``G'`` and is fixed by the images
    of generators of ``G/G'``; each image must have order dividing the
    generator's order in ``G/G'``.
    """
    D, gens, gorders = _abelianization_generators(G)
    unit_list = sorted(R.unit_set)
    choices = [[u for u in unit_list if gorder % R.mult_order(u) == 0] for gorder in gorders]
    t = G.table
    out = []
    for imgs in product(*choices):
        vals: dict[int, int] = {d: R.one for d in D}
        frontier = list(D)
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, u in zip(gens, imgs):
                    y = t[x][g]
                    v = R.mul[vals[x]][u]
                    old = vals.get(y)
                    if old is None:
                        vals[y] = v
                        nxt.append(y)
                    elif old != v:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok or len(vals) != G.order:
            continue
        values = tuple(vals[x] for x in G.elements)
        if not include_trivial and all(v == R.one for v in values):
            continue
        # final guard: full homomorphism law
        if all(values[t[x][y]] == R.mul[values[x]][values[y]] for x in G.elements for y in G.elements):
            out.append(Orientation(values, G, R))
    out.sort(key=lambda s: s.values)
    return out


def is_compatible(tau: GroupInvolution, sigma: Orientation) -> bool:
    """``x tau(x)`` lies in ``ker sigma`` for every ``x``."""
    G = sigma.group
    one = sigma.ring.one
    return all(sigma.values[G.mul(x, tau.map[x])] == one for x in G.elements)
