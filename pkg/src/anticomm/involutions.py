"""Group involutions: anti-automorphisms ``tau`` with ``tau^2 = id``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Sequence

from .groups import ElementSet, Group, generating_set


class NotAnInvolution(ValueError):
    pass


@dataclass(frozen=True)
class GroupInvolution:
    map: tuple[int, ...]
    ambient: Group = field(repr=False, compare=False)

    @cached_property
    def is_identity(self) -> bool:
        return all(i == m for i, m in enumerate(self.map))

    @cached_property
    def is_inversion(self) -> bool:
        return self.map == self.ambient.inverses

    def __call__(self, x: int) -> int:
        return self.map[x]

    @cached_property
    def fixed(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.map) if x == y)

    def describe(self) -> str:
        if self.is_identity:
            return "Id"
        if self.is_inversion:
            return "inversion"
        return "[" + ",".join(str(m) for m in self.map) + "]"


def is_involution(G: Group, tau: Sequence[int]) -> bool:
    """True iff ``tau`` is an anti-automorphism of ``G`` of order at most 2."""
    t = G.table
    n = G.order
    if len(tau) != n or sorted(tau) != list(range(n)):
        return False
    for x in range(n):
        if tau[tau[x]] != x:
            return False
    for x in range(n):
        tx = tau[x]
        row = t[x]
        for y in range(n):
            if tau[row[y]] != t[tau[y]][tx]:
                return False
    return True


def make_involution(G: Group, tau: Sequence[int]) -> GroupInvolution:
    tau = tuple(int(v) for v in tau)
    if not is_involution(G, tau):
        raise NotAnInvolution(f"{list(tau)} is not an involution of {G.name}")
    return GroupInvolution(tau, G)


def identity_involution(G: Group) -> GroupInvolution:
    return make_involution(G, range(G.order))


def inversion(G: Group) -> GroupInvolution:
    return GroupInvolution(G.inverses, G)


def enumerate_involutions(G: Group) -> list[GroupInvolution]:
    """All involutions of ``G``, sorted by image list.

    Images of a greedy generating set are chosen by backtracking; each partial
    choice is extended over the subgroup it generates via
    ``tau(x g) = tau(g) tau(x)`` and pruned on the first clash.
    """
    gens = generating_set(G)
    orders = G.element_orders
    t = G.table
    found: list[tuple[int, ...]] = []

    def extend(partial: dict[int, int], used_gens: list[int]) -> dict[int, int] | None:
        # BFS from identity through the assigned generators
        images = {G.identity: G.identity}
        frontier = [G.identity]
        while frontier:
            nxt = []
            for x in frontier:
                tx = images[x]
                for g in used_gens:
                    y = t[x][g]
                    ty = t[partial[g]][tx]
                    old = images.get(y)
                    if old is None:
                        images[y] = ty
                        nxt.append(y)
                    elif old != ty:
                        return None
            frontier = nxt
        if len(set(images.values())) != len(images):
            return None
        # tau must agree with already-known images wherever both are defined
        for x, tx in images.items():
            back = images.get(tx)
            if back is not None and back != x:
                return None
        return images

    def rec(k: int, partial: dict[int, int]) -> None:
        if k == len(gens):
            images = extend(partial, gens)
            if images is not None and len(images) == G.order:
                cand = tuple(images[x] for x in range(G.order))
                if is_involution(G, cand):
                    found.append(cand)
            return
        g = gens[k]
        for img in range(G.order):
            if orders[img] != orders[g]:
                continue
            partial[g] = img
            if extend(partial, gens[: k + 1]) is not None:
                rec(k + 1, partial)
            del partial[g]

    if G.order == 1:
        found.append((0,))
    else:
        rec(0, {})
    return [GroupInvolution(m, G) for m in sorted(set(found))]


def brute_force_involutions(G: Group) -> list[GroupInvolution]:
    """Filter every permutation of the elements through :func:`is_involution`.

    Test oracle only; factorial cost.
    """
    return [GroupInvolution(p, G) for p in permutations(range(G.order)) if is_involution(G, p)]


def symmetric_set(G: Group, tau: GroupInvolution) -> ElementSet:
    """``G_* = {x : tau(x) = x}``."""
    return ElementSet.of(G, tau.fixed)
