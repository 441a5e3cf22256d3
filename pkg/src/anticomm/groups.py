"""Finite groups given by Cayley tables.

Elements are dense indices ``0..order-1``; ``table[i][j]`` is the index of
``g_i * g_j``.  The identity is located by scanning, so user tables need not
put it at index 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence


class NotAGroup(ValueError):
    """Raised when a table fails one of the group axioms."""

    def __init__(self, reason: str, where: tuple[int, ...] = (), detail: str = ""):
        self.reason = reason
        self.where = where
        msg = reason if not where else f"{reason} at {where}"
        if detail:
            msg = f"{msg}: {detail}"
        super().__init__(msg)


@dataclass(frozen=True, eq=False)
class Group:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    names: tuple[str, ...]
    name: str = "G"

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(row.index(e) for row in self.table)

    def inv(self, x: int) -> int:
        return self.inverses[x]

    @property
    def elements(self) -> range:
        return range(self.order)

    def prod(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv(x), -k
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for x in self.elements:
            k, y = 1, x
            while y != self.identity:
                y = self.table[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in self.elements for j in range(i))

    def commutes(self, x: int, y: int) -> bool:
        return self.table[x][y] == self.table[y][x]

    def label(self, x: int) -> str:
        return self.names[x]

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table], "names": list(self.names)}


@dataclass(frozen=True)
class ElementSet:
    """A set of element indices of one group, stored sorted."""

    members: tuple[int, ...]
    ambient: Group = field(repr=False, compare=False)

    @classmethod
    def of(cls, G: Group, xs: Iterable[int]) -> ElementSet:
        return cls(tuple(sorted(set(xs))), G)

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.members)

    def as_set(self) -> frozenset[int]:
        return self._set

    def is_subgroup(self) -> bool:
        G = self.ambient
        s = self._set
        if G.identity not in s:
            return False
        return all(G.mul(a, b) in s for a in s for b in s) and all(G.inv(a) in s for a in s)

    def is_normal(self) -> bool:
        G = self.ambient
        return self.is_subgroup() and all(conjugate(G, x, g) in self._set for x in self._set for g in G.elements)


def build_group_from_table(
    order: int,
    table: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
    name: str = "G",
) -> Group:
    """Validate a Cayley table and wrap it as a :class:`Group`.

    Checks run in the order latin square, identity, inverses, associativity;
    the first failure raises :class:`NotAGroup` carrying the offending indices.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if len(table) != order or any(len(row) != order for row in table):
        raise ValueError(f"table must be {order}x{order}")
    t = tuple(tuple(int(v) for v in row) for row in table)
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not 0 <= v < order:
                raise ValueError(f"entry {v} at ({i}, {j}) out of range")

    full = set(range(order))
    for i, row in enumerate(t):
        if set(row) != full:
            j = _first_repeat(row)
            raise NotAGroup("not-latin-square", (i, j), "repeated entry in row")
    for j in range(order):
        col = [t[i][j] for i in range(order)]
        if set(col) != full:
            raise NotAGroup("not-latin-square", (_first_repeat(col), j), "repeated entry in column")

    identity = next(
        (e for e in range(order) if all(t[e][i] == i and t[i][e] == i for i in range(order))),
        None,
    )
    if identity is None:
        raise NotAGroup("no-identity")
    for i in range(order):
        if not any(t[i][j] == identity and t[j][i] == identity for j in range(order)):
            raise NotAGroup("no-inverse", (i,))

    for i in range(order):
        ti = t[i]
        for j in range(order):
            tij = t[ti[j]]
            tj = t[j]
            for k in range(order):
                if tij[k] != ti[tj[k]]:
                    raise NotAGroup("not-associative", (i, j, k))

    if names is None:
        names = [f"g{i}" for i in range(order)]
    elif len(names) != order:
        raise ValueError("names must have one label per element")
    return Group(order, t, identity, tuple(str(n) for n in names), name)


def _first_repeat(seq: Sequence[int]) -> int:
    seen: set[int] = set()
    for idx, v in enumerate(seq):
        if v in seen:
            return idx
        seen.add(v)
    return -1


def load_group_file(path: str | Path) -> Group:
    """Read ``{"order": n, "table": [[...]], "names": [...]}`` from JSON."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise OSError(f"{path}: {exc}") from exc
    return build_group_from_table(data["order"], data["table"], data.get("names"), name=data.get("name", path.stem))


def commutator(G: Group, x: int, y: int) -> int:
    """``(x, y) = x^-1 y^-1 x y``."""
    t = G.table
    return t[t[t[G.inv(x)][G.inv(y)]][x]][y]


def conjugate(G: Group, x: int, y: int) -> int:
    """``x^y = y^-1 x y``."""
    t = G.table
    return t[t[G.inv(y)][x]][y]


def closure(G: Group, gens: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by ``gens`` (fixed point of right multiplication)."""
    gens = list(gens)
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def commutator_set(G: Group) -> frozenset[int]:
    return frozenset(commutator(G, x, y) for x in G.elements for y in G.elements)


def derived_subgroup(G: Group) -> ElementSet:
    return ElementSet.of(G, closure(G, commutator_set(G)))


def center(G: Group) -> ElementSet:
    t = G.table
    return ElementSet.of(G, (z for z in G.elements if all(t[z][g] == t[g][z] for g in G.elements)))


def generating_set(G: Group, within: Iterable[int] | None = None) -> list[int]:
    """Greedy small generating set: repeatedly add the element of largest
    order not yet covered (ties by index)."""
    target = frozenset(G.elements) if within is None else frozenset(within)
    cands = sorted(target, key=lambda x: (-G.element_orders[x], x))
    gens: list[int] = []
    span = frozenset({G.identity})
    for c in cands:
        if span == target:
            break
        if c not in span:
            gens.append(c)
            span = closure(G, gens)
    return gens


def subgroup_from(G: Group, members: Iterable[int], name: str = "H") -> tuple[Group, list[int]]:
    """Re-index a subgroup as a standalone group; returns it with the
    embedding list ``emb[i] = ambient index``."""
    emb = sorted(set(members))
    pos = {g: i for i, g in enumerate(emb)}
    table = [[pos[G.mul(a, b)] for b in emb] for a in emb]
    return build_group_from_table(len(emb), table, [G.names[g] for g in emb], name=name), emb


def relabel(G: Group, perm: Sequence[int]) -> Group:
    """Copy of ``G`` with element ``i`` renamed to ``perm[i]``."""
    n = G.order
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    table = [[perm[G.mul(inv[a], inv[b])] for b in range(n)] for a in range(n)]
    names = [G.names[inv[a]] for a in range(n)]
    return build_group_from_table(n, table, names, name=G.name)
