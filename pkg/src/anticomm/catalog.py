"""Built-in catalog of small groups.

Every group of order at most 16 is listed, up to isomorphism (42 groups,
plus the trivial group behind a flag).  Each is realized concretely
(residues, metacyclic normal forms ``a^i b^j``, quaternions, permutations,
Gaussian-integer matrices), closed under its generators, and then pushed
through :func:`build_group_from_table` so the axioms are re-checked at load.

Element 0 is always the identity and element names are shortest words in
the named generators, e.g. ``r^3*s``.  Dihedral groups follow the
``D_n`` = order ``2n`` convention: ``D4`` has order 8 and ``D8`` order 16.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .groups import Group, build_group_from_table

Mul = Callable[[Hashable, Hashable], Hashable]


def _word_name(word: list[str]) -> str:
    if not word:
        return "e"
    parts: list[str] = []
    prev, count = word[0], 1
    for g in word[1:]:
        if g == prev:
            count += 1
        else:
            parts.append(prev if count == 1 else f"{prev}^{count}")
            prev, count = g, 1
    parts.append(prev if count == 1 else f"{prev}^{count}")
    return "*".join(parts)


def from_generators(
    name: str,
    gens: Sequence[tuple[str, Hashable]],
    mul: Mul,
    identity: Hashable,
    rename: dict[Hashable, str] | None = None,
) -> Group:
    """Close a concrete generating set under ``mul`` (BFS) and tabulate."""
    elems = [identity]
    words: dict[Hashable, list[str]] = {identity: []}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for label, g in gens:
                y = mul(x, g)
                if y not in words:
                    words[y] = words[x] + [label]
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[mul(x, y)] for y in elems] for x in elems]
    names = [rename[x] if rename and x in rename else _word_name(words[x]) for x in elems]
    return build_group_from_table(len(elems), table, names, name=name)


def cyclic(n: int, letter: str = "a") -> Group:
    return from_generators(f"C{n}", [(letter, 1 % n)], lambda x, y: (x + y) % n, 0)


def abelian(*ns: int, letters: str = "abcd") -> Group:
    name = "x".join(f"C{n}" for n in ns)
    k = len(ns)
    gens = []
    for i, n in enumerate(ns):
        v = [0] * k
        v[i] = 1
        gens.append((letters[i], tuple(v)))
    return from_generators(name, gens, lambda x, y: tuple((a + b) % n for a, b, n in zip(x, y, ns)), (0,) * k)


def metacyclic(name: str, m: int, k: int, r: int, l: int, letters: str = "ab") -> Group:
    """``<a, b | a^m = 1, b^k = a^l, b a b^-1 = a^r>`` on normal forms ``a^i b^j``."""
    assert pow(r, k, m) == 1 % m and (l * r - l) % m == 0

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        i = i1 + i2 * pow(r, j1, m)
        j = j1 + j2
        if j >= k:
            i += l
            j -= k
        return (i % m, j)

    return from_generators(name, [(letters[0], (1 % m, 0)), (letters[1], (0, 1 % k))], mul, (0, 0))


def dihedral(n: int) -> Group:
    return metacyclic(f"D{n}", n, 2, -1, 0, letters="rs")


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion8() -> Group:
    one, i, j = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    rename = {}
    for sign in (1, -1):
        for idx, lab in enumerate("1ijk"):
            v = [0, 0, 0, 0]
            v[idx] = sign
            rename[tuple(v)] = (lab if sign == 1 else "-" + lab) if lab != "1" else ("e" if sign == 1 else "-1")
    return from_generators("Q8", [("i", i), ("j", j)], _qmul, one, rename=rename)


def _pmul(p, q):
    # apply q first, then p: (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(q)))


def alternating4() -> Group:
    return from_generators("A4", [("a", (1, 2, 0, 3)), ("b", (1, 0, 3, 2))], _pmul, (0, 1, 2, 3))


def _semidirect_c4c2_c2() -> Group:
    """``(C4 x C2) : C2`` with ``c a c = a b`` (SmallGroup(16, 3))."""

    def act(v, k):
        i, j = v
        return (i, (j + i) % 2) if k else (i, j)

    def mul(x, y):
        i1, j1, k1 = x
        i2, j2, k2 = y
        i2, j2 = act((i2, j2), k1)
        return ((i1 + i2) % 4, (j1 + j2) % 2, (k1 + k2) % 2)

    return from_generators("C4xC2:C2", [("a", (1, 0, 0)), ("b", (0, 1, 0)), ("c", (0, 0, 1))], mul, (0, 0, 0))


def _gmat_mul(p, q):
    # 2x2 matrices over Z[i]; entries are (re, im)
    def cm(u, v):
        return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def ca(u, v):
        return (u[0] + v[0], u[1] + v[1])

    (a, b), (c, d) = p
    (e, f), (g, h) = q
    return ((ca(cm(a, e), cm(b, g)), ca(cm(a, f), cm(b, h))), (ca(cm(c, e), cm(d, g)), ca(cm(c, f), cm(d, h))))


def pauli() -> Group:
    """``C4 o D4``: the group generated by ``X``, ``Z`` and ``iI``."""
    o, z, i_ = (1, 0), (0, 0), (0, 1)
    ident = ((o, z), (z, o))
    X = ((z, o), (o, z))
    Z = ((o, z), (z, (-1, 0)))
    iI = ((i_, z), (z, i_))
    return from_generators("Pauli", [("x", X), ("z", Z), ("i", iI)], _gmat_mul, ident)


def direct_product(A: Group, B: Group, name: str | None = None) -> Group:
    nb = B.order
    pos = lambda a, b: a * nb + b  # noqa: E731
    table = [[0] * (A.order * nb) for _ in range(A.order * nb)]
    for a1 in A.elements:
        for b1 in B.elements:
            row = table[pos(a1, b1)]
            for a2 in A.elements:
                for b2 in B.elements:
                    row[pos(a2, b2)] = pos(A.mul(a1, a2), B.mul(b1, b2))
    names = []
    for a in A.elements:
        for b in B.elements:
            parts = [p for p in (A.names[a], B.names[b]) if p != "e"]
            names.append("*".join(parts) if parts else "e")
    # identity first keeps the "element 0 is the identity" catalog convention
    order = sorted(range(len(names)), key=lambda i: (i != pos(A.identity, B.identity), i))
    where = {old: new for new, old in enumerate(order)}
    t2 = [[where[table[o1][o2]] for o2 in order] for o1 in order]
    return build_group_from_table(len(order), t2, [names[o] for o in order], name=name or f"{A.name}x{B.name}")


_BUILDERS: list[tuple[str, int, Callable[[], Group]]] = [
    ("C1", 1, lambda: cyclic(1)),
    ("C2", 2, lambda: cyclic(2)),
    ("C3", 3, lambda: cyclic(3)),
    ("C4", 4, lambda: cyclic(4)),
    ("C2xC2", 4, lambda: abelian(2, 2)),
    ("C5", 5, lambda: cyclic(5)),
    ("C6", 6, lambda: cyclic(6)),
    ("S3", 6, lambda: _renamed(dihedral(3), "S3")),
    ("C7", 7, lambda: cyclic(7)),
    ("C8", 8, lambda: cyclic(8)),
    ("C2xC4", 8, lambda: abelian(2, 4)),
    ("C2xC2xC2", 8, lambda: abelian(2, 2, 2)),
    ("D4", 8, lambda: dihedral(4)),
    ("Q8", 8, quaternion8),
    ("C9", 9, lambda: cyclic(9)),
    ("C3xC3", 9, lambda: abelian(3, 3)),
    ("C10", 10, lambda: cyclic(10)),
    ("D5", 10, lambda: dihedral(5)),
    ("C11", 11, lambda: cyclic(11)),
    ("C12", 12, lambda: cyclic(12)),
    ("C2xC6", 12, lambda: abelian(2, 6)),
    ("D6", 12, lambda: dihedral(6)),
    ("Dic3", 12, lambda: metacyclic("Dic3", 3, 4, -1, 0)),
    ("A4", 12, alternating4),
    ("C13", 13, lambda: cyclic(13)),
    ("C14", 14, lambda: cyclic(14)),
    ("D7", 14, lambda: dihedral(7)),
    ("C15", 15, lambda: cyclic(15)),
    ("C16", 16, lambda: cyclic(16)),
    ("C2xC8", 16, lambda: abelian(2, 8)),
    ("C4xC4", 16, lambda: abelian(4, 4)),
    ("C2xC2xC4", 16, lambda: abelian(2, 2, 4)),
    ("C2xC2xC2xC2", 16, lambda: abelian(2, 2, 2, 2)),
    ("D8", 16, lambda: dihedral(8)),
    ("SD16", 16, lambda: metacyclic("SD16", 8, 2, 3, 0)),
    ("Q16", 16, lambda: metacyclic("Q16", 8, 2, -1, 4)),
    ("M16", 16, lambda: metacyclic("M16", 8, 2, 5, 0)),
    ("C4:C4", 16, lambda: metacyclic("C4:C4", 4, 4, -1, 0)),
    ("C4xC2:C2", 16, _semidirect_c4c2_c2),
    ("Pauli", 16, pauli),
    ("C2xD4", 16, lambda: direct_product(cyclic(2, "c"), dihedral(4), "C2xD4")),
    ("C2xQ8", 16, lambda: direct_product(cyclic(2, "c"), quaternion8(), "C2xQ8")),
]

CATALOG_NAMES: tuple[str, ...] = tuple(n for n, _, _ in _BUILDERS)


def _renamed(G: Group, name: str) -> Group:
    return Group(G.order, G.table, G.identity, G.names, name)


@lru_cache(maxsize=None)
def get_group(name: str) -> Group:
    for n, _, build in _BUILDERS:
        if n.lower() == name.lower():
            return build()
    raise UnknownCatalogName(name)


class UnknownCatalogName(KeyError):
    pass


def builtin_catalog(max_order: int = 16, include_trivial: bool = False) -> list[Group]:
    """Catalog groups of order ``<= max_order`` in their fixed listing order."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    return [
        get_group(n)
        for n, order, _ in _BUILDERS
        if order <= max_order and (include_trivial or order > 1)
    ]

