"""Finite commutative rings with unity, stored as addition/multiplication tables.

Elements are indices ``0..size-1``.  Constructors cover ``Z/n``, binary
products and dual numbers ``A[u]/(u^2)``; anything else can be supplied as
raw tables (see :func:`load_ring_file`).  The axioms are verified
exhaustively at construction, which is cheap at the sizes used here.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence


class NotARing(ValueError):
    pass


class UnknownRingToken(KeyError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteRing:
    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    neg: tuple[int, ...]
    labels: tuple[str, ...]
    name: str = "R"
    # how the ring was built: ("zmod", n) | ("product", A, B) | ("dual", A) | ("table",)
    kind: tuple = field(default=("table",), repr=False)

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, size={self.size})"

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def minus(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    @property
    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def minus_one(self) -> int:
        return self.neg[self.one]

    @cached_property
    def two(self) -> int:
        return self.add[self.one][self.one]

    def scale(self, k: int, a: int) -> int:
        """``k * a`` for a non-negative integer ``k`` (repeated addition)."""
        acc = self.zero
        for _ in range(k):
            acc = self.add[acc][a]
        return acc

    @cached_property
    def characteristic(self) -> int:
        k, x = 1, self.one
        while x != self.zero:
            x = self.add[x][self.one]
            k += 1
        return k

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(r for r in self.elements if self.one in self.mul[r])

    @cached_property
    def unit_inverse(self) -> dict[int, int]:
        return {r: self.mul[r].index(self.one) for r in self.unit_set}

    def mult_order(self, u: int) -> int:
        k, x = 1, u
        while x != self.one:
            x = self.mul[x][u]
            k += 1
        return k

    def label(self, r: int) -> str:
        return self.labels[r]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label.replace(" ", ""))
        except ValueError:
            raise KeyError(f"{label!r} is not an element label of {self.name}") from None

    def to_json(self) -> dict:
        return {"size": self.size, "add": [list(r) for r in self.add], "mul": [list(r) for r in self.mul]}


def build_ring_from_tables(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    name: str = "R",
    kind: tuple = ("table",),
) -> FiniteRing:
    n = len(add)
    A = tuple(tuple(int(v) for v in row) for row in add)
    M = tuple(tuple(int(v) for v in row) for row in mul)
    if len(M) != n or any(len(r) != n for r in A + M):
        raise NotARing("tables must be square and of equal size")
    rng = range(n)
    zero = next((z for z in rng if all(A[z][a] == a for a in rng)), None)
    if zero is None:
        raise NotARing("no additive identity")
    for a in rng:
        for b in rng:
            if A[a][b] != A[b][a]:
                raise NotARing(f"addition not commutative at ({a}, {b})")
            if M[a][b] != M[b][a]:
                raise NotARing(f"multiplication not commutative at ({a}, {b})")
    neg = []
    for a in rng:
        try:
            neg.append(A[a].index(zero))
        except ValueError:
            raise NotARing(f"no additive inverse for {a}") from None
    one = next((u for u in rng if all(M[u][a] == a for a in rng)), None)
    if one is None:
        raise NotARing("no multiplicative identity")
    for a in rng:
        for b in rng:
            ab_add, ab_mul = A[a][b], M[a][b]
            for c in rng:
                if A[ab_add][c] != A[a][A[b][c]]:
                    raise NotARing(f"addition not associative at ({a}, {b}, {c})")
                if M[ab_mul][c] != M[a][M[b][c]]:
                    raise NotARing(f"multiplication not associative at ({a}, {b}, {c})")
                if M[a][A[b][c]] != A[M[a][b]][M[a][c]]:
                    raise NotARing(f"distributivity fails at ({a}, {b}, {c})")
    if labels is None:
        labels = [str(i) for i in rng]
    return FiniteRing(n, A, M, zero, one, tuple(neg), tuple(labels), name, kind)


def build_zmod(n: int) -> FiniteRing:
    if n < 2:
        raise ValueError("n must be at least 2")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return build_ring_from_tables(add, mul, [str(i) for i in range(n)], name=f"Z{n}", kind=("zmod", n))


def product_ring(A: FiniteRing, B: FiniteRing) -> FiniteRing:
    """``A x B`` with componentwise operations; element ``(a, b)`` has index ``a*|B| + b``."""
    nb = B.size
    pairs = [(a, b) for a in A.elements for b in B.elements]
    add = [[A.add[a1][a2] * nb + B.add[b1][b2] for a2, b2 in pairs] for a1, b1 in pairs]
    mul = [[A.mul[a1][a2] * nb + B.mul[b1][b2] for a2, b2 in pairs] for a1, b1 in pairs]
    labels = [f"({A.labels[a]},{B.labels[b]})" for a, b in pairs]
    return build_ring_from_tables(add, mul, labels, name=f"{A.name}x{B.name}", kind=("product", A, B))


def dual_numbers(A: FiniteRing) -> FiniteRing:
    """``A[u]/(u^2)``: pairs ``(a, b)`` meaning ``a + b u``, ``(a,b)(c,d) = (ac, ad + bc)``."""
    n = A.size
    pairs = [(a, b) for a in A.elements for b in A.elements]
    add = [[A.add[a][c] * n + A.add[b][d] for c, d in pairs] for a, b in pairs]
    mul = [[A.mul[a][c] * n + A.add[A.mul[a][d]][A.mul[b][c]] for c, d in pairs] for a, b in pairs]

    def lab(a: int, b: int) -> str:
        if b == A.zero:
            return A.labels[a]
        ub = "u" if b == A.one else f"{A.labels[b]}u"
        return ub if a == A.zero else f"{A.labels[a]}+{ub}"

    labels = [lab(a, b) for a, b in pairs]
    return build_ring_from_tables(add, mul, labels, name=f"dual-{A.name}", kind=("dual", A))


def units(R: FiniteRing) -> list[int]:
    return sorted(R.unit_set)


def two_torsion(R: FiniteRing) -> list[int]:
    """``R_2 = {r : 2r = 0}``."""
    return [r for r in R.elements if R.add[r][r] == R.zero]


def ideal_span(R: FiniteRing, gens: Sequence[int]) -> frozenset[int]:
    """Smallest R-submodule of R containing ``gens``."""
    span = {R.zero}
    for g in gens:
        multiples = {R.mul[r][g] for r in R.elements}
        span = {R.add[a][b] for a in span for b in multiples}
    return frozenset(span)


@dataclass(frozen=True)
class Annihilator:
    members: tuple[int, ...]
    generators: tuple[int, ...]


def annihilator(R: FiniteRing, v: int) -> Annihilator:
    """``{a : a v = 0}`` together with a generating set for it as an R-module."""
    full = tuple(a for a in R.elements if R.mul[a][v] == R.zero)
    return Annihilator(full, tuple(_annihilator_generators(R, v, full)))


def _annihilator_generators(R: FiniteRing, v: int, full: Sequence[int]) -> list[int]:
    kind = R.kind[0]
    if kind == "zmod":
        n = R.kind[1]
        g = n // math.gcd(n, v)
        return [] if g % n == 0 else [g % n]
    if kind == "product":
        A, B = R.kind[1], R.kind[2]
        va, vb = divmod(v, B.size)
        gens = [a * B.size + B.zero for a in annihilator(A, va).generators]
        gens += [A.zero * B.size + b for b in annihilator(B, vb).generators]
        return gens
    # greedy: walk the members in index order, keep whatever enlarges the span
    target = frozenset(full)
    gens: list[int] = []
    span = frozenset({R.zero})
    for a in full:
        if span == target:
            break
        if a not in span:
            gens.append(a)
            span = ideal_span(R, gens)
    return gens


_TOKEN_RE = re.compile(r"^z(\d+)$")


def ring_from_token(token: str) -> FiniteRing:
    """Parse ring tokens such as ``z4``, ``z8xz4``, ``dual-z4``.

    ``zN`` is ``Z/N``; ``AxB`` is the product (left-associative for more
    factors); ``dual-X`` is ``X[u]/(u^2)``.
    """
    tok = token.strip().lower()
    if not tok:
        raise UnknownRingToken(token)
    if tok.startswith("dual-"):
        return dual_numbers(ring_from_token(tok[5:]))
    if "x" in tok:
        parts = tok.split("x")
        ring = ring_from_token(parts[0])
        for p in parts[1:]:
            ring = product_ring(ring, ring_from_token(p))
        return ring
    m = _TOKEN_RE.match(tok)
    if not m or int(m.group(1)) < 2:
        raise UnknownRingToken(token)
    return build_zmod(int(m.group(1)))


DEFAULT_RING_TOKENS = ("z4", "z8", "z4xz4", "z4xz2", "dual-z4")


def load_ring_file(path: str | Path) -> FiniteRing:
    """Read ``{"size": n, "add": [[...]], "mul": [[...]]}`` (optional ``labels``, ``name``)."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise OSError(f"{path}: {exc}") from exc
    ring = build_ring_from_tables(data["add"], data["mul"], data.get("labels"), name=data.get("name", path.stem))
    if ring.size != data["size"]:
        raise NotARing(f"{path}: size {data['size']} does not match tables")
    return ring
