"""Direct anticommutativity test of the symmetric span and lemma-conclusion suites.

The Jordan product is R-bilinear and R is commutative, so the span of a
generating family anticommutes iff every pair of generators does, self-pairs
included (``a o a = 2a^2`` need not vanish).  This reduction is checked
against a full-span brute force in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .groups import Group, center, commutator, conjugate
from .group_ring import GroupRingElement, SymmetricGenerators, jordan
from .involutions import GroupInvolution
from .orientation import Orientation
from .rings import FiniteRing, annihilator


class HypothesisNotMet(RuntimeError):
    """Lemma suites only apply when the symmetric span anticommutes."""


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[GroupRingElement, GroupRingElement] | None = None
    product: GroupRingElement | None = None
    pairs_checked: int = 0

    def to_json(self) -> dict:
        if self.holds:
            return {"holds": True}
        a, b = self.witness
        return {
            "holds": False,
            "witness": {"a": str(a), "b": str(b), "jordan": str(self.product)},
        }


def check_anticommutative(gens: SymmetricGenerators | Iterable[GroupRingElement]) -> Verdict:
    """First failing pair, or ``holds=True``.

    Self-pairs ``(a, a)`` are tried first, then ``(a, b)`` with ``a`` before
    ``b`` in generator order.
    """
    elems = list(gens.all if isinstance(gens, SymmetricGenerators) else gens)
    pairs = [(a, a) for a in elems] + [(a, b) for i, a in enumerate(elems) for b in elems[i + 1:]]
    count = 0
    for a, b in pairs:
        count += 1
        p = jordan(a, b)
        if not p.is_zero():
            return Verdict(False, (a, b), p, count)
    return Verdict(True, None, None, count)


def admissible_coefficients(tau: GroupInvolution, sigma: Orientation, x: int) -> tuple[int, ...]:
    """All ``a`` in R with ``a x`` in the symmetric span, for ``x`` in ``G_*``.

    ``2R`` when ``x`` is in the kernel, else the annihilator of ``1 - sigma(x)``.
    """
    R = sigma.ring
    if tau.map[x] != x:
        raise ValueError("x must be fixed by the involution")
    if x in sigma.kernel:
        return tuple(sorted({R.mul[R.two][r] for r in R.elements}))
    return annihilator(R, R.minus(R.one, sigma.values[x])).members


# Necessary conditions on instances whose symmetric span anticommutes.  Keys:
#   char-4-or-8        characteristic is 4 or 8
#   char-4-if-moved    a non-identity involution forces char 4, x x* = x* x, x^2 symmetric
#   commuting-pairs    commuting with x matches commuting with x*; moved commuting pairs
#   moved-products     products of moved elements: xy in {yx, yx*, y*x, x*y*}
#   squares-commute    (x^2, y) = 1 for moved x, y
#   mixed-pairs        x moved, y fixed: conjugation, symmetry and coefficient constraints
#   symmetric-pairs    x, y fixed: symmetry of xy and coefficient products
#   c-central          c_x = x* x^-1 is central
#   c-cocycle          x* = c_x x, c_x^2 = 1, c_xy = c_x c_y (x, y)
#   c-pair-cases       noncommuting moved pairs fall in one of four c/commutator patterns
LEMMA_IDS = (
    "char-4-or-8", "char-4-if-moved", "commuting-pairs", "moved-products", "squares-commute",
    "mixed-pairs", "symmetric-pairs", "c-central", "c-cocycle", "c-pair-cases",
)


@dataclass
class LemmaStatus:
    lemma: str
    holds: bool = True
    counterexample: str | None = None

    def to_json(self) -> dict:
        d = {"lemma": self.lemma, "holds": self.holds}
        if self.counterexample:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class LemmaReport:
    statuses: dict[str, LemmaStatus] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(s.holds for s in self.statuses.values())

    def failures(self) -> list[LemmaStatus]:
        return [s for s in self.statuses.values() if not s.holds]

    def to_json(self) -> list[dict]:
        return [self.statuses[k].to_json() for k in LEMMA_IDS if k in self.statuses]


class _Ctx:
    """Precomputed group/ring facts shared by the lemma checks."""

    def __init__(self, G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing):
        self.G, self.tau, self.sigma, self.R = G, tau, sigma, R
        self.star = tau.map
        self.sig = sigma.values
        self.Gs = tau.fixed
        self.non = [x for x in G.elements if x not in self.Gs]
        self.sym = sorted(self.Gs)
        self.Z = frozenset(center(G))
        self.e = G.identity
        t = G.table
        self.c = [t[self.star[x]][G.inv(x)] for x in G.elements]
        self.comm = [[commutator(G, x, y) for y in G.elements] for x in G.elements]
        self.adm = {x: admissible_coefficients(tau, sigma, x) for x in self.sym}

    def n(self, *xs: int) -> str:
        return ", ".join(self.G.names[x] for x in xs)

    def rz(self, r: int) -> bool:
        return r == self.R.zero

    def radd(self, *rs: int) -> int:
        acc = self.R.zero
        for r in rs:
            acc = self.R.add[acc][r]
        return acc

    def twice(self, r: int) -> int:
        return self.R.add[r][r]


def _check_char_4_or_8(k: _Ctx) -> str | None:
    if k.R.characteristic not in (4, 8):
        return f"char(R) = {k.R.characteristic}"
    return None


def _check_char_4_if_moved(k: _Ctx) -> str | None:
    if k.tau.is_identity:
        return None
    if k.R.characteristic != 4:
        return f"involution is not Id but char(R) = {k.R.characteristic}"
    t, s = k.G.table, k.star
    for x in k.non:
        if t[x][s[x]] != t[s[x]][x]:
            return f"x x* != x* x for x = {k.n(x)}"
        if t[x][x] not in k.Gs:
            return f"x^2 not symmetric for x = {k.n(x)}"
    return None


def _check_commuting_pairs(k: _Ctx) -> str | None:
    t, s, sig, R = k.G.table, k.star, k.sig, k.R
    for x in k.G.elements:
        for y in k.G.elements:
            if (t[x][y] == t[y][x]) != (t[s[x]][y] == t[y][s[x]]):
                return f"xy = yx does not match x*y = yx* at ({k.n(x, y)})"
    for x in k.non:
        for y in k.non:
            if t[x][y] != t[y][x]:
                continue
            xy = t[x][y]
            if not (xy == t[s[x]][s[y]] == t[s[y]][s[x]]):
                return f"commuting pair with xy not in {{x*y*, y*x*}} at ({k.n(x, y)})"
            if not (t[x][s[y]] == t[s[y]][x] == t[s[x]][y] == t[y][s[x]]):
                return f"xy*, y*x, x*y, yx* not all equal at ({k.n(x, y)})"
            if not k.rz(k.twice(R.add[R.one][sig[xy]])) or not k.rz(k.twice(R.add[sig[x]][sig[y]])):
                return f"2(1 + s(xy)) or 2(s(x) + s(y)) nonzero at ({k.n(x, y)})"
    return None


def _check_moved_products(k: _Ctx) -> str | None:
    t, s = k.G.table, k.star
    for x in k.non:
        for y in k.non:
            xy, yx = t[x][y], t[y][x]
            if xy not in (yx, t[y][s[x]], t[s[y]][x], t[s[x]][s[y]]):
                return f"xy not in {{yx, yx*, y*x, x*y*}} at ({k.n(x, y)})"
            if (xy == yx) != (xy in k.Gs):
                return f"commuting does not match xy symmetric at ({k.n(x, y)})"
            if (xy == t[y][s[x]]) != (t[s[x]][y] == yx):
                return f"xy = yx* does not match x*y = yx at ({k.n(x, y)})"
    return None


def _check_squares_commute(k: _Ctx) -> str | None:
    t = k.G.table
    for x in k.non:
        for y in k.non:
            if k.comm[t[x][x]][y] != k.e:
                return f"(x^2, y) != 1 at ({k.n(x, y)})"
    return None


def _check_mixed_pairs(k: _Ctx) -> str | None:
    G, t, s, R = k.G, k.G.table, k.star, k.R
    for y in k.sym:
        for x in k.non:
            xy, yx = t[x][y], t[y][x]
            if conjugate(G, x, y) not in (x, s[x]):
                return f"x^y not in {{x, x*}} at x, y = ({k.n(x, y)})"
            if (xy in k.Gs) != (xy != yx):
                return f"xy symmetric does not match xy != yx at ({k.n(x, y)})"
            one_plus = R.add[R.one][k.sig[x]]
            for a in k.adm[y]:
                if xy != yx and not k.rz(R.mul[a][one_plus]):
                    return f"a(1 + s(x)) != 0 with a = {R.labels[a]} at ({k.n(x, y)})"
                if xy == yx and not k.rz(k.twice(a)):
                    return f"2a != 0 with a = {R.labels[a]} at ({k.n(x, y)})"
            if not (k.comm[x][t[y][y]] == k.comm[t[x][x]][y] == k.comm[t[x][s[x]]][y] == k.e):
                return f"(x, y^2), (x^2, y), (xx*, y) not all 1 at ({k.n(x, y)})"
    return None


def _check_symmetric_pairs(k: _Ctx) -> str | None:
    t, R = k.G.table, k.R
    for x in k.sym:
        for y in k.sym:
            xy, yx = t[x][y], t[y][x]
            if (xy == yx) != (xy in k.Gs):
                return f"commuting does not match xy symmetric at ({k.n(x, y)})"
            for a in k.adm[x]:
                for b in k.adm[y]:
                    ab = R.mul[a][b]
                    if xy != yx and not k.rz(ab):
                        return f"ab != 0 with a, b = {R.labels[a]}, {R.labels[b]} at ({k.n(x, y)})"
                    if xy == yx and not k.rz(k.twice(ab)):
                        return f"2ab != 0 with a, b = {R.labels[a]}, {R.labels[b]} at ({k.n(x, y)})"
            if not (k.comm[x][t[y][y]] == k.comm[t[x][x]][y] == k.e):
                return f"(x, y^2) or (x^2, y) nontrivial at ({k.n(x, y)})"
    return None


def _check_c_central(k: _Ctx) -> str | None:
    for x in k.G.elements:
        if k.c[x] not in k.Z:
            return f"c_x = x* x^-1 not central for x = {k.n(x)}"
    return None


def _check_c_cocycle(k: _Ctx) -> str | None:
    t, s, c, e = k.G.table, k.star, k.c, k.e
    for x in k.G.elements:
        if s[x] != t[c[x]][x]:
            return f"x* != c_x x for x = {k.n(x)}"
        if c[x] not in k.Gs or c[x] not in k.Z:
            return f"c_x not in G_* and Z(G) for x = {k.n(x)}"
        if t[c[x]][c[x]] != e:
            return f"c_x^2 != 1 for x = {k.n(x)}"
    for x in k.G.elements:
        for y in k.G.elements:
            xy, cm = t[x][y], k.comm[x][y]
            if c[xy] != t[t[c[x]][c[y]]][cm]:
                return f"c_xy != c_x c_y (x, y) at ({k.n(x, y)})"
            if cm != e and c[xy] not in (c[x], c[y], cm):
                return f"c_xy not in {{c_x, c_y, (x, y)}} at ({k.n(x, y)})"
    return None


def _check_c_pair_cases(k: _Ctx) -> str | None:
    t, c, sig, R = k.G.table, k.c, k.sig, k.R
    m1 = R.minus_one
    for x in k.non:
        for y in k.non:
            xy, cm = t[x][y], k.comm[x][y]
            sx, sy, sxy = sig[x], sig[y], sig[xy]
            if cm == k.e:
                if c[x] != c[y]:
                    return f"c_x != c_y for commuting ({k.n(x, y)})"
                if not k.rz(k.twice(R.add[R.one][sxy])) or not k.rz(k.twice(R.add[sx][sy])):
                    return f"ring equations fail at ({k.n(x, y)})"
                continue
            cases = (
                cm == c[x] == c[y] == c[xy] and k.rz(k.radd(R.one, sx, sy, sxy)),
                cm == c[x] != c[y] == c[xy] and sx == m1,
                cm == c[y] != c[x] == c[xy] and sy == m1,
                cm == c[xy] != c[x] == c[y] and sxy == m1 and sx == R.neg[sy],
            )
            if not any(cases):
                return f"no admissible commutator case holds at ({k.n(x, y)})"
    return None


_CHECKS: dict[str, Callable[[_Ctx], str | None]] = {
    "char-4-or-8": _check_char_4_or_8,
    "char-4-if-moved": _check_char_4_if_moved,
    "commuting-pairs": _check_commuting_pairs,
    "moved-products": _check_moved_products,
    "squares-commute": _check_squares_commute,
    "mixed-pairs": _check_mixed_pairs,
    "symmetric-pairs": _check_symmetric_pairs,
    "c-central": _check_c_central,
    "c-cocycle": _check_c_cocycle,
    "c-pair-cases": _check_c_pair_cases,
}


def check_lemma_suite(
    G: Group,
    tau: GroupInvolution,
    sigma: Orientation,
    R: FiniteRing,
    gens: SymmetricGenerators,
    verdict: Verdict | None = None,
) -> LemmaReport:
    """Evaluate every lemma conclusion on an instance whose span anticommutes."""
    verdict = check_anticommutative(gens) if verdict is None else verdict
    if not verdict.holds:
        raise HypothesisNotMet("symmetric span does not anticommute")
    ctx = _Ctx(G, tau, sigma, R)
    report = LemmaReport()
    for lemma in LEMMA_IDS:
        bad = _CHECKS[lemma](ctx)
        report.statuses[lemma] = LemmaStatus(lemma, bad is None, bad)
    return report


def lemma_check(lemma: str, G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing) -> str | None:
    """Run a single lemma conclusion without the hypothesis gate (for tests)."""
    return _CHECKS[lemma](_Ctx(G, tau, sigma, R))
