"""Closed-form classification of when the symmetric span anticommutes.

Everything here works on group tables and ring tables only; no group-ring
element is ever multiplied.  The harness compares :func:`theorem_predicate`
against the direct test in :mod:`anticomm.checker`.

Structure tags:

``IA``
    ``G`` abelian and the involution is the identity.
``IB1``
    ``G`` abelian, involution not the identity, and some ``s`` in
    ``N_* ∩ Z(G)`` with ``x* ∈ {x, xs}`` for every ``x``.
``IB2``
    ``G' = {1, s}`` with ``s`` in ``N_* ∩ Z(G)``, ``s^2 = 1`` and
    ``x* ∈ {x, xs}`` for every ``x``.
``IB3``
    Split behaviour on ``C = {x : sigma(x) = ±1}`` and its complement with
    two central commutators ``s``, ``t``; see :data:`IB3_CONDITIONS`.
``NONE``
    none of the above.

Tags are tried in that order, so ``IB3`` is only reported when ``IB2`` fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .checker import admissible_coefficients
from .groups import Group, center, closure, commutator, derived_subgroup
from .involutions import GroupInvolution
from .orientation import Orientation
from .rings import FiniteRing, two_torsion


class CharTwoRejected(ValueError):
    pass


@dataclass(frozen=True)
class StructureCase:
    tag: str
    s: int | None = None
    t: int | None = None

    def to_json(self, G: Group) -> dict:
        d: dict = {"tag": self.tag}
        if self.s is not None:
            d["s"] = G.names[self.s]
        if self.t is not None:
            d["t"] = G.names[self.t]
        return d


@dataclass(frozen=True)
class RingConditions:
    """Coefficient constraints of the classification.

    ``moved_pairs``: both ``x``, ``y`` moved by the involution.
    ``mixed_pairs``: ``x`` moved, ``y`` fixed, with ``a y`` in the span.
    ``fixed_pairs``: both fixed, with ``a x`` and ``b y`` in the span.
    """

    moved_pairs: bool
    mixed_pairs: bool
    fixed_pairs: bool
    failures: tuple[str, ...] = ()

    @property
    def all(self) -> bool:
        return self.moved_pairs and self.mixed_pairs and self.fixed_pairs

    def to_json(self) -> dict:
        d = {"moved_pairs": self.moved_pairs, "mixed_pairs": self.mixed_pairs, "fixed_pairs": self.fixed_pairs}
        if self.failures:
            d["failures"] = list(self.failures)
        return d


@dataclass(frozen=True)
class ClassificationResult:
    structure: StructureCase
    ring_conditions: RingConditions
    predicate: bool
    restricted_case: str | None
    # same evaluation with s, t allowed anywhere in G_* ∩ Z(G) instead of N_* ∩ Z(G)
    weak_structure: StructureCase = field(default_factory=lambda: StructureCase("NONE"))
    weak_predicate: bool = False

    @property
    def weak_placement_changes_verdict(self) -> bool:
        return self.weak_predicate != self.predicate

    def to_json(self, G: Group) -> dict:
        return {
            "structure": self.structure.to_json(G),
            "ring_conditions": self.ring_conditions.to_json(),
            "predicate": self.predicate,
            "restricted_case": self.restricted_case,
            "weak_placement": {
                "structure": self.weak_structure.to_json(G),
                "predicate": self.weak_predicate,
                "changes_verdict": self.weak_placement_changes_verdict,
            },
        }


class _Facts:
    def __init__(self, G: Group, tau: GroupInvolution, sigma: Orientation):
        self.G, self.tau, self.sigma = G, tau, sigma
        self.star = tau.map
        self.e = G.identity
        self.Gs = tau.fixed
        self.N = sigma.kernel.as_set()
        self.C = sigma.subgroup_C.as_set()
        self.Z = center(G).as_set()
        self.D = derived_subgroup(G).as_set()
        self.comm = [[commutator(G, x, y) for y in G.elements] for x in G.elements]
        self.comm_set = frozenset(v for row in self.comm for v in row)
        self.Ns = self.Gs & self.N

    def placement(self, weak: bool) -> list[int]:
        base = self.Gs if weak else self.Ns
        return sorted(base & self.Z)

    def star_in(self, x: int, s: int) -> bool:
        return self.star[x] in (x, self.G.mul(x, s))

    def comms(self, xs, ys) -> frozenset[int]:
        return frozenset(self.comm[x][y] for x in xs for y in ys)


IB3_CONDITIONS = (
    "involution is not Id on C",
    "involution is Id on N",
    "s^2 = t^2 = 1",
    "s, t are the only nontrivial commutators",
    "G' = <s, t>",
    "C' is {1} or {1, s}",
    "x* in {x, xs} on C",
    "x* in {x, xt} off C",
    "(G\\(C u G_*), G\\(C u G_*)) within {1, t}",
    "(C\\G_*, G) within {1, s}",
    "(C\\G_*, G\\(C u G_*)) = {s}",
)


def _ib3_progress(f: _Facts, s: int, t: int) -> int:
    """Number of leading pair-dependent IB3 conditions met by ``(s, t)``."""
    G, e = f.G, f.e
    C, Gs = f.C, f.Gs
    c_non = [x for x in C if x not in Gs]
    off = [x for x in G.elements if x not in C and x not in Gs]
    checks = (
        lambda: G.mul(s, s) == e and G.mul(t, t) == e,
        lambda: f.comm_set - {e} <= {s, t},
        lambda: f.D == closure(G, [s, t]),
        lambda: _derived_of(f, C) in (frozenset({e}), frozenset({e, s})),
        lambda: all(f.star_in(x, s) for x in C),
        lambda: all(f.star_in(x, t) for x in G.elements if x not in C),
        lambda: f.comms(off, off) <= {e, t},
        lambda: f.comms(c_non, G.elements) <= {e, s},
        lambda: f.comms(c_non, off) == {s},
    )
    for k, check in enumerate(checks):
        if not check():
            return k
    return len(checks)


def _derived_of(f: _Facts, H: frozenset[int]) -> frozenset[int]:
    return closure(f.G, {f.comm[x][y] for x in H for y in H})


def _ib3_instance_conditions(f: _Facts) -> int:
    if all(f.star[x] == x for x in f.C):
        return 0
    if any(f.star[x] != x for x in f.N):
        return 1
    return 2


def _find_ib3(f: _Facts, weak: bool, distinct: bool = False) -> tuple[int, int] | None:
    if _ib3_instance_conditions(f) < 2:
        return None
    cands = f.placement(weak)
    full = len(IB3_CONDITIONS) - 2
    for s, t in product(cands, cands):
        if distinct and s == t:
            continue
        if _ib3_progress(f, s, t) == full:
            return s, t
    return None


def ib3_diagnosis(G: Group, tau: GroupInvolution, sigma: Orientation, distinct: bool = True) -> dict:
    """Explain why an instance is (or is not) an IB3 realization.

    Returns the first failing condition; for the pair-dependent conditions the
    ``(s, t)`` candidate that gets furthest is reported.  With ``distinct``
    only pairs with ``s != t`` are tried (``s = t`` collapses to IB2).
    """
    f = _Facts(G, tau, sigma)
    k = _ib3_instance_conditions(f)
    if k < 2:
        return {"realized": False, "failed": IB3_CONDITIONS[k], "s": None, "t": None}
    cands = f.placement(False)
    best: tuple[int, int, int] | None = None
    for s, t in product(cands, cands):
        if distinct and s == t:
            continue
        p = _ib3_progress(f, s, t)
        if best is None or p > best[0]:
            best = (p, s, t)
    if best is None:
        return {"realized": False, "failed": "no candidate pair in N_* ∩ Z(G)", "s": None, "t": None}
    p, s, t = best
    full = len(IB3_CONDITIONS) - 2
    return {
        "realized": p == full,
        "failed": None if p == full else IB3_CONDITIONS[p + 2],
        "s": G.names[s],
        "t": G.names[t],
    }


def _classify(f: _Facts, weak: bool) -> StructureCase:
    G, tau = f.G, f.tau
    if G.is_abelian and tau.is_identity:
        return StructureCase("IA")
    if tau.is_identity:
        return StructureCase("NONE")
    cands = f.placement(weak)
    if G.is_abelian:
        for s in cands:
            if all(f.star_in(x, s) for x in G.elements):
                return StructureCase("IB1", s)
    for s in cands:
        if f.D == {f.e, s} and G.mul(s, s) == f.e and all(f.star_in(x, s) for x in G.elements):
            return StructureCase("IB2", s)
    st = _find_ib3(f, weak)
    if st is not None:
        return StructureCase("IB3", *st)
    return StructureCase("NONE")


def classify_structure(G: Group, tau: GroupInvolution, sigma: Orientation, weak_placement: bool = False) -> StructureCase:
    """Structural case of the group/involution/orientation triple.

    ``weak_placement`` lets ``s`` (and ``t``) range over ``G_* ∩ Z(G)``
    rather than ``N_* ∩ Z(G)``.
    """
    return _classify(_Facts(G, tau, sigma), weak_placement)


def check_ring_conditions(G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing) -> RingConditions:
    """The three coefficient conditions, quantified over the full admissible
    coefficient sets (not just annihilator generators).

    For moved, noncommuting pairs the constraint ``1 + s(x) + s(y) + s(xy) = 0``
    only applies when neither ``s(x)`` nor ``s(y)`` is ``-1``.
    """
    t, star, sig = G.table, tau.map, sigma.values
    Gs = tau.fixed
    non = [x for x in G.elements if x not in Gs]
    sym = sorted(Gs)
    zero, one, m1 = R.zero, R.one, R.minus_one
    A, M = R.add, R.mul
    fails: list[str] = []

    def twice(r: int) -> int:
        return A[r][r]

    def nm(*xs: int) -> str:
        return ", ".join(G.names[x] for x in xs)

    moved = True
    for x in non:
        for y in non:
            sx, sy, sxy = sig[x], sig[y], sig[t[x][y]]
            if t[x][y] == t[y][x]:
                if twice(A[one][sxy]) != zero or twice(A[sx][sy]) != zero:
                    moved = False
                    fails.append(f"moved_pairs: commuting pair ({nm(x, y)})")
                    break
            elif sx != m1 and sy != m1:
                if A[A[A[one][sx]][sy]][sxy] != zero:
                    moved = False
                    fails.append(f"moved_pairs: noncommuting pair ({nm(x, y)})")
                    break
        if not moved:
            break

    adm = {y: admissible_coefficients(tau, sigma, y) for y in sym}
    mixed = True
    for x in non:
        one_plus = A[one][sig[x]]
        for y in sym:
            commute = t[x][y] == t[y][x]
            bad = next(
                (a for a in adm[y] if (twice(a) if commute else M[a][one_plus]) != zero),
                None,
            )
            if bad is not None:
                mixed = False
                fails.append(f"mixed_pairs: x, y = ({nm(x, y)}), a = {R.labels[bad]}")
                break
        if not mixed:
            break

    fixed = True
    for x in sym:
        for y in sym:
            commute = t[x][y] == t[y][x]
            for a in adm[x]:
                row = M[a]
                if any((twice(row[b]) if commute else row[b]) != zero for b in adm[y]):
                    fixed = False
                    fails.append(f"fixed_pairs: x, y = ({nm(x, y)}), a = {R.labels[a]}")
                    break
            if not fixed:
                break
        if not fixed:
            break
    return RingConditions(moved, mixed, fixed, tuple(fails))


def _gate(tag: str, char: int) -> bool:
    if tag == "IA":
        return char in (4, 8)
    if tag in ("IB1", "IB2", "IB3"):
        return char == 4
    return False


def restricted_case(
    G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing, literal: bool = True
) -> str | None:
    """Case ``A``/``B``/``C``/``NONE`` of the ±1-orientation classification
    applied to ``C = {x : sigma(x) = ±1}`` with ``tau`` restricted to it.

    Returns ``None`` when ``C = N``: the restricted orientation is trivial and
    that classification does not apply.

    Case ``B`` has two readings.  The literal one asks for ``*`` to be the
    identity on ``N``.  With ``literal=False`` it instead asks for some
    ``s`` in ``C_*`` with ``x* in {x, xs}`` for every ``x`` in ``C``.
    """
    char = R.characteristic
    if char == 2:
        raise CharTwoRejected("char(R) = 2")
    C = sigma.subgroup_C.as_set()
    N = sigma.kernel.as_set()
    if C == N:
        return None
    star, t, e = tau.map, G.table, G.identity
    c_abelian = all(t[x][y] == t[y][x] for x in C for y in C)
    if char in (4, 8) and c_abelian and all(star[x] == x for x in C):
        return "A"
    if char == 4 and c_abelian:
        if literal and all(star[x] == x for x in N):
            return "B"
        if not literal and any(
            star[s] == s and all(star[x] in (x, t[x][s]) for x in C) for s in C
        ):
            return "B"
    if char == 4:
        dC = closure(G, {commutator(G, x, y) for x in C for y in C})
        if len(dC) == 2:
            (s,) = dC - {e}
            if all(star[x] in (x, t[s][x]) for x in C):
                sym_off = [x for x in C if star[x] == x and x not in N]
                commute = all(t[x][y] == t[y][x] for x in sym_off for y in sym_off)
                R2 = two_torsion(R)
                r2_sq_zero = all(R.mul[a][b] == R.zero for a in R2 for b in R2)
                if commute or r2_sq_zero:
                    return "C"
    return "NONE"


def theorem_predicate(G: Group, tau: GroupInvolution, sigma: Orientation, R: FiniteRing) -> ClassificationResult:
    """Evaluate the classification: structural gate with its characteristic
    requirement, then the three coefficient conditions."""
    char = R.characteristic
    if char == 2:
        raise CharTwoRejected("char(R) = 2")
    f = _Facts(G, tau, sigma)
    structure = _classify(f, weak=False)
    weak = _classify(f, weak=True)
    rc = check_ring_conditions(G, tau, sigma, R)
    predicate = _gate(structure.tag, char) and rc.all
    weak_predicate = _gate(weak.tag, char) and rc.all
    return ClassificationResult(
        structure, rc, predicate, restricted_case(G, tau, sigma, R), weak, weak_predicate
    )
