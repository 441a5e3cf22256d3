import json
from itertools import product

import pytest

from anticomm.catalog import CATALOG_NAMES, UnknownCatalogName, builtin_catalog, get_group
from anticomm.groups import (
    NotAGroup,
    build_group_from_table,
    center,
    closure,
    commutator,
    conjugate,
    derived_subgroup,
    generating_set,
    load_group_file,
    relabel,
)


def names(G, xs):
    return {G.names[x] for x in xs}


def test_two_element_table():
    G = build_group_from_table(2, [[0, 1], [1, 0]])
    assert G.identity == 0
    assert G.inv(1) == 1


def test_cyclic4_inverse():
    G = build_group_from_table(4, [[(i + j) % 4 for j in range(4)] for i in range(4)])
    assert G.inv(1) == 3


def test_identity_found_by_scan():
    # identity sits at index 2
    perm = [2, 0, 1]
    base = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    t = [[perm[base[perm.index(i)][perm.index(j)]] for j in range(3)] for i in range(3)]
    assert build_group_from_table(3, t).identity == 2


def test_not_latin_square():
    with pytest.raises(NotAGroup) as exc:
        build_group_from_table(3, [[0, 1, 2], [1, 2, 0], [2, 2, 2]])
    assert exc.value.reason == "not-latin-square"
    assert exc.value.where[0] == 2


def test_not_associative():
    # latin square with identity 0 but not associative (order 5 loop)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup) as exc:
        build_group_from_table(5, t)
    assert exc.value.reason == "not-associative"


def test_no_identity():
    with pytest.raises(NotAGroup) as exc:
        build_group_from_table(3, [[0, 2, 1], [2, 1, 0], [1, 0, 2]])
    assert exc.value.reason == "no-identity"


def test_bad_shape():
    with pytest.raises(ValueError):
        build_group_from_table(2, [[0, 1]])
    with pytest.raises(ValueError):
        build_group_from_table(2, [[0, 5], [1, 0]])


def test_load_group_file(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps({"order": 4, "table": [[i ^ j for j in range(4)] for i in range(4)], "names": ["1", "x", "y", "xy"]}))
    G = load_group_file(p)
    assert G.order == 4 and G.is_abelian and G.names[3] == "xy"
    with pytest.raises(OSError, match="missing.json"):
        load_group_file(tmp_path / "missing.json")


# independent realizations -------------------------------------------------

def _perm_mul(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def _perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _perm_mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def _perm_group(gens):
    elems = _perm_closure(gens)
    idx = {p: i for i, p in enumerate(elems)}
    table = [[idx[_perm_mul(a, b)] for b in elems] for a in elems]
    return elems, build_group_from_table(len(elems), table)


def test_dihedral_commutator_against_permutations():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    elems, P = _perm_group([r, s])
    idx = {p: i for i, p in enumerate(elems)}
    r2 = idx[_perm_mul(r, r)]
    assert commutator(P, idx[r], idx[s]) == r2
    assert set(derived_subgroup(P)) == {P.identity, r2}
    assert set(center(P)) == {P.identity, r2}
    # same facts on the catalog copy
    D = get_group("D4")
    r, s = D.names.index("r"), D.names.index("s")
    assert D.names[commutator(D, r, s)] == "r^2"
    assert names(D, derived_subgroup(D)) == {"e", "r^2"}
    assert names(D, center(D)) == {"e", "r^2"}
    assert D.names[conjugate(D, r, s)] == "r^3"


def _qmat(a, b, c, d):
    # 2x2 complex matrices as tuples of Gaussian integers (re, im)
    return (a, b, c, d)


def _cmul(u, v):
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _cadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _mmul(p, q):
    a, b, c, d = p
    e, f, g, h = q
    return (
        _cadd(_cmul(a, e), _cmul(b, g)),
        _cadd(_cmul(a, f), _cmul(b, h)),
        _cadd(_cmul(c, e), _cmul(d, g)),
        _cadd(_cmul(c, f), _cmul(d, h)),
    )


def test_quaternion_commutator_against_matrices():
    one, zero, i_, mi = (1, 0), (0, 0), (0, 1), (0, -1)
    I = (i_, zero, zero, mi)
    J = (zero, one, (-1, 0), zero)
    E = (one, zero, zero, one)
    elems, frontier = {E}, [E]
    while frontier:
        nxt = []
        for a in frontier:
            for g in (I, J):
                b = _mmul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    elems = sorted(elems)
    idx = {m: k for k, m in enumerate(elems)}
    Q = build_group_from_table(8, [[idx[_mmul(a, b)] for b in elems] for a in elems])
    minus = idx[_mmul(I, I)]
    assert commutator(Q, idx[I], idx[J]) == minus
    assert set(derived_subgroup(Q)) == {Q.identity, minus}
    assert set(center(Q)) == {Q.identity, minus}
    Qc = get_group("Q8")
    assert Qc.names[commutator(Qc, Qc.names.index("i"), Qc.names.index("j"))] == "-1"
    assert names(Qc, derived_subgroup(Qc)) == {"e", "-1"}
    assert names(Qc, center(Qc)) == {"e", "-1"}


def test_abelian_commutators_trivial():
    G = get_group("C2xC4")
    for x, y in product(G.elements, G.elements):
        assert commutator(G, x, y) == G.identity
    assert set(derived_subgroup(G)) == {G.identity}
    assert set(center(G)) == set(G.elements)


def test_conjugate_self_and_central():
    G = get_group("D4")
    z = G.names.index("r^2")
    for x in G.elements:
        assert conjugate(G, x, x) == x
        assert conjugate(G, z, x) == z


# catalog ------------------------------------------------------------------

def _invariants(G):
    orders = sorted(G.element_orders)
    return (G.order, G.is_abelian, len(center(G)), len(derived_subgroup(G)), tuple(orders))


def test_catalog_contents():
    two = builtin_catalog(2)
    assert [G.name for G in two] == ["C2"]
    assert [G.name for G in builtin_catalog(2, include_trivial=True)] == ["C1", "C2"]
    eight = {G.name for G in builtin_catalog(8)}
    assert {"D4", "Q8"} <= eight
    full = builtin_catalog(16)
    required = {f"C{n}" for n in range(2, 17)} | {
        "C2xC2", "C2xC4", "C2xC2xC2", "C2xC8", "C4xC4", "D4", "Q8", "D8", "C2xD4", "C2xQ8",
    }
    assert required <= {G.name for G in full}
    # the full list of groups of order <= 16 up to isomorphism
    counts = {}
    for G in full:
        counts[G.order] = counts.get(G.order, 0) + 1
    assert counts == {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


def test_catalog_pairwise_nonisomorphic_by_invariants():
    # invariants (plus element-order multiset) separate everything except a few order-16 pairs;
    # those are separated by counting square roots
    seen = {}
    for G in builtin_catalog(16):
        sq = sorted(sum(1 for y in G.elements if G.mul(y, y) == x) for x in G.elements)
        key = _invariants(G) + (tuple(sq),)
        assert key not in seen, (G.name, seen.get(key))
        seen[key] = G.name


def test_catalog_identity_first_and_names_unique():
    for G in builtin_catalog(16):
        assert G.identity == 0 and G.names[0] == "e"
        assert len(set(G.names)) == G.order


def test_get_group_unknown():
    with pytest.raises(UnknownCatalogName):
        get_group("Z99")
    assert get_group("d4").table == get_group("D4").table
    assert len(CATALOG_NAMES) == 42


def test_closure_and_generators():
    G = get_group("D8")
    gens = generating_set(G)
    assert closure(G, gens) == frozenset(G.elements)
    assert closure(G, []) == frozenset({G.identity})


def test_relabel_preserves_structure():
    G = get_group("Q8")
    perm = [0, 3, 5, 1, 7, 2, 6, 4]
    H = relabel(G, perm)
    for x, y in product(G.elements, G.elements):
        assert H.mul(perm[x], perm[y]) == perm[G.mul(x, y)]
    assert _invariants(H) == _invariants(G)
