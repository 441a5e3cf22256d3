import pytest

from anticomm.catalog import builtin_catalog, get_group
from anticomm.involutions import enumerate_involutions, identity_involution, inversion
from anticomm.orientation import NotAnOrientation, enumerate_orientations, is_compatible, make_orientation
from anticomm.rings import build_zmod, ring_from_token


def brute_orientations(G, R):
    # every assignment of units to elements, filtered by the homomorphism law
    from itertools import product

    units = sorted(R.unit_set)
    out = []
    if G.order > 8:
        raise ValueError("too slow")
    for vals in product(units, repeat=G.order - 1):
        values = (R.one,) + vals
        if all(values[G.mul(x, y)] == R.mul[values[x]][values[y]] for x in G.elements for y in G.elements):
            if any(v != R.one for v in values):
                out.append(values)
    return sorted(out)


def test_examples():
    C2 = get_group("C2")
    z4 = build_zmod(4)
    (s,) = enumerate_orientations(C2, z4)
    assert s.values == (1, 3)
    z8 = build_zmod(8)
    assert sorted(o.values[1] for o in enumerate_orientations(C2, z8)) == [3, 5, 7]
    assert enumerate_orientations(get_group("C3"), z4) == []


@pytest.mark.parametrize("token", ["z4", "z8", "z4xz2"])
@pytest.mark.parametrize("name", ["C2", "C4", "C2xC2", "S3", "C6", "D4", "Q8", "C2xC4"])
def test_matches_brute_force(name, token):
    G = get_group(name)
    R = ring_from_token(token)
    if len(R.unit_set) ** (G.order - 1) > 200000:
        pytest.skip("oracle too large")
    assert [o.values for o in enumerate_orientations(G, R)] == brute_orientations(G, R)


def test_kernel_and_C():
    G = get_group("C4")
    R = build_zmod(8)
    sigmas = {o.values: o for o in enumerate_orientations(G, R)}
    s = sigmas[(1, 3, 1, 3)]
    assert {G.names[x] for x in s.kernel} == {"e", "a^2"}
    assert {G.names[x] for x in s.subgroup_C} == {"e", "a^2"}
    s7 = sigmas[(1, 7, 1, 7)]
    assert len(s7.subgroup_C) == 4
    for o in sigmas.values():
        assert o(G.identity) == R.one
        assert all(o(x) == R.one for x in o.kernel)


def test_make_orientation_validation():
    G = get_group("C2")
    R = build_zmod(4)
    with pytest.raises(NotAnOrientation):
        make_orientation(G, R, [1, 2])  # 2 is not a unit
    with pytest.raises(NotAnOrientation):
        make_orientation(G, R, [1, 1])
    assert make_orientation(G, R, [1, 1], allow_trivial=True).is_trivial
    with pytest.raises(NotAnOrientation):
        make_orientation(get_group("C4"), R, [1, 3, 3, 3])


def test_compatibility():
    R = build_zmod(8)
    for G in builtin_catalog(8):
        for o in enumerate_orientations(G, R):
            assert is_compatible(inversion(G), o)
    C2 = get_group("C2")
    assert is_compatible(identity_involution(C2), make_orientation(C2, build_zmod(4), [1, 3]))
    C4 = get_group("C4")
    assert is_compatible(identity_involution(C4), make_orientation(C4, R, [1, 3, 1, 3]))
    # scan for the first incompatible pair
    found = None
    for G in builtin_catalog(8):
        for tau in enumerate_involutions(G):
            for o in enumerate_orientations(G, R):
                if not is_compatible(tau, o):
                    found = (G.name, tau.map, o.values)
                    break
            if found:
                break
        if found:
            break
    assert found is not None
    G = get_group(found[0])
    assert any(o.values[G.mul(x, found[1][x])] != R.one for x in G.elements for o in [make_orientation(G, R, found[2])])
