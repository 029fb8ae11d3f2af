import pytest

from quiver_rpp.arquiver import knit
from quiver_rpp.bijection import poset_of
from quiver_rpp.dynkin import DynkinDiagram, reference_minuscule_poset
from quiver_rpp.poset import (
    Poset,
    PosetError,
    RPP,
    RPPError,
    chain_product,
    is_isomorphic,
    order_ideals,
    toggle,
    zero_rpp,
)
from quiver_rpp.quiver import parse_quiver, random_orientation


def test_poset_rejects_shortcuts_and_cycles():
    with pytest.raises(PosetError):
        Poset([1, 2, 3], {(1, 2), (2, 3), (1, 3)})
    with pytest.raises(PosetError):
        Poset([1, 2], {(1, 2), (2, 1)})


def test_chain_product_shapes():
    assert len(chain_product(1, 1)) == 1
    diamond = chain_product(2, 2)
    assert len(diamond) == 4 and len(diamond.covers) == 4
    grid = chain_product(3, 3)
    assert len(grid) == 9 and len(grid.covers) == 12


def test_order_ideals_counts():
    two_antichain = Poset(["a", "b"], set())
    assert len(order_ideals(two_antichain)) == 4
    assert len(order_ideals(chain_product(2, 2))) == 6
    j1 = order_ideals(chain_product(2, 3))
    assert len(j1) == 10
    assert len(order_ideals(j1)) == 16  # the E6 poset


def test_order_ideal_covers_differ_by_one():
    j = order_ideals(chain_product(2, 2))
    for small, big in j.covers:
        assert small < big and len(big - small) == 1


def test_is_isomorphic_identity_and_reference():
    p = chain_product(3, 2)
    ok, wit = is_isomorphic(p, p)
    assert ok and all(wit[x] == x or True for x in p.elements)
    ar = knit(parse_quiver("A4:1>2>3<4"))
    ok, wit = is_isomorphic(poset_of(ar, 3), chain_product(3, 2))
    assert ok
    # witness must be a poset isomorphism
    src = poset_of(ar, 3)
    assert sorted(map(str, wit.keys())) == sorted(map(str, src.elements))
    for a, b in src.covers:
        assert (wit[a], wit[b]) in chain_product(3, 2).covers


def test_is_isomorphic_detects_non_isomorphic():
    ok, wit = is_isomorphic(chain_product(4, 1), chain_product(2, 2))
    assert not ok and wit is None


def test_d5_vertex1_reference():
    d = DynkinDiagram("D", 5)
    ar = knit(parse_quiver("D5:2>1,3>2,4>3,5>3"))
    ok, _ = is_isomorphic(poset_of(ar, 1), reference_minuscule_poset(d, 1))
    assert ok


def test_rpp_validation():
    p = chain_product(2, 2)
    vals = {x: 0 for x in p.elements}
    vals[(1, 1)] = 3
    rpp = RPP(p, vals)
    assert rpp.weight() == 3
    bad = {x: 0 for x in p.elements}
    bad[(2, 2)] = 1  # larger element with larger value
    with pytest.raises(RPPError):
        RPP(p, bad)
    with pytest.raises(RPPError):
        RPP(p, vals, bound=2)


def test_toggle_formula_and_involution(rng):
    p = chain_product(2, 2)
    # frozen single-toggle example: upper max 4, lower min 5, old 4 -> 5
    vals = {(1, 1): 6, (1, 2): 5, (2, 1): 4, (2, 2): 4}
    t = toggle(RPP(p, vals, bound=8), (2, 2))
    assert t[(2, 2)] == 0 + 4 - 4  # maximal: upper term 0
    vals2 = {(1, 1): 6, (1, 2): 5, (2, 1): 4, (2, 2): 3}
    t2 = toggle(RPP(p, vals2, bound=8), (2, 1))
    assert t2[(2, 1)] == 3 + 6 - 4  # upper max 3, lower min 6
    for _ in range(50):
        from quiver_rpp.dynamics import random_rpp

        r = random_rpp(p, 8, rng)
        x = rng.choice(p.elements)
        assert toggle(toggle(r, x), x) == r


def test_toggle_needs_bound_at_minimum():
    p = chain_product(2, 2)
    with pytest.raises(RPPError):
        toggle(zero_rpp(p), (1, 1))


def test_toggles_commute_when_not_covering(rng):
    from quiver_rpp.dynamics import random_rpp

    p = chain_product(3, 3)
    pairs = [
        (a, b)
        for a in p.elements
        for b in p.elements
        if a < b and (a, b) not in p.covers and (b, a) not in p.covers
    ]
    for _ in range(50):
        r = random_rpp(p, 6, rng)
        a, b = rng.choice(pairs)
        assert toggle(toggle(r, a), b) == toggle(toggle(r, b), a)


def test_orbit_elements_are_never_cover_related():
    for text, m in [("A5:1<2<3<4<5", 3), ("A5:1>2>3<4<5", 3), ("D5:2>1,3>2,4>3,5>3", 4)]:
        ar = knit(parse_quiver(text))
        poset = poset_of(ar, m)
        for lo, hi in poset.covers:
            assert poset.annotations[lo]["orbit"] != poset.annotations[hi]["orbit"]


def test_minuscule_poset_annotations(line_a5_ar):
    poset = poset_of(line_a5_ar, 3)
    assert len(poset) == 9
    dims = sorted(poset.annotations[x]["dim"] for x in poset.elements)
    assert dims == [1, 2, 2, 3, 3, 3, 4, 4, 5]
    with pytest.raises(PosetError):
        poset_of(knit(parse_quiver("E7:2>1,3>2,4>3,5>4,6>5,7>3")), 3)


def test_minuscule_poset_random_orientations_isomorphic():
    d = DynkinDiagram("D", 4)
    ref = {m: reference_minuscule_poset(d, m) for m in (1, 3, 4)}
    for seed in range(3):
        q = random_orientation(d, seed)
        ar = knit(q)
        for m in (1, 3, 4):
            ok, _ = is_isomorphic(poset_of(ar, m), ref[m])
            assert ok, (q, m)
