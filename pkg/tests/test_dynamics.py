import pytest

from quiver_rpp.arquiver import knit
from quiver_rpp.bijection import poset_of
from quiver_rpp.dynamics import (
    admissible_vertex_order,
    check_periodicity,
    orbit_toggle,
    promotion,
    random_rpp,
)
from quiver_rpp.dynkin import DynkinDiagram, coxeter_number
from quiver_rpp.poset import RPP, RPPError, zero_rpp
from quiver_rpp.quiver import parse_quiver, random_orientation

DIAMOND_TRAJECTORY = [
    {"010": 5, "110": 5, "011": 4, "111": 1},
    {"010": 8, "110": 6, "011": 7, "111": 3},
    {"010": 7, "110": 4, "011": 3, "111": 3},
    {"010": 5, "110": 1, "011": 2, "111": 0},
    {"010": 5, "110": 5, "011": 4, "111": 1},
]


def keyed(d):
    return {tuple(int(c) for c in k): v for k, v in d.items()}


def test_admissible_order_targets_first():
    q = parse_quiver("A3:1>2<3")
    order = admissible_vertex_order(q)
    pos = {v: i for i, v in enumerate(order)}
    for s, t in q.arrows:
        assert pos[t] < pos[s]
    assert order[0] == 2


def test_orbit_toggle_identity_cases(rng):
    q = parse_quiver("A5:1<2<3<4<5")
    ar = knit(q)
    poset = poset_of(ar, 3)
    r = random_rpp(poset, 6, rng)
    # applying an orbit toggle twice is the identity
    for i in range(1, 6):
        assert orbit_toggle(orbit_toggle(r, i), i) == r
    with pytest.raises(RPPError):
        orbit_toggle(zero_rpp(poset), 3)  # unbounded


def test_promotion_golden_trajectory():
    q = parse_quiver("A3:1>2<3")
    ar = knit(q)
    poset = poset_of(ar, 2)
    cur = RPP(poset, keyed(DIAMOND_TRAJECTORY[0]), bound=8)
    seen = [cur]
    for expected in DIAMOND_TRAJECTORY[1:]:
        cur = promotion(cur, q)
        assert cur.values == keyed(expected)
        seen.append(cur)
    assert seen[-1] == seen[0]
    assert coxeter_number(q.diagram) == 4


def test_a1_promotion_period_two():
    q = parse_quiver("A1")
    ar = knit(q)
    poset = poset_of(ar, 1)
    r = zero_rpp(poset, bound=7)
    once = promotion(r, q)
    assert list(once.values.values()) == [7]
    assert promotion(once, q) == r


def test_promotion_preserves_bound(rng):
    q = parse_quiver("D4:2>1,3>2,4>2")
    ar = knit(q)
    poset = poset_of(ar, 1)
    for _ in range(50):
        r = random_rpp(poset, 4, rng)
        out = promotion(r, q)
        assert all(0 <= v <= 4 for v in out.values.values())


def test_commutation_of_distant_orbits(rng):
    # orbit toggles for vertices with no covering contact commute
    q = parse_quiver("A5:1<2<3<4<5")
    ar = knit(q)
    poset = poset_of(ar, 3)
    for _ in range(20):
        r = random_rpp(poset, 5, rng)
        a = orbit_toggle(orbit_toggle(r, 1), 5)
        b = orbit_toggle(orbit_toggle(r, 5), 1)
        assert a == b


def test_check_periodicity_small_cases():
    rep = check_periodicity(parse_quiver("A3:1>2<3"), 2, 8, 40, seed=1)
    assert rep.passed and rep.coxeter == 4
    rep = check_periodicity(parse_quiver("D4:2>1,3>2,4>2"), 1, 3, 30, seed=1)
    assert rep.passed and rep.coxeter == 6
    rep = check_periodicity(parse_quiver("A1"), 1, 5, 10, seed=1)
    assert rep.passed and rep.coxeter == 2


def test_periodicity_random_orientations():
    for seed in range(3):
        q = random_orientation(DynkinDiagram("A", 4), seed)
        rep = check_periodicity(q, 2, 3, 25, seed=seed)
        assert rep.passed, str(rep)
