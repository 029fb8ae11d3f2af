"""The acceptance suite: every verification criterion as a callable check.

Each criterion returns a CriterionResult; tests/test_acceptance.py asserts
them and the CLI's ``verify-all`` prints one line per criterion.  ``quick``
shrinks trial counts for smoke runs; the defaults are the binding ones.
"""

import itertools
import random
import time
from dataclasses import dataclass

from .arquiver import knit
from .bijection import from_rpp, poset_of, to_rpp
from .dynamics import check_periodicity, promotion, random_rpp
from .dynkin import (
    DynkinDiagram,
    coxeter_number,
    minuscule_vertices,
    positive_roots,
    reference_minuscule_poset,
)
from .genfun import verify_identity
from .jordan import gen_jf, jordan_to_rpp
from .poset import RPP, is_isomorphic
from .quiver import (
    Quiver,
    bifurcated_quiver,
    canonical_quiver,
    linear_quiver,
    parse_quiver,
    parse_repclass,
)
from .typea import RectShape, grid_of_values, hg_build, hg_extract, hook_lengths, pak_map


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def __str__(self):
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"[{flag}] criterion {self.number:2d} ({self.name}): "
            f"{self.detail} [{self.seconds:.1f}s]"
        )


def _result(number, name, passed, detail, t0):
    return CriterionResult(number, name, passed, detail, time.time() - t0)


def all_orientations(diagram):
    edges = diagram.edge_list()
    quivers = []
    for mask in range(2 ** len(edges)):
        arrows = tuple(
            (a, b) if not (mask >> i) & 1 else (b, a) for i, (a, b) in enumerate(edges)
        )
        quivers.append(Quiver(diagram, arrows))
    return quivers


def some_orientations(diagram, count, seed=0):
    """The canonical orientation plus seeded samples, deduplicated."""
    quivers = all_orientations(diagram)
    rng = random.Random(f"orientations|{diagram}|{seed}")
    out = [canonical_quiver(diagram)]
    pool = [q for q in quivers if q not in out]
    rng.shuffle(pool)
    out.extend(pool[: max(0, count - 1)])
    return out


def random_rep(poset, rng, max_mult=3):
    rep = {x: rng.randint(0, max_mult) for x in poset.elements}
    return {k: v for k, v in rep.items() if v}


HG_QUIVER = "A5:1<2<3<4<5"
HG_REP = "11100:4,01100:3,00110:1,01110:1,00111:1,11111:2"
HG_GRID = [[0, 2, 3], [2, 2, 3], [6, 8, 10]]
PAK_QUIVER = "A5:1>2>3<4<5"
PAK_REP = "11100:4,01100:3,00110:1,01110:1,11111:1,00111:2"
PAK_GRID = [[1, 1, 3], [1, 3, 4], [5, 8, 8]]
ZIGZAG_QUIVER = "A5:1<2,2>3,4>3,4>5"
ZIGZAG_REP = "01100:1,01110:1,11111:2,00110:2"
ZIGZAG_VALUES = {
    "00100": 3, "01100": 2, "11100": 3,
    "00110": 2, "00111": 3, "11111": 2,
    "11110": 2, "01111": 1, "01110": 1,
}
DIAMOND_TRAJECTORY = [
    {"010": 5, "110": 5, "011": 4, "111": 1},
    {"010": 8, "110": 6, "011": 7, "111": 3},
    {"010": 7, "110": 4, "011": 3, "111": 3},
    {"010": 5, "110": 1, "011": 2, "111": 0},
    {"010": 5, "110": 5, "011": 4, "111": 1},
]
KNOWN_MINUSCULE_VERTICES = {
    "A6": {1, 2, 3, 4, 5, 6},
    "D4": {1, 3, 4},
    "D5": {1, 4, 5},
    "D6": {1, 5, 6},
    "E6": {1, 5},
    "E7": {6},
}


def _golden_grid(quiver_text, rep_text, m=3):
    q = parse_quiver(quiver_text)
    ar = knit(q)
    rep = parse_repclass(rep_text, q.rank)
    rpp = to_rpp(ar, m, rep)
    return ar, rep, rpp, grid_of_values(rpp.values, rpp.poset, q.rank, m)


def criterion_1(seed=0, quick=False):
    t0 = time.time()
    ar, rep, rpp, grid = _golden_grid(HG_QUIVER, HG_REP)
    best = min(
        _timed(lambda: to_rpp(ar, 3, rep)) for _ in range(5)
    )
    ok = grid == HG_GRID and best < 1e-3
    return _result(
        1, "HG-orientation golden", ok,
        f"grid={'ok' if grid == HG_GRID else grid}, {best * 1e6:.0f}us/call", t0,
    )


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def criterion_2(seed=0, quick=False):
    t0 = time.time()
    _, _, _, grid = _golden_grid(PAK_QUIVER, PAK_REP)
    ok = grid == PAK_GRID
    return _result(2, "Pak-orientation golden", ok, f"grid={'ok' if ok else grid}", t0)


def criterion_3(seed=0, quick=False):
    t0 = time.time()
    q = parse_quiver(ZIGZAG_QUIVER)
    ar = knit(q)
    rep = parse_repclass(ZIGZAG_REP, 5)
    rpp = to_rpp(ar, 3, rep)
    from .quiver import format_dimvec

    got = {format_dimvec(k): v for k, v in rpp.values.items()}
    maxes = rpp.poset.maximal_elements()
    corner = rpp[maxes[0]] if len(maxes) == 1 else None
    shape = RectShape.for_vertex(5, 3)
    hg_grid = hg_build(rep, shape)
    pak_grid = pak_map(rep, shape)
    ok = (
        got == ZIGZAG_VALUES
        and rpp.weight() == 19
        and corner == 1
        and hg_grid[0][0] == 0
        and pak_grid[0][0] == 0
        and sum(map(sum, hg_grid)) == 19
        and sum(map(sum, pak_grid)) == 19
    )
    return _result(
        3, "zigzag-orientation golden", ok,
        f"weight={rpp.weight()}, corner={corner}, HG/Pak corners="
        f"{hg_grid[0][0]}/{pak_grid[0][0]}", t0,
    )


def _criterion4_cases(seed):
    cases = []
    for n in range(1, 6):
        d = DynkinDiagram("A", n)
        for q in all_orientations(d):
            for m in d.vertices:
                cases.append((q, m))
    for name in ("D4", "D5"):
        d = DynkinDiagram("D", int(name[1]))
        for q in all_orientations(d):
            for m in sorted(minuscule_vertices(d)):
                cases.append((q, m))
    d = DynkinDiagram("E", 6)
    for q in some_orientations(d, 4, seed):
        for m in (1, 5):
            cases.append((q, m))
    return cases


def criterion_4(seed=0, quick=False):
    t0 = time.time()
    reps_per_case = 10 if quick else 200
    cases = _criterion4_cases(seed)
    if quick:
        cases = cases[:: max(1, len(cases) // 12)]
    mismatches = 0
    total = 0
    for q, m in cases:
        ar = knit(q)
        poset = poset_of(ar, m)
        rng = random.Random(f"thrpp|{q}|{m}|{seed}")
        for trial in range(reps_per_case):
            rep = random_rep(poset, rng)
            jd = gen_jf(ar, m, rep, seed=(seed, trial))
            lhs = jordan_to_rpp(jd, poset)
            rhs = to_rpp(ar, m, rep)
            total += 1
            if lhs.values != rhs.values:
                mismatches += 1
    ok = mismatches == 0
    return _result(
        4, "Jordan data agreement", ok,
        f"{total} reps over {len(cases)} cases, {mismatches} mismatches", t0,
    )


def criterion_5(seed=0, quick=False):
    t0 = time.time()
    q = parse_quiver("A3:1>2<3")
    ar = knit(q)
    rng = range(4)
    bad = 0
    for a, b, c, d in itertools.product(rng, repeat=4):
        rep = {}
        for dv, mult in (((0, 1, 0), a), ((0, 1, 1), b), ((1, 1, 0), c), ((1, 1, 1), d)):
            if mult:
                rep[dv] = mult
        lam1 = (c + d,) if c + d else ()
        lam3 = (b + d,) if b + d else ()
        lam2 = tuple(sorted((x for x in (max(b, c) + a + d, min(b, c)) if x), reverse=True))
        if gen_jf(ar, 2, rep, seed=seed) != (lam1, lam2, lam3):
            bad += 1
    return _result(5, "A3 closed formula", bad == 0, f"256 cases, {bad} mismatches", t0)


def _roundtrip_cases(seed):
    cases = []
    for n in range(2, 6):
        d = DynkinDiagram("A", n)
        for q in some_orientations(d, 2, seed):
            cases.append((q, (n + 1) // 2))
    for name, ms in (("D4", (1, 3)), ("D5", (1, 4))):
        d = DynkinDiagram("D", int(name[1]))
        for q in some_orientations(d, 2, seed):
            for m in ms:
                cases.append((q, m))
    d = DynkinDiagram("E", 6)
    for q in some_orientations(d, 2, seed):
        for m in (1, 5):
            cases.append((q, m))
    return cases


def criterion_6(seed=0, quick=False):
    t0 = time.time()
    trials = 50 if quick else 1000
    bad = 0
    total = 0
    for q, m in _roundtrip_cases(seed):
        ar = knit(q)
        poset = poset_of(ar, m)
        rng = random.Random(f"roundtrip|{q}|{m}|{seed}")
        for trial in range(trials):
            rep = random_rep(poset, rng, max_mult=4)
            if from_rpp(ar, m, to_rpp(ar, m, rep, trial), trial) != rep:
                bad += 1
            rpp = random_rpp(poset, rng.randint(1, 12), rng)
            values = dict(rpp.values)
            rep2 = from_rpp(ar, m, values, trial)
            if to_rpp(ar, m, rep2, trial).values != values:
                bad += 1
            total += 2
    return _result(6, "round-trip bijectivity", bad == 0, f"{total} round trips, {bad} failures", t0)


def criterion_7(seed=0, quick=False):
    t0 = time.time()
    bad = 0
    total = 0
    for q, m in _roundtrip_cases(seed):
        ar = knit(q)
        poset = poset_of(ar, m)
        rng = random.Random(f"orderind|{q}|{m}|{seed}")
        for trial in range(2 if quick else 8):
            rep = random_rep(poset, rng)
            outs = {
                tuple(sorted(to_rpp(ar, m, rep, order_seed=s).values.items()))
                for s in range(8)
            }
            total += 1
            if len(outs) != 1:
                bad += 1
    return _result(7, "order independence", bad == 0, f"{total} reps x 8 orders, {bad} failures", t0)


def _rect_shapes():
    return [(p, q) for p in range(1, 5) for q in range(1, 5)]


def criterion_8(seed=0, quick=False):
    t0 = time.time()
    trials = 50 if quick else 500
    shapes = _rect_shapes()
    bad = 0
    rng = random.Random(f"hg|{seed}")
    for trial in range(trials):
        p, q_cols = shapes[trial % len(shapes)]
        n, m = p + q_cols - 1, q_cols
        quiver = linear_quiver(n, "left")
        ar = knit(quiver)
        poset = poset_of(ar, m)
        rep = random_rep(poset, rng)
        grid = grid_of_values(to_rpp(ar, m, rep).values, poset, n, m)
        if hg_extract(grid) != rep:
            bad += 1
    return _result(8, "Hillman-Grassl theorem", bad == 0, f"{trials} reps, {bad} mismatches", t0)


def criterion_9(seed=0, quick=False):
    t0 = time.time()
    trials = 50 if quick else 500
    shapes = _rect_shapes()
    bad = 0
    rng = random.Random(f"pak|{seed}")
    for trial in range(trials):
        p, q_cols = shapes[trial % len(shapes)]
        n, m = p + q_cols - 1, q_cols
        quiver = bifurcated_quiver(n, m)
        ar = knit(quiver)
        poset = poset_of(ar, m)
        rep = random_rep(poset, rng)
        grid = grid_of_values(to_rpp(ar, m, rep).values, poset, n, m)
        if pak_map(rep, RectShape(p, q_cols)) != grid:
            bad += 1
    return _result(9, "Pak theorem", bad == 0, f"{trials} reps, {bad} mismatches", t0)


def criterion_10(seed=0, quick=False):
    t0 = time.time()
    failures = []
    checked = 0

    def run(q, m, bound, enumerate_rpps=True):
        nonlocal checked
        ar = knit(q)
        report = verify_identity(ar, m, bound, enumerate_rpps=enumerate_rpps)
        checked += 1
        if not report.passed:
            failures.append(report.label)
        return report

    for n in range(1, 7):
        d = DynkinDiagram("A", n)
        for m in d.vertices:
            report = run(canonical_quiver(d), m, 4 if quick else 8)
            # rectangles: dim multiset must equal the hook-length multiset
            poset = poset_of(knit(canonical_quiver(d)), m)
            dims = sorted(poset.annotations[x]["dim"] for x in poset.elements)
            if dims != hook_lengths(RectShape.for_vertex(n, m)):
                failures.append(f"hook multiset A{n},m={m}")
    for name in ("D4", "D5"):
        d = DynkinDiagram("D", int(name[1]))
        for m in sorted(minuscule_vertices(d)):
            run(canonical_quiver(d), m, 4 if quick else 8)
    d6 = DynkinDiagram("E", 6)
    for m in (1, 5):
        run(canonical_quiver(d6), m, 3 if quick else 6)
    run(canonical_quiver(DynkinDiagram("E", 7)), 6, 4, enumerate_rpps=False)
    ok = not failures
    return _result(
        10, "generating functions", ok,
        f"{checked} posets compared{'' if ok else ', failures: ' + str(failures)}", t0,
    )


def criterion_11(seed=0, quick=False):
    t0 = time.time()
    trials = 20 if quick else 200
    failures = []

    def run(q, m, bounds):
        for bound in bounds:
            report = check_periodicity(q, m, bound, trials, seed)
            if not report.passed:
                failures.append(str(report))

    for n in range(1, 6):
        d = DynkinDiagram("A", n)
        for m in d.vertices:
            for q in some_orientations(d, 2, seed):
                run(q, m, (1, 4) if quick else (1, 2, 3, 4))
    for name in ("D4", "D5"):
        d = DynkinDiagram("D", int(name[1]))
        for m in sorted(minuscule_vertices(d)):
            for q in some_orientations(d, 2, seed):
                run(q, m, (1,) if quick else (1, 2, 3, 4))
    d6 = DynkinDiagram("E", 6)
    for m in (1, 5):
        for q in some_orientations(d6, 2, seed):
            run(q, m, (1,) if quick else (1, 2))

    # the known 4-step diamond trajectory
    q = parse_quiver("A3:1>2<3")
    ar = knit(q)
    poset = poset_of(ar, 2)
    keyed = {tuple(int(c) for c in k): v for k, v in DIAMOND_TRAJECTORY[0].items()}
    cur = RPP(poset, keyed, bound=8)
    from .quiver import format_dimvec

    for expected in DIAMOND_TRAJECTORY[1:]:
        cur = promotion(cur, q)
        got = {format_dimvec(k): v for k, v in cur.values.items()}
        if got != expected:
            failures.append(f"diamond trajectory mismatch: {got} != {expected}")
            break
    ok = not failures
    detail = "periodicity + diamond trajectory" if ok else "; ".join(failures[:3])
    return _result(11, "promotion periodicity", ok, detail, t0)


def criterion_12(seed=0, quick=False):
    t0 = time.time()
    failures = []
    cases = []
    for n in range(1, 7):
        cases.append(DynkinDiagram("A", n))
    cases += [DynkinDiagram("D", 4), DynkinDiagram("D", 5), DynkinDiagram("E", 6), DynkinDiagram("E", 7)]
    for d in cases:
        expect = KNOWN_MINUSCULE_VERTICES.get(str(d))
        mins = minuscule_vertices(d)
        if d.family == "A" and mins != frozenset(d.vertices):
            failures.append(f"{d}: minuscule set {sorted(mins)}")
        if expect is not None and mins != frozenset(expect):
            failures.append(f"{d}: minuscule set {sorted(mins)} != {sorted(expect)}")
        nroots = len(positive_roots(d))
        if nroots != d.rank * coxeter_number(d) // 2:
            failures.append(f"{d}: |roots| != rank*h/2")
        for q in some_orientations(d, 3, seed):
            ar = knit(q)
            if len(ar.nodes) != nroots:
                failures.append(f"{q}: AR node count {len(ar.nodes)} != {nroots}")
            for m in sorted(mins):
                poset = poset_of(ar, m)
                ref = reference_minuscule_poset(d, m)
                ok, _ = is_isomorphic(poset, ref)
                if not ok:
                    failures.append(f"{q} m={m}: poset not isomorphic to its reference shape")
    ok = not failures
    return _result(
        12, "structural checks", ok,
        "reference shapes + minuscule sets + root counts" if ok else "; ".join(failures[:3]), t0,
    )


ALL_CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
]


def run_all(seed=0, quick=False, out=print):
    results = []
    for fn in ALL_CRITERIA:
        res = fn(seed=seed, quick=quick)
        results.append(res)
        if out:
            out(str(res))
    return results
