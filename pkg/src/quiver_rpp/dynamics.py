"""Orbit toggles, promotion and the periodicity check.

T_i toggles every element of the minuscule poset lying in the tau-orbit of the
projective at i; those elements are never related by a cover, so the
toggles commute and one simultaneous update is exact.  Promotion composes
the T_i in an admissible vertex order (every arrow's target before its
source, so the internal relabeling makes arrows point from larger to
smaller labels).  Any two admissible orders differ by swaps of vertices
whose orbits share no cover, so the composite is order-independent; this is
still verified empirically by check_periodicity.
"""

import random
from dataclasses import dataclass, field

from .dynkin import coxeter_number
from .poset import RPP, RPPError


def orbit_elements(poset, i):
    out = [
        (poset.annotations[x]["position"], x)
        for x in poset.elements
        if poset.annotations[x]["orbit"] == i
    ]
    return [x for _, x in sorted(out)]


def _toggle_all(poset, values, elems, bound):
    updates = {}
    for x in elems:
        hi = max((values[y] for y in poset.upper_covers(x)), default=0)
        lower = poset.lower_covers(x)
        lo = min((values[y] for y in lower)) if lower else bound
        updates[x] = hi + lo - values[x]
    values.update(updates)


def orbit_toggle(rpp, i):
    """T_i: toggle every in-poset element of the tau-orbit labeled i."""
    if rpp.bound is None:
        raise RPPError("orbit toggles need a finite bound")
    values = dict(rpp.values)
    _toggle_all(rpp.poset, values, orbit_elements(rpp.poset, i), rpp.bound)
    return rpp.with_values(values)


def admissible_vertex_order(q):
    """Quiver vertices ordered targets-before-sources (deterministic).

    Relabeling vertex k-th in this order with label k makes every arrow run
    from a larger label to a smaller one, the standing assumption for promotion.
    """
    out_deg = {v: 0 for v in q.vertices}
    for s, _ in q.arrows:
        out_deg[s] += 1
    ready = sorted(v for v in q.vertices if out_deg[v] == 0)
    order = []
    seen = set()
    while ready:
        v = ready.pop(0)
        order.append(v)
        seen.add(v)
        for s, t in q.arrows:
            if t == v and s not in seen:
                out_deg[s] -= 1
                if out_deg[s] == 0:
                    ready.append(s)
        ready.sort()
    return order


def promotion(rpp, q, order=None):
    """Promotion: T_n o ... o T_1 in an admissible labeling of q."""
    if order is None:
        order = admissible_vertex_order(q)
    out = rpp
    for i in order:
        out = orbit_toggle(out, i)
    return out


def random_rpp(poset, bound, rng):
    """Uniform-per-element random RPP: walk from maxima downward, drawing
    each value between the max of its upper covers and the bound."""
    values = {}
    for x in reversed(poset.linear_extension()):
        lo = max((values[y] for y in poset.upper_covers(x)), default=0)
        values[x] = rng.randint(lo, bound)
    return RPP(poset, values, bound)


@dataclass
class PeriodicityReport:
    diagram: str
    m: int
    bound: int
    trials: int
    coxeter: int
    passed: bool
    failures: int = 0
    smaller_periods: dict = field(default_factory=dict)
    order_dependent: bool = False

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.smaller_periods:
            extra = f" smaller-periods={dict(self.smaller_periods)}"
        if self.order_dependent:
            extra += " (admissible-order dependence detected!)"
        return (
            f"[{verdict}] promotion^h = id on {self.diagram} m={self.m} N={self.bound}: "
            f"h={self.coxeter}, {self.trials} trials, {self.failures} failures{extra}"
        )


def check_periodicity(q, m, bound, trials, seed=0):
    """Sample random bounded RPPs and verify promotion^h is the identity.

    Also reports any smaller period observed and whether a second admissible
    vertex order ever disagrees with the canonical one.
    """
    from .arquiver import knit
    from .bijection import poset_of

    ar = knit(q)
    poset = poset_of(ar, m)
    h = coxeter_number(q.diagram)
    rng = random.Random(f"{seed}|{q}|{m}|{bound}")
    order = admissible_vertex_order(q)
    alt = _alternate_admissible_order(q)
    report = PeriodicityReport(str(q.diagram), m, bound, trials, h, True)
    periods = {}
    for _ in range(trials):
        start = random_rpp(poset, bound, rng)
        cur = start
        period = None
        for step in range(1, h + 1):
            nxt = promotion(cur, q, order)
            if alt is not None and promotion(cur, q, alt) != nxt:
                report.order_dependent = True
            cur = nxt
            if period is None and cur == start:
                period = step
        if cur != start:
            report.failures += 1
        elif period is not None and period < h:
            periods[period] = periods.get(period, 0) + 1
    report.smaller_periods = periods
    report.passed = report.failures == 0 and not report.order_dependent
    return report


def _alternate_admissible_order(q):
    """A second admissible order when one exists (reversed tie-breaking)."""
    out_deg = {v: 0 for v in q.vertices}
    for s, _ in q.arrows:
        out_deg[s] += 1
    ready = sorted((v for v in q.vertices if out_deg[v] == 0), reverse=True)
    order = []
    seen = set()
    while ready:
        v = ready.pop(0)
        order.append(v)
        seen.add(v)
        for s, t in q.arrows:
            if t == v and s not in seen:
                out_deg[s] -= 1
                if out_deg[s] == 0:
                    ready.append(s)
        ready.sort(reverse=True)
    canonical = admissible_vertex_order(q)
    return order if order != canonical else None
