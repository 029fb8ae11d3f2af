"""Finite posets, reverse plane partitions and the toggle operation.

A Poset is stored by its Hasse diagram.  Elements are arbitrary hashable
ids; the minuscule poset built from an AR quiver annotates each element with
its dimension vector, total dimension, tau-orbit label and position along
the orbit.  RPP values are plain Python ints, so huge bounds never overflow.
"""

IDEAL_GUARD = 2**24


class PosetError(ValueError):
    pass


class Poset:
    """A finite poset given by its cover relations (Hasse diagram)."""

    def __init__(self, elements, covers, annotations=None):
        self.elements = list(elements)
        eset = set(self.elements)
        if len(eset) != len(self.elements):
            raise PosetError("duplicate elements")
        self.covers = set()
        for lo, hi in covers:
            if lo not in eset or hi not in eset:
                raise PosetError(f"cover ({lo}, {hi}) uses unknown element")
            self.covers.add((lo, hi))
        self.up = {x: [] for x in self.elements}
        self.down = {x: [] for x in self.elements}
        for lo, hi in self.covers:
            self.up[lo].append(hi)
            self.down[hi].append(lo)
        self.annotations = dict(annotations or {})
        self._leq = None
        self._check_hasse()

    def _check_hasse(self):
        self.linear_extension()  # raises on cycles
        # no cover may be implied by a longer chain
        for lo, hi in self.covers:
            for mid in self.up[lo]:
                if mid != hi and self.leq(mid, hi):
                    raise PosetError(f"cover ({lo}, {hi}) is a transitive shortcut")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.up

    def upper_covers(self, x):
        return self.up[x]

    def lower_covers(self, x):
        return self.down[x]

    def linear_extension(self):
        """Elements listed from minimal to maximal (Kahn, deterministic)."""
        indeg = {x: len(self.down[x]) for x in self.elements}
        ready = [x for x in self.elements if indeg[x] == 0]
        out = []
        while ready:
            x = ready.pop()
            out.append(x)
            for y in self.up[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
        if len(out) != len(self.elements):
            raise PosetError("cover relation has a cycle")
        return out

    def _closure(self):
        if self._leq is None:
            leq = {x: {x} for x in self.elements}
            for x in reversed(self.linear_extension()):
                for y in self.up[x]:
                    leq[x] |= leq[y]
            self._leq = leq
        return self._leq

    def leq(self, x, y):
        return y in self._closure()[x]

    def maximal_elements(self):
        return [x for x in self.elements if not self.up[x]]

    def minimal_elements(self):
        return [x for x in self.elements if not self.down[x]]

    def dual(self):
        return Poset(self.elements, {(b, a) for a, b in self.covers}, self.annotations)


def chain_product(a, b):
    """The grid poset [a] x [b] with componentwise order."""
    if a < 1 or b < 1:
        raise PosetError("chain lengths must be positive")
    elements = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
    covers = set()
    for i, j in elements:
        if i < a:
            covers.add(((i, j), (i + 1, j)))
        if j < b:
            covers.add(((i, j), (i, j + 1)))
    return Poset(elements, covers)


def order_ideals(p):
    """The distributive lattice J(P) of order ideals of p, ordered by inclusion.

    Covers are the pairs of ideals differing in a single element.  Guarded
    against combinatorial explosion.
    """
    empty = frozenset()
    seen = {empty}
    queue = [empty]
    covers = set()
    while queue:
        ideal = queue.pop()
        for x in p.elements:
            if x in ideal:
                continue
            if all(y in ideal for y in p.lower_covers(x)):
                bigger = ideal | {x}
                covers.add((ideal, bigger))
                if bigger not in seen:
                    seen.add(bigger)
                    queue.append(bigger)
                    if len(seen) > IDEAL_GUARD:
                        raise PosetError("order ideal enumeration guard exceeded")
    elements = sorted(seen, key=lambda s: (len(s), sorted(map(str, s))))
    return Poset(elements, covers)


def is_isomorphic(p1, p2):
    """Exact poset isomorphism test; returns (flag, witness or None).

    Backtracking over elements ordered by rarity of their invariant profile
    (up-degree, down-degree, height above minimum, depth below maximum).
    """
    if len(p1) != len(p2):
        return False, None

    def profiles(p):
        ext = p.linear_extension()
        height = {}
        for x in ext:
            height[x] = 1 + max((height[y] for y in p.lower_covers(x)), default=-1)
        depth = {}
        for x in reversed(ext):
            depth[x] = 1 + max((depth[y] for y in p.upper_covers(x)), default=-1)
        return {
            x: (len(p.up[x]), len(p.down[x]), height[x], depth[x]) for x in p.elements
        }

    prof1, prof2 = profiles(p1), profiles(p2)
    counts1 = {}
    counts2 = {}
    for v in prof1.values():
        counts1[v] = counts1.get(v, 0) + 1
    for v in prof2.values():
        counts2[v] = counts2.get(v, 0) + 1
    if counts1 != counts2:
        return False, None

    order = sorted(p1.elements, key=lambda x: (counts1[prof1[x]], str(x)))
    candidates = {x: [y for y in p2.elements if prof2[y] == prof1[x]] for x in order}
    mapping = {}
    used = set()

    def compatible(x, y):
        for lo in p1.lower_covers(x):
            if lo in mapping and mapping[lo] not in p2.down[y]:
                return False
        for hi in p1.upper_covers(x):
            if hi in mapping and mapping[hi] not in p2.up[y]:
                return False
        # covers must map onto covers, both directions
        for lo2 in p2.lower_covers(y):
            if lo2 in used:
                x2 = next(a for a, b in mapping.items() if b == lo2)
                if x2 not in p1.down[x]:
                    return False
        for hi2 in p2.upper_covers(y):
            if hi2 in used:
                x2 = next(a for a, b in mapping.items() if b == hi2)
                if x2 not in p1.up[x]:
                    return False
        return True

    def extend(k):
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[x]:
            if y in used or not compatible(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if extend(k + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    if extend(0):
        return True, dict(mapping)
    return False, None


# ---------------------------------------------------------------------------
# Reverse plane partitions
# ---------------------------------------------------------------------------


class RPPError(ValueError):
    pass


class RPP:
    """An order-reversing filling of a poset, optionally bounded by N."""

    def __init__(self, poset, values, bound=None):
        self.poset = poset
        self.values = dict(values)
        self.bound = bound
        if set(self.values) != set(poset.elements):
            raise RPPError("values must cover exactly the poset elements")
        for x, v in self.values.items():
            if v < 0:
                raise RPPError(f"negative value at {x}")
            if bound is not None and v > bound:
                raise RPPError(f"value at {x} exceeds bound {bound}")
        for lo, hi in poset.covers:
            if self.values[lo] < self.values[hi]:
                raise RPPError(f"not order-reversing on cover ({lo}, {hi})")

    def __getitem__(self, x):
        return self.values[x]

    def __eq__(self, other):
        return (
            isinstance(other, RPP)
            and self.values == other.values
            and self.bound == other.bound
        )

    def __hash__(self):
        return hash((frozenset(self.values.items()), self.bound))

    def weight(self):
        return sum(self.values.values())

    def with_values(self, values):
        return RPP(self.poset, values, self.bound)


def zero_rpp(poset, bound=None):
    return RPP(poset, {x: 0 for x in poset.elements}, bound)


def toggle(rpp, x):
    """Toggle the filling at x: max over upper covers + min over lower covers
    minus the old value.  A maximal x contributes 0 for the max term; a
    minimal x contributes the bound N for the min term, so a finite bound is
    required there.
    """
    poset = rpp.poset
    if x not in poset:
        raise RPPError(f"{x} is not a poset element")
    hi = max((rpp[y] for y in poset.upper_covers(x)), default=0)
    lower = poset.lower_covers(x)
    if lower:
        lo = min(rpp[y] for y in lower)
    else:
        if rpp.bound is None:
            raise RPPError(f"toggle at minimal element {x} needs a finite bound")
        lo = rpp.bound
    values = dict(rpp.values)
    values[x] = hi + lo - rpp[x]
    return rpp.with_values(values)


# ---------------------------------------------------------------------------
# The minuscule poset of an AR quiver
# ---------------------------------------------------------------------------


def minuscule_poset(ar, m):
    """The minuscule poset: transitive closure of the AR-quiver arrows restricted to the
    indecomposables supported at the minuscule vertex m.

    Elements are the dimension-vector tuples.  Annotations per element:
    ``dimvec``, ``dim`` (total dimension), ``orbit`` (vertex label of the
    tau-orbit) and ``position`` (steps from the orbit's projective).
    """
    from . import dynkin as dynkin_mod

    if m not in dynkin_mod.minuscule_vertices(ar.quiver.diagram):
        raise PosetError(f"vertex {m} is not minuscule in {ar.quiver.diagram}")
    keep = [nid for nid in range(len(ar.nodes)) if ar.dims(nid)[m - 1] == 1]
    keep_set = set(keep)
    adj = {nid: [w for w in ar.arrows_out(nid) if w in keep_set] for nid in keep}
    # reachability within the restricted subquiver
    reach = {nid: set() for nid in keep}
    topo = []
    indeg = {nid: 0 for nid in keep}
    for nid in keep:
        for w in adj[nid]:
            indeg[w] += 1
    stack = [nid for nid in keep if indeg[nid] == 0]
    while stack:
        v = stack.pop()
        topo.append(v)
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    for v in reversed(topo):
        for w in adj[v]:
            reach[v] |= {w} | reach[w]
    elements = [ar.dims(nid) for nid in keep]
    covers = set()
    for v in keep:
        for w in reach[v]:
            if not any(w in reach[u] for u in reach[v]):
                covers.add((ar.dims(v), ar.dims(w)))
    annotations = {}
    for nid in keep:
        dv = ar.dims(nid)
        annotations[dv] = {
            "dimvec": dv,
            "dim": sum(dv),
            "orbit": ar.orbit_label(nid),
            "position": ar.orbit_position(nid),
        }
    return Poset(elements, covers, annotations)
