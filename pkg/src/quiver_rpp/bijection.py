"""The bijection between multiplicity vectors on the minuscule poset and
reverse plane partitions, together with its exact inverse.

Forward recursion: process every indecomposable M_1, ..., M_s in an order
compatible with the opposite of the AR-quiver order, starting from the zero
filling.  At step k, the poset element corresponding to M_k (if any)
receives (max over its upper covers) + c_k, and every in-poset element of
the form tau^{-l}(M_k), l > 0, is toggled.  All updates of one step read the
previous filling; the updated elements lie in a single tau-orbit and are
never cover-related, so this matches sequential toggling in any order.

The procedure never toggles at an element that is minimal among the
already-written ones, so the unbounded convention (min over lower covers of
a minimal element = N) is never consumed; this is asserted.

The inverse replays the same order backwards: re-applying the toggles of
step k undoes them (toggles are involutions and the toggled elements'
neighbors are untouched at step k), after which c_k can be read off and the
element reset to its pre-step value 0.
"""

from functools import lru_cache

from .arquiver import opposite_compatible_order
from .poset import RPP, minuscule_poset


class BijectionError(ValueError):
    pass


@lru_cache(maxsize=None)
def _poset_for(ar, m):
    return minuscule_poset(ar, m)


def poset_of(ar, m):
    """The (cached) annotated minuscule poset of (ar.quiver, m)."""
    return _poset_for(ar, m)


@lru_cache(maxsize=None)
def _step_plan(ar, m, order_seed):
    """For each step: (poset element or None, list of elements to toggle)."""
    order = opposite_compatible_order(ar, order_seed)
    poset = poset_of(ar, m)
    plan = []
    for nid in order:
        dv = ar.dims(nid)
        elem = dv if dv in poset else None
        toggles = tuple(
            ar.dims(t) for t in ar.tau_inv_chain(nid) if ar.dims(t) in poset
        )
        plan.append((nid, elem, toggles))
    return poset, tuple(plan)


def _toggle_value(poset, values, x, *, forbid_minimal=True):
    hi = max((values[y] for y in poset.upper_covers(x)), default=0)
    lower = poset.lower_covers(x)
    if not lower:
        if forbid_minimal:
            raise AssertionError(
                "toggled at a minimal element; the unbounded convention was consumed"
            )
        return hi - values[x]
    lo = min(values[y] for y in lower)
    return hi + lo - values[x]


def to_rpp(ar, m, rep, order_seed=0, trace=None):
    """Map a multiplicity vector over the minuscule poset to its reverse
    plane partition.

    ``rep`` is a dict {dimension vector: multiplicity}.  ``trace``, if given,
    is a list that receives (step index, dims of M_k, filling snapshot)
    after every step that changed the filling.
    """
    poset, plan = _step_plan(ar, m, order_seed)
    for dv, c in rep.items():
        if c < 0:
            raise BijectionError("multiplicities must be nonnegative")
        if c > 0 and dv not in poset:
            raise BijectionError(f"{dv} is not supported at vertex {m}")
    values = {x: 0 for x in poset.elements}
    for k, (nid, elem, toggles) in enumerate(plan, start=1):
        updates = {}
        if elem is not None:
            hi = max((values[y] for y in poset.upper_covers(elem)), default=0)
            updates[elem] = hi + rep.get(elem, 0)
        for z in toggles:
            updates[z] = _toggle_value(poset, values, z)
        if updates:
            values.update(updates)
            if trace is not None:
                trace.append((k, ar.dims(nid), dict(values)))
    return RPP(poset, values)


def from_rpp(ar, m, filling, order_seed=0):
    """Inverse of to_rpp.  ``filling`` may be an RPP or a value dict.

    Raises BijectionError when a recovered multiplicity is negative, which
    happens exactly when the filling is not a valid reverse plane partition.
    """
    poset = poset_of(ar, m)
    if isinstance(filling, RPP):
        values = dict(filling.values)
    else:
        values = dict(filling)
    if set(values) != set(poset.elements):
        raise BijectionError("filling must assign a value to every poset element")
    if any(v < 0 for v in values.values()):
        raise BijectionError("filling has a negative entry")
    _, plan = _step_plan(ar, m, order_seed)
    rep = {}
    for _, elem, toggles in reversed(plan):
        updates = {}
        for z in toggles:
            updates[z] = _toggle_value(poset, values, z)
        if elem is not None:
            hi = max((values[y] for y in poset.upper_covers(elem)), default=0)
            c = values[elem] - hi
            if c < 0:
                raise BijectionError(
                    f"filling is not a reverse plane partition (c < 0 at {elem})"
                )
            if c:
                rep[elem] = c
            updates[elem] = 0
        values.update(updates)
    if any(values[x] != 0 for x in poset.elements):
        raise BijectionError("inverse replay did not return to the zero filling")
    return rep


def rep_weight(poset, rep):
    """Total dimension of the representation described by rep."""
    return sum(c * poset.annotations[dv]["dim"] for dv, c in rep.items())
