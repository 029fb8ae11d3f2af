"""The Auslander-Reiten quiver of a Dynkin quiver, built by knitting.

Nodes are created slice by slice from the projectives via mesh additivity:
dims(tau^{-1} X) = sum of dims over arrows X -> E, minus dims(X).  Arrows
between projectives P_i -> P_j exist exactly when the quiver has an arrow
j -> i; every other arrow E -> tau^{-1} X is forced by a mesh.  Injectives
are known a priori (reachability into a vertex), which is where each
tau-orbit stops.

Node ids are assigned in creation order, so they are canonical for a given
quiver.  The orbit label of a node is the vertex of the projective its orbit
starts at; the position counts tau^{-1} steps from that projective.
"""

import random
from dataclasses import dataclass
from functools import lru_cache

from .dynkin import positive_roots
from .quiver import injective_dims, projective_dims


class KnittingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ARNode:
    nid: int
    dims: tuple
    orbit: int  # vertex label of the orbit's projective
    position: int  # tau^{-1} steps from that projective


class ARQuiver:
    def __init__(self, quiver, nodes, arrows, tau):
        self.quiver = quiver
        self.nodes = nodes
        self.arrows = frozenset(arrows)
        self.tau = dict(tau)  # node id -> node id, undefined on projectives
        self.tau_inv = {v: k for k, v in self.tau.items()}
        self._out = {n.nid: [] for n in nodes}
        self._in = {n.nid: [] for n in nodes}
        for a, b in sorted(self.arrows):
            self._out[a].append(b)
            self._in[b].append(a)
        self.by_dims = {n.dims: n.nid for n in nodes}

    def dims(self, nid):
        return self.nodes[nid].dims

    def orbit_label(self, nid):
        return self.nodes[nid].orbit

    def orbit_position(self, nid):
        return self.nodes[nid].position

    def arrows_out(self, nid):
        return self._out[nid]

    def arrows_in(self, nid):
        return self._in[nid]

    def node_of(self, dims):
        return self.by_dims[tuple(dims)]

    def tau_inv_chain(self, nid):
        """tau^{-1}(nid), tau^{-2}(nid), ... until the orbit's injective."""
        out = []
        cur = nid
        while cur in self.tau_inv:
            cur = self.tau_inv[cur]
            out.append(cur)
        return out


@lru_cache(maxsize=None)
def knit(q):
    roots = positive_roots(q.diagram)
    injectives = {injective_dims(q, i) for i in q.vertices}
    nodes = []
    arrows = set()
    tau = {}
    resolved = {}  # nid -> tau^{-1} nid, or None once known injective

    for i in q.vertices:
        nodes.append(ARNode(len(nodes), projective_dims(q, i), i, 0))
    by_dims = {n.dims: n.nid for n in nodes}
    for (s, t) in q.arrows:
        arrows.add((by_dims[projective_dims(q, t)], by_dims[projective_dims(q, s)]))

    def out_of(nid):
        return [b for (a, b) in arrows if a == nid]

    def in_of(nid):
        return [a for (a, b) in arrows if b == nid]

    while len(resolved) < len(nodes):
        progressed = False
        for node in nodes:
            nid = node.nid
            if nid in resolved:
                continue
            if any(pred not in resolved for pred in in_of(nid)):
                continue
            # all arrows out of nid are now present
            if node.dims in injectives:
                resolved[nid] = None
                progressed = True
                continue
            mesh = [-d for d in node.dims]
            for succ in out_of(nid):
                for k, d in enumerate(nodes[succ].dims):
                    mesh[k] += d
            mesh = tuple(mesh)
            if any(d < 0 for d in mesh) or mesh not in roots:
                raise KnittingError(
                    f"mesh at {node.dims} produced {mesh}, not a positive root"
                )
            new = ARNode(len(nodes), mesh, node.orbit, node.position + 1)
            if mesh in by_dims:
                raise KnittingError(f"dimension vector {mesh} knitted twice")
            nodes.append(new)
            by_dims[mesh] = new.nid
            tau[new.nid] = nid
            for succ in out_of(nid):
                arrows.add((succ, new.nid))
            resolved[nid] = new.nid
            progressed = True
        if not progressed:
            raise KnittingError("knitting stalled; orientation bookkeeping bug")

    if len(nodes) != len(roots):
        raise KnittingError(
            f"knitted {len(nodes)} nodes but the diagram has {len(roots)} positive roots"
        )
    return ARQuiver(q, nodes, arrows, tau)


def tau_orbit(ar, i):
    """Node ids of the orbit containing the projective at i, from the
    projective to the injective (tau^{-1} direction)."""
    if i not in ar.quiver.vertices:
        raise ValueError(f"no vertex {i}")
    start = next(n.nid for n in ar.nodes if n.orbit == i and n.position == 0)
    return [start] + ar.tau_inv_chain(start)


def opposite_compatible_order(ar, seed=0):
    """A linear order on all node ids such that whenever the AR quiver has an
    arrow X -> Y, Y comes first.  Different seeds sample different orders."""
    rng = random.Random(seed)
    remaining = {n.nid for n in ar.nodes}
    blocked = {nid: len(ar.arrows_out(nid)) for nid in remaining}
    ready = sorted(nid for nid in remaining if blocked[nid] == 0)
    order = []
    while ready:
        idx = rng.randrange(len(ready))
        nid = ready.pop(idx)
        order.append(nid)
        for pred in ar.arrows_in(nid):
            blocked[pred] -= 1
            if blocked[pred] == 0:
                ready.append(pred)
    if len(order) != len(ar.nodes):
        raise KnittingError("AR arrows are cyclic")
    return order


def serialize(ar):
    """Layout-free structured text: nodes, arrows, tau pairs."""
    from .quiver import format_dimvec

    lines = [f"quiver {ar.quiver}"]
    lines.append("nodes")
    for n in ar.nodes:
        lines.append(f"  {n.nid} {format_dimvec(n.dims)} orbit={n.orbit} slice={n.position}")
    lines.append("arrows")
    for a, b in sorted(ar.arrows):
        lines.append(f"  {format_dimvec(ar.dims(a))} -> {format_dimvec(ar.dims(b))}")
    lines.append("tau")
    for src in sorted(ar.tau):
        lines.append(f"  {format_dimvec(ar.dims(src))} -> {format_dimvec(ar.dims(ar.tau[src]))}")
    return "\n".join(lines)
