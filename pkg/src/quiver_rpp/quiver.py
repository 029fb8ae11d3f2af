"""Dynkin quivers and their representations over the fixed prime field.

A representation stores one matrix per arrow (shape d_target x d_source).
Indecomposables are built by seeded random sampling until the endomorphism
space is one-dimensional, and cached per (quiver, root) so every consumer
works with the same representative.
"""

from dataclasses import dataclass

import numpy as np

from . import modarith as fp
from .dynkin import DynkinDiagram, parse_diagram, positive_roots


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    diagram: DynkinDiagram
    arrows: tuple  # (source, target) pairs, one orientation per diagram edge

    def __post_init__(self):
        undirected = {frozenset(a) for a in self.arrows}
        if len(undirected) != len(self.arrows):
            raise QuiverError("duplicate or opposite double arrows")
        if undirected != set(self.diagram.edges):
            raise QuiverError("arrows do not orient the diagram's edge set")

    @property
    def vertices(self):
        return self.diagram.vertices

    @property
    def rank(self):
        return self.diagram.rank

    def arrows_from(self, v):
        return [a for a in self.arrows if a[0] == v]

    def arrows_into(self, v):
        return [a for a in self.arrows if a[1] == v]

    def __str__(self):
        return f"{self.diagram}:" + ",".join(f"{s}>{t}" for s, t in self.arrows)


def linear_quiver(n, direction="left"):
    """The A_n path with all arrows pointing toward vertex 1 ('left') or n."""
    diagram = DynkinDiagram("A", n)
    if direction == "left":
        arrows = tuple((i + 1, i) for i in range(1, n))
    else:
        arrows = tuple((i, i + 1) for i in range(1, n))
    return Quiver(diagram, arrows)


def bifurcated_quiver(n, m):
    """The A_n orientation 1 -> ... -> m <- ... <- n."""
    arrows = tuple((i, i + 1) for i in range(1, m)) + tuple(
        (i + 1, i) for i in range(m, n)
    )
    return Quiver(DynkinDiagram("A", n), arrows)


def canonical_quiver(diagram):
    """Every edge oriented toward its smaller label."""
    return Quiver(diagram, tuple((b, a) for a, b in diagram.edge_list()))


def random_orientation(diagram, seed):
    import random

    rng = random.Random(seed)
    arrows = tuple((a, b) if rng.random() < 0.5 else (b, a) for a, b in diagram.edge_list())
    return Quiver(diagram, arrows)


def parse_quiver(text):
    """Parse 'A5:1<2<3<4<5' or 'D5:2>1,3>2,4>3,5>3' into a Quiver.

    Each comma-separated token is a chain of vertex labels joined by '<' or
    '>' giving the arrow direction between consecutive labels.
    """
    head, sep, body = text.partition(":")
    diagram = parse_diagram(head)
    if not sep:
        return canonical_quiver(diagram)
    arrows = []
    for token in body.split(","):
        token = token.strip()
        parts = []
        num = ""
        for ch in token:
            if ch in "<>":
                parts.append(num)
                parts.append(ch)
                num = ""
            else:
                num += ch
        parts.append(num)
        labels = [int(x) for x in parts[::2]]
        ops = parts[1::2]
        if len(labels) != len(ops) + 1 or not ops:
            raise QuiverError(f"bad quiver token {token!r}")
        for a, op, b in zip(labels, ops, labels[1:]):
            arrows.append((b, a) if op == "<" else (a, b))
    return Quiver(diagram, tuple(arrows))


# ---------------------------------------------------------------------------
# digit-string serialization of dimension vectors
# ---------------------------------------------------------------------------


def format_dimvec(dims):
    if all(d <= 9 for d in dims):
        return "".join(str(d) for d in dims)
    return ",".join(str(d) for d in dims)


def parse_dimvec(text, rank):
    text = text.strip()
    if "," in text:
        dims = tuple(int(x) for x in text.split(","))
    else:
        dims = tuple(int(ch) for ch in text)
    if len(dims) != rank or any(d < 0 for d in dims):
        raise QuiverError(f"bad dimension vector {text!r}")
    return dims


def format_repclass(rep):
    items = sorted(rep.items(), key=lambda kv: kv[0])
    return ",".join(f"{format_dimvec(k)}:{v}" for k, v in items)


def parse_repclass(text, rank):
    rep = {}
    text = text.strip()
    if not text:
        return rep
    for token in text.split(","):
        key, sep, mult = token.partition(":")
        dims = parse_dimvec(key, rank)
        c = int(mult) if sep else 1
        if c < 0:
            raise QuiverError("multiplicities must be nonnegative")
        if c:
            rep[dims] = rep.get(dims, 0) + c
    return rep


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------


class Representation:
    """dims per vertex plus one matrix per arrow over F_P."""

    def __init__(self, quiver, dims, maps):
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != quiver.rank or any(d < 0 for d in self.dims):
            raise QuiverError("bad dimension vector")
        self.maps = {}
        for a in quiver.arrows:
            mat = fp.as_matrix(maps[a])
            s, t = a
            if mat.shape != (self.dims[t - 1], self.dims[s - 1]):
                raise QuiverError(f"matrix shape mismatch on arrow {a}")
            self.maps[a] = mat

    def dim(self, v):
        return self.dims[v - 1]

    def total_dim(self):
        return sum(self.dims)


def zero_representation(quiver):
    n = quiver.rank
    return Representation(
        quiver, (0,) * n, {a: fp.zeros(0, 0) for a in quiver.arrows}
    )


def projective_dims(q, i):
    """Dimension vector of the projective at i: 1 at every vertex reachable
    from i by a directed path (a tree has at most one path)."""
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for _, t in q.arrows_from(v):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return tuple(int(v in seen) for v in q.vertices)


def injective_dims(q, i):
    """Dimension vector of the injective at i: 1 at every vertex that reaches i."""
    seen = {i}
    stack = [i]
    while stack:
        v = stack.pop()
        for s, _ in q.arrows_into(v):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return tuple(int(v in seen) for v in q.vertices)


def hom_basis(v, w):
    """Basis of Hom(v, w): all vertex-wise maps commuting with the arrow maps.

    Solves the stacked intertwining system theta_t f_a = g_a theta_s by one
    Gaussian elimination over F_P.  Each morphism is returned as a dict
    vertex -> matrix of shape (w.dim, v.dim).
    """
    if v.quiver != w.quiver:
        raise QuiverError("representations live on different quivers")
    q = v.quiver
    sizes = [w.dim(i) * v.dim(i) for i in q.vertices]
    offsets = np.concatenate(([0], np.cumsum(sizes)))
    total = int(offsets[-1])
    if total == 0:
        return []
    blocks = []
    for (s, t) in q.arrows:
        f = v.maps[(s, t)]
        g = w.maps[(s, t)]
        rows = w.dim(t) * v.dim(s)
        if rows == 0:
            continue
        block = fp.zeros(rows, total)
        if sizes[t - 1]:
            # theta_t f_a, coefficient on theta_t[x, z] is f[z, y]
            block[:, offsets[t - 1] : offsets[t]] = np.kron(
                np.eye(w.dim(t), dtype=np.int64), f.T
            )
        if sizes[s - 1]:
            # -g_a theta_s, coefficient on theta_s[z, y] is -g[x, z]
            block[:, offsets[s - 1] : offsets[s]] = (
                block[:, offsets[s - 1] : offsets[s]]
                - np.kron(g, np.eye(v.dim(s), dtype=np.int64))
            ) % fp.P
        blocks.append(block)
    if blocks:
        system = np.vstack(blocks)
        kernel = fp.nullspace(system)
    else:
        kernel = fp.identity(total)
    basis = []
    for row in kernel:
        theta = {}
        for i in q.vertices:
            chunk = row[offsets[i - 1] : offsets[i]]
            theta[i] = chunk.reshape(w.dim(i), v.dim(i)).copy()
        basis.append(theta)
    return basis


def hom_dim(v, w):
    return len(hom_basis(v, w))


class SamplingBudgetError(RuntimeError):
    pass


def build_indecomposable(q, root, seed=0, max_tries=32):
    """A representation with dims = root and one-dimensional End space.

    For a positive root the generic matrix choice is the indecomposable
    (its orbit is dense), so resampling passes almost immediately over the
    large default modulus.
    """
    if root not in positive_roots(q.diagram):
        raise QuiverError(f"{root} is not a positive root of {q.diagram}")
    rng = np.random.default_rng((seed, 0xD15C0) + tuple(root))
    for _ in range(max_tries):
        maps = {}
        for (s, t) in q.arrows:
            maps[(s, t)] = fp.random_matrix(rng, root[t - 1], root[s - 1])
        rep = Representation(q, root, maps)
        if hom_dim(rep, rep) == 1:
            return rep
    raise SamplingBudgetError(f"no brick found for root {root} in {max_tries} tries")


_INDEC_CACHE = {}


def indecomposable(q, root):
    """Cached representative of the indecomposable with the given root."""
    key = (q, tuple(root))
    rep = _INDEC_CACHE.get(key)
    if rep is None:
        rep = build_indecomposable(q, tuple(root))
        _INDEC_CACHE[key] = rep
    return rep


def direct_sum(parts):
    """Block-diagonal sum of (representation, multiplicity) pairs."""
    parts = [(rep, int(mult)) for rep, mult in parts if mult > 0]
    if not parts:
        raise QuiverError("empty direct sum; pass at least one summand")
    q = parts[0][0].quiver
    if any(rep.quiver != q for rep, _ in parts):
        raise QuiverError("summands live on different quivers")
    dims = tuple(
        sum(rep.dim(i) * mult for rep, mult in parts) for i in q.vertices
    )
    maps = {}
    for a in q.arrows:
        s, t = a
        mat = fp.zeros(dims[t - 1], dims[s - 1])
        ro = co = 0
        for rep, mult in parts:
            for _ in range(mult):
                block = rep.maps[a]
                mat[ro : ro + rep.dim(t), co : co + rep.dim(s)] = block
                ro += rep.dim(t)
                co += rep.dim(s)
        maps[a] = mat
    return Representation(q, dims, maps)
