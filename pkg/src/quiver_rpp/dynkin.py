"""Simply-laced Dynkin diagrams and their root-system data.

Vertex labeling convention: A_n is the path 1-2-...-n; D_n is the path 1-...-(n-2) with both n-1 and n
attached to n-2; E_6 is the path 1-...-5 with 6 attached to 3; E_7 is the
path 1-...-6 with 7 attached to 3.  E_8 is deliberately unsupported (it has
no minuscule vertex).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import poset as poset_mod


def _edges_for(family, rank):
    path = [(i, i + 1) for i in range(1, rank)]
    if family == "A":
        return path
    if family == "D":
        return [(i, i + 1) for i in range(1, rank - 2)] + [(rank - 2, rank - 1), (rank - 2, rank)]
    # E_6 / E_7: path on 1..rank-1, branch vertex 3 carries the last label
    return [(i, i + 1) for i in range(1, rank - 1)] + [(3, rank)]


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A":
            ok = self.rank >= 1
        elif self.family == "D":
            ok = self.rank >= 4
        elif self.family == "E":
            ok = self.rank in (6, 7)
        else:
            ok = False
        if not ok:
            raise ValueError(f"unsupported diagram {self.family}{self.rank}")

    @property
    def vertices(self):
        return range(1, self.rank + 1)

    @property
    def edges(self):
        return frozenset(frozenset(e) for e in _edges_for(self.family, self.rank))

    def edge_list(self):
        """Edges as sorted (low, high) pairs, in the labeling convention above."""
        return [tuple(sorted(e)) for e in _edges_for(self.family, self.rank)]

    def neighbors(self, v):
        return sorted(w for e in self.edge_list() for w in e if v in e and w != v)

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_diagram(text):
    """Parse a diagram literal such as 'A4', 'D5', 'E6'."""
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in "ADE":
        raise ValueError(f"bad diagram literal {text!r}")
    return DynkinDiagram(text[0].upper(), int(text[1:]))


def cartan_matrix(diagram):
    n = diagram.rank
    c = 2 * np.eye(n, dtype=np.int64)
    for a, b in diagram.edge_list():
        c[a - 1, b - 1] = -1
        c[b - 1, a - 1] = -1
    return c


@lru_cache(maxsize=None)
def positive_roots(diagram):
    """All positive roots as coefficient tuples, by additive closure.

    Starts from the simple roots and repeatedly adds a simple root alpha_i to
    a known root beta whenever the symmetrized Cartan pairing <beta, alpha_i>
    is -1 (the simply-laced condition for beta + alpha_i to be a root).
    """
    c = cartan_matrix(diagram)
    n = diagram.rank
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            pair = c @ np.array(beta, dtype=np.int64)
            for i in range(n):
                if pair[i] == -1:
                    gamma = list(beta)
                    gamma[i] += 1
                    gamma = tuple(gamma)
                    if gamma not in roots:
                        roots.add(gamma)
                        new.append(gamma)
        frontier = new
    return frozenset(roots)


@lru_cache(maxsize=None)
def coxeter_number(diagram):
    """Multiplicative order of the Coxeter element s_1 s_2 ... s_n.

    The order is basis independent, so the fixed vertex order is fine.
    """
    c = cartan_matrix(diagram)
    n = diagram.rank
    cox = np.eye(n, dtype=np.int64)
    for i in range(n):
        refl = np.eye(n, dtype=np.int64)
        refl[i, :] -= c[i, :]
        cox = refl @ cox
    power = cox.copy()
    order = 1
    while not np.array_equal(power, np.eye(n, dtype=np.int64)):
        power = power @ cox
        order += 1
        if order > 100:
            raise RuntimeError("Coxeter element order did not terminate")
    return order


@lru_cache(maxsize=None)
def minuscule_vertices(diagram):
    """Vertices at which every positive root has coefficient 0 or 1."""
    out = set(diagram.vertices)
    for root in positive_roots(diagram):
        for v in list(out):
            if root[v - 1] > 1:
                out.discard(v)
    return frozenset(out)


def reference_minuscule_poset(diagram, m):
    """The catalogued isomorphism type of the minuscule poset for (diagram, m).

    Built from primitives only: chain products and the order-ideal operator J.
    """
    if m not in minuscule_vertices(diagram):
        raise ValueError(f"vertex {m} is not minuscule in {diagram}")
    fam, n = diagram.family, diagram.rank
    if fam == "A":
        return poset_mod.chain_product(m, n + 1 - m)
    if fam == "D":
        if m == 1:
            p = poset_mod.chain_product(2, 2)
            for _ in range(n - 3):
                p = poset_mod.order_ideals(p)
            return p
        p = poset_mod.chain_product(2, n - 2)
        return poset_mod.order_ideals(p)
    p = poset_mod.chain_product(2, 3)
    for _ in range(n - 4):  # E_6 -> J^2, E_7 -> J^3
        p = poset_mod.order_ideals(p)
    return p
