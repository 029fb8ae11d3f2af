import itertools

import pytest

from quiver_rpp.dynkin import (
    DynkinDiagram,
    cartan_matrix,
    coxeter_number,
    minuscule_vertices,
    parse_diagram,
    positive_roots,
    reference_minuscule_poset,
)

SUPPORTED = [
    DynkinDiagram("A", n) for n in range(1, 7)
] + [DynkinDiagram("D", 4), DynkinDiagram("D", 5), DynkinDiagram("D", 6),
     DynkinDiagram("E", 6), DynkinDiagram("E", 7)]


def test_diagram_validation():
    with pytest.raises(ValueError):
        DynkinDiagram("E", 8)
    with pytest.raises(ValueError):
        DynkinDiagram("D", 3)
    with pytest.raises(ValueError):
        DynkinDiagram("B", 2)
    assert str(parse_diagram("d5")) == "D5"


def test_diagrams_are_trees():
    for d in SUPPORTED:
        assert len(d.edge_list()) == d.rank - 1


def test_root_counts():
    # A_1 is trivial; A_4 matches the ten indecomposables of the worked
    # AR-quiver example; D_4 count frozen from brute-force closure
    assert positive_roots(DynkinDiagram("A", 1)) == frozenset({(1,)})
    assert len(positive_roots(DynkinDiagram("A", 4))) == 10
    assert len(positive_roots(DynkinDiagram("D", 4))) == 12


def brute_force_roots(d):
    """Oracle: enumerate all small nonnegative vectors with norm 2 under the
    Cartan form (simply laced: roots are exactly those)."""
    c = cartan_matrix(d)
    n = d.rank
    out = set()
    for v in itertools.product(range(4), repeat=n):
        if sum(v) == 0:
            continue
        norm = sum(v[i] * c[i][j] * v[j] for i in range(n) for j in range(n))
        if norm == 2:
            out.add(v)
    return out


@pytest.mark.parametrize("name", ["A3", "A4", "D4", "D5", "E6"])
def test_roots_match_norm_oracle(name):
    d = parse_diagram(name)
    assert positive_roots(d) == frozenset(brute_force_roots(d))


def test_coxeter_numbers():
    assert coxeter_number(DynkinDiagram("A", 1)) == 2
    assert coxeter_number(DynkinDiagram("A", 4)) == 5
    assert coxeter_number(DynkinDiagram("E", 6)) == 12
    assert coxeter_number(DynkinDiagram("E", 7)) == 18
    assert coxeter_number(DynkinDiagram("D", 4)) == 6


def test_root_count_formula():
    for d in SUPPORTED:
        assert len(positive_roots(d)) == d.rank * coxeter_number(d) // 2


def test_minuscule_vertices_known_sets():
    assert minuscule_vertices(DynkinDiagram("A", 5)) == frozenset({1, 2, 3, 4, 5})
    assert minuscule_vertices(DynkinDiagram("D", 5)) == frozenset({1, 4, 5})
    assert minuscule_vertices(DynkinDiagram("E", 6)) == frozenset({1, 5})
    assert minuscule_vertices(DynkinDiagram("E", 7)) == frozenset({6})


def test_root_coefficients_and_support():
    caps = {"A": 1, "D": 2, "E": 4}  # E6 tops out at 3, E7 at 4
    for d in SUPPORTED:
        cap = caps[d.family] if (d.family, d.rank) != ("E", 6) else 3
        for root in positive_roots(d):
            assert all(0 <= x <= cap for x in root)
            if max(root) >= 3:
                assert d.family == "E"
            support = [v for v in d.vertices if root[v - 1]]
            # connected support within the tree
            seen = {support[0]}
            frontier = [support[0]]
            while frontier:
                v = frontier.pop()
                for w in d.neighbors(v):
                    if w in support and w not in seen:
                        seen.add(w)
                        frontier.append(w)
            assert seen == set(support)


def test_reference_poset_sizes():
    # frozen from brute-force ideal enumeration
    assert len(reference_minuscule_poset(DynkinDiagram("A", 4), 3)) == 6
    assert len(reference_minuscule_poset(DynkinDiagram("D", 5), 4)) == 10
    assert len(reference_minuscule_poset(DynkinDiagram("E", 6), 1)) == 16
    assert len(reference_minuscule_poset(DynkinDiagram("E", 7), 6)) == 27
    with pytest.raises(ValueError):
        reference_minuscule_poset(DynkinDiagram("E", 6), 3)
