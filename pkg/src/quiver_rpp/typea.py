"""Classical type-A correspondences on the rectangle m^(n+1-m).

Conventions (English notation): grids are lists of rows, top row first;
reverse plane partitions increase weakly down and to the right.  The
southeast border of the p x q rectangle is walked from southwest to
northeast -- (p,1), ..., (p,q), (p-1,q), ..., (1,q) -- and this walk
identifies border cells with the n = p+q-1 vertices of the A_n diagram, so
a rim hook corresponds to the dimension vector selecting its cells.

The rim hook whose support interval is [a, b] is anchored at the cell
(n+1-b, a): its cells are exactly the border positions a..b.

Hillman-Grassl extraction: repeatedly take the bottom cell of the leftmost
nonzero column, walk north when the value above equals the current one and
east otherwise, stop at the east end of a row, decrement the path, record
the hook anchored at (end row, start column).  Insertion replays the unique
reverse walk.

The Pak correspondence builds the filling by processing cells along
anti-diagonals starting from the corner (1,1): each cell receives (max of
its north/west neighbors) + its anchor multiplicity, and every cell on its
NW diagonal ray is toggled.
"""

from dataclasses import dataclass


class TypeAError(ValueError):
    pass


@dataclass(frozen=True)
class RectShape:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise TypeAError("rectangle must have positive dimensions")

    @property
    def n(self):
        return self.rows + self.cols - 1

    @classmethod
    def for_vertex(cls, n, m):
        return cls(n + 1 - m, m)


def border_cells(shape):
    """The n southeast-border cells from southwest to northeast, 1-based."""
    p, q = shape.rows, shape.cols
    return [(p, j) for j in range(1, q + 1)] + [(i, q) for i in range(p - 1, 0, -1)]


def dimvec_to_rimhook(dv, shape):
    """Border cells selected by the 1-entries of a dimension vector.

    The dimension vector must be an interval of 1s containing the column
    count m (the minuscule vertex), i.e. a positive root supported at m.
    """
    if len(dv) != shape.n:
        raise TypeAError("dimension vector length does not match the shape")
    ones = [i + 1 for i, d in enumerate(dv) if d == 1]
    if not ones or any(d not in (0, 1) for d in dv):
        raise TypeAError(f"{dv} is not a type-A root")
    if ones != list(range(ones[0], ones[-1] + 1)):
        raise TypeAError(f"{dv} selects non-contiguous border cells")
    if not ones[0] <= shape.cols <= ones[-1]:
        raise TypeAError(f"{dv} is not supported at the minuscule vertex")
    border = border_cells(shape)
    return tuple(border[i - 1] for i in ones)


def rimhook_to_dimvec(cells, shape):
    border = {cell: i + 1 for i, cell in enumerate(border_cells(shape))}
    try:
        ones = sorted(border[c] for c in cells)
    except KeyError:
        raise TypeAError("rim hook contains a non-border cell")
    dv = tuple(int(i + 1 in ones) for i in range(shape.n))
    if dimvec_to_rimhook(dv, shape) != tuple(
        sorted(cells, key=lambda c: border[c])
    ):
        raise TypeAError("cells do not form a valid rim hook")
    return dv


def anchor_of_dimvec(dv, shape):
    """Anchor cell (row, col) of the hook with support interval [a, b]."""
    ones = [i + 1 for i, d in enumerate(dv) if d == 1]
    a, b = ones[0], ones[-1]
    return (shape.n + 1 - b, a)


def dimvec_of_anchor(cell, shape):
    r, c = cell
    if not (1 <= r <= shape.rows and 1 <= c <= shape.cols):
        raise TypeAError(f"anchor {cell} is outside the rectangle")
    a, b = c, shape.n + 1 - r
    return tuple(int(a <= i + 1 <= b) for i in range(shape.n))


def hook_lengths(shape):
    """Multiset of hook lengths of the rectangle, as a sorted list."""
    p, q = shape.rows, shape.cols
    return sorted(q - c + p - r + 1 for r in range(1, p + 1) for c in range(1, q + 1))


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


def check_grid(grid, shape=None):
    p = len(grid)
    if p == 0 or any(len(row) != len(grid[0]) for row in grid):
        raise TypeAError("grid must be rectangular")
    q = len(grid[0])
    if shape is not None and (p, q) != (shape.rows, shape.cols):
        raise TypeAError("grid does not match the shape")
    for r in range(p):
        for c in range(q):
            v = grid[r][c]
            if v < 0:
                raise TypeAError("grid entries must be nonnegative")
            if c + 1 < q and grid[r][c + 1] < v:
                raise TypeAError("rows must weakly increase")
            if r + 1 < p and grid[r + 1][c] < v:
                raise TypeAError("columns must weakly increase")
    return p, q


def grid_weight(grid):
    return sum(sum(row) for row in grid)


# ---------------------------------------------------------------------------
# Hillman-Grassl
# ---------------------------------------------------------------------------


def hg_extract(grid, shape=None):
    """Decompose a rectangle RPP into its multiset of rim hooks.

    Returns {dimension vector: multiplicity}.  The total size of the
    extracted hooks equals the sum of the entries.
    """
    p, q = check_grid(grid, shape)
    shape = RectShape(p, q)
    g = [list(row) for row in grid]
    out = {}
    while True:
        c0 = next((c for c in range(q) if any(g[r][c] for r in range(p))), None)
        if c0 is None:
            break
        i, j = p - 1, c0
        path = []
        while True:
            path.append((i, j))
            if i > 0 and g[i - 1][j] == g[i][j]:
                i -= 1
            elif j + 1 < q:
                j += 1
            else:
                break
        for r, c in path:
            g[r][c] -= 1
            if g[r][c] < 0:
                raise TypeAError("extraction underflow; input was not an RPP")
        dv = dimvec_of_anchor((i + 1, c0 + 1), shape)
        out[dv] = out.get(dv, 0) + 1
    return out


def hg_insert(grid, dv, shape=None):
    """Add one rim hook to a rectangle RPP (inverse of one extraction step)."""
    p, q = check_grid(grid, shape)
    shape = RectShape(p, q)
    r0, c0 = anchor_of_dimvec(dv, shape)
    g = [list(row) for row in grid]
    i, j = r0 - 1, q - 1
    path = []
    while True:
        path.append((i, j))
        if i + 1 < p and g[i + 1][j] == g[i][j]:
            i += 1
        elif j > c0 - 1:
            j -= 1
        else:
            break
    for r, c in path:
        g[r][c] += 1
    return g


def hg_build(multiset, shape):
    """The reverse plane partition whose Hillman-Grassl decomposition is the
    given multiset of rim hooks.

    Hooks are inserted in the reverse of the canonical extraction order:
    start column descending, end row ascending.
    """
    anchors = []
    for dv, mult in multiset.items():
        if mult < 0:
            raise TypeAError("multiplicities must be nonnegative")
        anchors.extend([anchor_of_dimvec(dv, shape)] * mult)
    anchors.sort(key=lambda rc: (-rc[1], rc[0]))
    g = [[0] * shape.cols for _ in range(shape.rows)]
    for r0, c0 in anchors:
        g = hg_insert(g, dimvec_of_anchor((r0, c0), shape), shape)
    return g


# ---------------------------------------------------------------------------
# Pak correspondence
# ---------------------------------------------------------------------------


def pak_map(multiset, shape):
    """The Pak correspondence from a multiset of rim hooks to an RPP.

    Every cell is processed once, along anti-diagonals from the corner
    (1,1) outward: the cell receives max(north, west) + its hook
    multiplicity, and the cells on its NW diagonal ray are toggled, all
    updates of a step reading the pre-step grid.
    """
    p, q = shape.rows, shape.cols
    counts = [[0] * q for _ in range(p)]
    for dv, mult in multiset.items():
        if mult < 0:
            raise TypeAError("multiplicities must be nonnegative")
        r, c = anchor_of_dimvec(dv, shape)
        counts[r - 1][c - 1] += mult
    g = [[0] * q for _ in range(p)]

    def north_west_max(r, c):
        vals = []
        if r > 0:
            vals.append(g[r - 1][c])
        if c > 0:
            vals.append(g[r][c - 1])
        return max(vals, default=0)

    cells = sorted(
        ((r, c) for r in range(p) for c in range(q)), key=lambda rc: (rc[0] + rc[1], rc)
    )
    for r, c in cells:
        updates = {(r, c): north_west_max(r, c) + counts[r][c]}
        rr, cc = r - 1, c - 1
        while rr >= 0 and cc >= 0:
            lo = min(g[rr + 1][cc], g[rr][cc + 1])
            updates[(rr, cc)] = north_west_max(rr, cc) + lo - g[rr][cc]
            rr -= 1
            cc -= 1
        for (ur, uc), v in updates.items():
            g[ur][uc] = v
    return g


# ---------------------------------------------------------------------------
# rendering poset RPPs on the rectangle
# ---------------------------------------------------------------------------


def cell_map(poset, n, m):
    """Map each poset element to its rectangle cell.

    The tau-orbit of vertex i occupies the NW-SE diagonal c - r = i - rows
    (rows = n+1-m), with the orbit's poset-maximal element at the NW end.
    This matches the classical Young-diagram layouts for the two
    distinguished orientations and renders every other orientation
    consistently.
    """
    shape = RectShape.for_vertex(n, m)
    by_orbit = {}
    for x in poset.elements:
        ann = poset.annotations[x]
        by_orbit.setdefault(ann["orbit"], []).append((ann["position"], x))
    mapping = {}
    for j, chain in by_orbit.items():
        chain.sort(reverse=True)  # poset-maximal first
        d = j - shape.rows
        cells = [
            (r, r + d) for r in range(1, shape.rows + 1) if 1 <= r + d <= shape.cols
        ]
        if len(cells) != len(chain):
            raise TypeAError(f"orbit {j} does not fill its diagonal")
        for (_, x), cell in zip(chain, cells):
            mapping[x] = cell
    return mapping


def grid_of_values(values, poset, n, m):
    mapping = cell_map(poset, n, m)
    shape = RectShape.for_vertex(n, m)
    g = [[None] * shape.cols for _ in range(shape.rows)]
    for x, (r, c) in mapping.items():
        g[r - 1][c - 1] = values[x]
    if any(v is None for row in g for v in row):
        raise TypeAError("poset does not fill the rectangle")
    return g


def values_of_grid(grid, poset, n, m):
    mapping = cell_map(poset, n, m)
    check_grid(grid, RectShape.for_vertex(n, m))
    return {x: grid[r - 1][c - 1] for x, (r, c) in mapping.items()}


def format_grid(grid):
    width = max(len(str(v)) for row in grid for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in grid)


def parse_grid(text):
    rows = []
    for line in text.strip().replace("/", "\n").splitlines():
        line = line.strip()
        if line:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
    if not rows:
        raise TypeAError("empty grid")
    return rows
