"""Downsets of the cell grid B_n, stored as column heights.

A cell (i, j) with 1 <= i < j <= n-1 stands for the base edge {0, i, j}.
Column i of a downset holds the cells (i, i+1), ..., (i, h(i)); an empty
column is encoded as height i wherever a full profile is needed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .hypergraph import Graph, Hypergraph, build_named_graph, describe_graph, graphs_match, shadow2
from .shifting import is_shifted


@dataclass(frozen=True)
class Downset:
    n: int
    heights: tuple

    def __init__(self, n: int, heights=()):
        hs = tuple(int(h) for h in heights)
        # drop trailing empty columns given in padded form
        while hs and hs[-1] == len(hs):
            hs = hs[:-1]
        if n < 3 and hs:
            raise ValueError("B_n has no cells for n < 3")
        for i, h in enumerate(hs, 1):
            if not i + 1 <= h <= n - 1:
                raise ValueError(f"column {i} height {h} outside [{i + 1}, {n - 1}]")
            if i > 1 and h > hs[i - 2]:
                raise ValueError("heights must be non-increasing")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "heights", hs)

    @classmethod
    def from_cells(cls, n: int, cells) -> "Downset":
        cells = set(cells)
        for i, j in cells:
            if not 1 <= i < j <= n - 1:
                raise ValueError(f"({i},{j}) is not a cell of B_{n}")
        hs = []
        i = 1
        while (i, i + 1) in cells:
            h = i + 1
            while (i, h + 1) in cells:
                h += 1
            hs.append(h)
            i += 1
        D = cls(n, hs)
        if D.size != len(cells):
            raise ValueError("cell set is not downward closed")
        if hs and any(h > hs[k - 1] for k, h in enumerate(hs[1:], 1)):
            raise ValueError("cell set is not downward closed")
        return D

    @classmethod
    def full(cls, n: int) -> "Downset":
        return cls(n, [n - 1] * max(n - 2, 0))

    @classmethod
    def empty(cls, n: int) -> "Downset":
        return cls(n, ())

    @classmethod
    def from_counts(cls, n: int, counts) -> "Downset":
        """Build from column cell counts, e.g. [2, 1]."""
        return cls(n, [i + c for i, c in enumerate(counts, 1)])

    @property
    def k(self) -> int:
        return len(self.heights)

    @property
    def size(self) -> int:
        return sum(h - i for i, h in enumerate(self.heights, 1))

    def counts(self) -> tuple:
        return tuple(h - i for i, h in enumerate(self.heights, 1))

    def height(self, i: int) -> int:
        return self.heights[i - 1] if 1 <= i <= self.k else i

    def padded(self) -> tuple:
        return tuple(self.height(i) for i in range(1, max(self.n - 1, 1)))

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.k and i < j <= self.heights[i - 1]

    def cells(self) -> list:
        return [(i, j) for i, h in enumerate(self.heights, 1) for j in range(i + 1, h + 1)]

    def __str__(self):
        return f"n={self.n} heights={','.join(map(str, self.heights)) or '-'}"


def all_cells(n: int) -> list:
    """Cells of B_n in cell-lex order."""
    return [(i, j) for i in range(1, n - 1) for j in range(i + 1, n)]


def check_cell(cell, n: int) -> None:
    i, j = cell
    if not 1 <= i < j <= n - 1:
        raise ValueError(f"({i},{j}) is not a cell of B_{n}")


def cell_cost(cell, n: int) -> int:
    """2-independent sets destroyed by adding {0,i,j} to a shifted 3-graph."""
    check_cell(cell, n)
    i, j = cell
    if i == 1:
        return 1 << (n - 1) if j == 2 else 1 << (n - j)
    return 1 << (n - j - 1)


def cell_space(cell) -> int:
    i, j = cell
    if not 1 <= i < j:
        raise ValueError(f"({i},{j}) is not a cell")
    return i


def column_cost(n: int, i: int, h: int) -> int:
    """Cost of cells (i, i+1..h) in closed form; h = i means empty."""
    if h == i:
        return 0
    if i == 1:
        return (1 << (n - 1)) + (1 << (n - 2)) - (1 << (n - h))
    return (1 << (n - i - 1)) - (1 << (n - h - 1))


def column_space(i: int, h: int) -> int:
    return i * (h - i)


def downset_cost(D: Downset) -> int:
    return sum(column_cost(D.n, i, h) for i, h in enumerate(D.heights, 1))


def downset_space(D: Downset) -> int:
    return sum(column_space(i, h) for i, h in enumerate(D.heights, 1))


def total_space(n: int) -> int:
    return comb(n, 3)


def i2_of_downset(D: Downset) -> int:
    return (1 << D.n) - downset_cost(D)


def downset_of(H: Hypergraph, check: bool = True) -> Downset:
    """Cells (i, j) with {0, i, j} an edge of the shifted 3-graph H."""
    if H.edges and H.r != 3:
        raise ValueError("downsets are defined for 3-uniform hypergraphs")
    if check and not is_shifted(H):
        raise ValueError("hypergraph is not shifted")
    return Downset.from_cells(H.n, [(e[1], e[2]) for e in H.edges if e[0] == 0])


def corners(D: Downset) -> list:
    """Maximal cells, left to right."""
    hs = D.heights
    return [(i, h) for i, h in enumerate(hs, 1) if i == len(hs) or hs[i] < h]


def horizontal_distance_vector(D: Downset) -> list:
    cols = [c[0] for c in corners(D)]
    return [b - a for a, b in zip(cols, cols[1:])]


def downset_lex_compare(D: Downset, E: Downset) -> int:
    """-1 if D <_L E (the lex-least cell of D Δ E lies in D), 0, or 1."""
    if D.n != E.n:
        raise ValueError("downsets live in different grids")
    for i in range(1, max(D.k, E.k) + 1):
        a, b = D.height(i), E.height(i)
        if a != b:
            return -1 if a > b else 1
    return 0


def lex_key(D: Downset) -> tuple:
    """Sort key whose ascending order is <_L."""
    return tuple(-h for h in D.padded())


def is_231_lex_style(D: Downset) -> str:
    """"full-initial", "missing-one" or "no"."""
    n, hs = D.n, D.heights
    if all(h == n - 1 for h in hs[:-1]):
        return "full-initial"
    if len(hs) >= 2 and hs[-2] == n - 2 and all(h == n - 1 for h in hs[:-2]):
        return "missing-one"
    return "no"


def lex_initial_downset(n: int, t: int) -> Downset:
    """The first t cells of B_n in cell-lex order."""
    return Downset.from_cells(n, all_cells(n)[:t])


# ----------------------------------------------------- persistent family

# Column cell counts as functions of n.
PERSISTENT_COUNTS = (
    lambda n: (2, 1),
    lambda n: (n - 5, n - 6),
    lambda n: (n - 4, n - 5),
    lambda n: (n - 3, n - 4, n - 5),
    lambda n: (n - 3, n - 4, n - 5, n - 6),
)

# The five reference shadow expressions, verbatim.
REFERENCE_PERSISTENT_SHADOWS = (
    "(K_3 ∨ E_1) ∪ E_{n-5}",
    "(K_2 ∨ E_{n-5}) ∪ E_2",
    "(K_2 ∨ E_{n-4}) ∪ E_1",
    "K_3 ∨ E_{n-4}",
    "K_4 ∨ E_{n-5}",
)


def persistent_profiles(n: int) -> list:
    """Distinct valid downsets of the persistent family for this n (n >= 7)."""
    out = []
    for f in PERSISTENT_COUNTS:
        counts = f(n)
        if min(counts) < 1 or any(b >= a for a, b in zip(counts, counts[1:])):
            continue
        try:
            D = Downset.from_counts(n, counts)
        except ValueError:
            continue
        if D not in out:
            out.append(D)
    return out


def full_shadow(D: Downset) -> Graph:
    """2-shadow of the realization using all of D's space."""
    return shadow2(realize(D, downset_space(D)))


def persistent_exception_downsets(n: int) -> list:
    """[(Downset, shadow expression)] for the five persistent exceptions."""
    if n < 10:
        raise ValueError("the persistent family is defined for n >= 10")
    return [(D, describe_graph(full_shadow(D))) for D in persistent_profiles(n)]


def persistent_report(n: int) -> list:
    """Compare each derived persistent shadow with the reference expressions.

    Rows hold the counts, the derived name, the reference expressions it
    matches up to isolated vertices, and whether the match also holds with
    exactly n vertices.
    """
    rows = []
    reference = [(p, build_named_graph(p, n)) for p in REFERENCE_PERSISTENT_SHADOWS]
    for D, name in persistent_exception_downsets(n):
        G = full_shadow(D)
        loose = [p for p, P in reference if graphs_match(G, P)]
        exact = [p for p, P in reference if P.n == n and graphs_match(G, P, drop_isolated=False)]
        rows.append({"counts": D.counts(), "heights": D.heights, "shadow": name,
                     "matches_reference": loose, "matches_with_n_vertices": exact})
    return rows


# ------------------------------------------------------ realization etc.

def realize(D: Downset, e: int) -> Hypergraph:
    """Shifted 3-graph with downset D and exactly e edges.

    Base edges {0,i,j} first, then {k,i,j} (1 <= k < i, (i,j) in D) in colex
    order until e edges are present.
    """
    base = [(0, i, j) for i, j in D.cells()]
    if not len(base) <= e <= downset_space(D):
        raise ValueError(f"e must lie in [{len(base)}, {downset_space(D)}]")
    extra = sorted(((k, i, j) for i, j in D.cells() for k in range(1, i)),
                   key=lambda t: (t[2], t[1], t[0]))
    return Hypergraph(D.n, base + extra[: e - len(base)], r=3)


def extend(D: Downset, m: int) -> Downset:
    """The same cells inside B_m."""
    if m < D.n:
        raise ValueError("cannot extend to a smaller grid")
    return Downset(m, D.heights)


def downset_to_record(D: Downset) -> dict:
    return {"n": D.n, "heights": list(D.heights)}


def dumps_downset(D: Downset) -> str:
    return json.dumps(downset_to_record(D))


def parse_downset(text: str) -> Downset:
    """Accepts {"n": 7, "heights": [4,4,4]} or the short form "7:4,4,4"."""
    text = text.strip()
    if text.startswith("{"):
        rec = json.loads(text)
        return Downset(int(rec["n"]), rec.get("heights", []))
    if ":" in text:
        n, hs = text.split(":", 1)
        return Downset(int(n), [int(x) for x in hs.split(",") if x.strip()])
    raise ValueError(f"cannot parse downset {text!r}")
