"""Shifts S_{i->j}, compound shifts, shiftedness and minimal edges."""
from __future__ import annotations

from .hypergraph import Hypergraph
from .orders import compression_leq


def shift_edge(edge: tuple, i: int, j: int) -> tuple:
    return tuple(sorted(j if v == i else v for v in edge))


def shift(H: Hypergraph, i: int, j: int) -> Hypergraph:
    """Apply S_{i->j} (source i, target j <= i).

    An edge meeting {i, j} in {i} moves to its image unless the image is
    already an edge of H, in which case it stays.
    """
    if not 0 <= j <= i < max(H.n, 1):
        raise ValueError(f"shift needs 0 <= j <= i <= n-1, got i={i}, j={j}")
    if i == j:
        return H
    out = set()
    for e in H.edges:
        if i in e and j not in e:
            img = shift_edge(e, i, j)
            out.add(e if img in H.edges else img)
        else:
            out.add(e)
    return H.with_edges(out)


def compound_shift(H: Hypergraph, B, A) -> Hypergraph:
    """H_{B->A}: apply b_t -> a_t for t = 1..r in turn (requires A ⪯ B)."""
    A, B = tuple(sorted(A)), tuple(sorted(B))
    if compression_leq(A, B) is not True:
        raise ValueError(f"{A} is not below {B} in the compression order")
    for a, b in zip(A, B):
        H = shift(H, b, a)
    return H


def is_shifted(H: Hypergraph) -> bool:
    """True when every S_{i->j}, j < i, fixes H."""
    for e in H.edges:
        for pos, v in enumerate(e):
            for j in range(v):
                if j in e:
                    continue
                if shift_edge(e, v, j) not in H.edges:
                    return False
    return True


def potential(H: Hypergraph) -> int:
    return sum(sum(e) for e in H.edges)


def fully_shift(H: Hypergraph) -> Hypergraph:
    """Shift until nothing changes.

    Sweeps run over (i, j) with j < i, ascending j then ascending i, and repeat
    until a whole sweep changes nothing.  Each effective shift lowers the
    vertex-sum potential, which bounds the number of sweeps.
    """
    n = H.n
    while True:
        changed = False
        for j in range(n):
            for i in range(j + 1, n):
                G = shift(H, i, j)
                if G.edges != H.edges:
                    assert potential(G) < potential(H)
                    H, changed = G, True
        if not changed:
            return H


def minimal_edge(I, n: int, r: int, s: int) -> tuple:
    """E_0(I): the s smallest elements of I plus the r-s smallest others."""
    I = sorted(set(I))
    if not 1 <= s <= r:
        raise ValueError("need 1 <= s <= r")
    if n < r:
        raise ValueError("need n >= r")
    if len(I) < s:
        raise ValueError("I must have at least s elements")
    if I and (I[0] < 0 or I[-1] >= n):
        raise ValueError("I must lie in [0, n-1]")
    head = I[:s]
    rest = [v for v in range(n) if v not in head][: r - s]
    return tuple(sorted(head + rest))


def is_s_independent(H: Hypergraph, I, s: int) -> bool:
    I = set(I)
    return all(len(I.intersection(e)) < s for e in H.edges)


def is_s_independent_shifted(H: Hypergraph, I, s: int, check: bool = False) -> bool:
    """For shifted H, I is s-independent iff E_0(I) is not an edge."""
    if check and not is_shifted(H):
        raise ValueError("hypergraph is not shifted")
    if len(set(I)) < s:
        return True
    if H.r is None:
        raise ValueError("minimal-edge test needs a uniform hypergraph")
    return minimal_edge(I, H.n, H.r, s) not in H.edges
