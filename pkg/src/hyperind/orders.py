"""Lex, colex, pi-lex and compression orders on r-sets of [n].

A permutation pi is 1-indexed, as in (2,3,1): compare second coordinates
first, then third, then first.  Lex is (1,...,r) and colex is (r,...,1).
"""
from __future__ import annotations

from itertools import combinations, islice
from math import comb

from .hypergraph import Graph, Hypergraph


def lex_perm(r: int) -> tuple:
    return tuple(range(1, r + 1))


def colex_perm(r: int) -> tuple:
    return tuple(range(r, 0, -1))


def parse_permutation(text: str) -> tuple:
    pi = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    check_permutation(pi)
    return pi


def check_permutation(pi) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{len(pi)}")


def pi_key(pi, A) -> tuple:
    A = tuple(sorted(A))
    return tuple(A[p - 1] for p in pi)


def pi_lex_compare(pi, A, B) -> int:
    """-1 if A <_pi B, 0 if equal, 1 if A >_pi B."""
    check_permutation(pi)
    if len(A) != len(B) or len(A) != len(pi):
        raise ValueError("sets and permutation must have the same size")
    ka, kb = pi_key(pi, A), pi_key(pi, B)
    return (ka > kb) - (ka < kb)


def pi_lex_sets(pi, n: int):
    """Yield all r-subsets of [n] in increasing pi-lex order, lazily.

    Coordinates are fixed in the order pi prescribes; each one runs over the
    values that still leave room for the unfixed coordinates.
    """
    check_permutation(pi)
    r = len(pi)
    if r > n:
        return
    slots = [None] * r

    def bounds(pos):
        lo, hi = pos, n - r + pos
        for q in range(pos - 1, -1, -1):
            if slots[q] is not None:
                lo = max(lo, slots[q] + pos - q)
                break
        for q in range(pos + 1, r):
            if slots[q] is not None:
                hi = min(hi, slots[q] - (q - pos))
                break
        return lo, hi

    def rec(t):
        if t == r:
            yield tuple(slots)
            return
        pos = pi[t] - 1
        lo, hi = bounds(pos)
        for v in range(lo, hi + 1):
            slots[pos] = v
            yield from rec(t + 1)
        slots[pos] = None

    yield from rec(0)


def initial_segment(pi, n: int, r: int, e: int) -> Hypergraph:
    """The first e r-sets of [n] under <_pi."""
    if len(pi) != r:
        raise ValueError("permutation length must equal r")
    if not 0 <= e <= comb(n, r):
        raise ValueError(f"e must lie in [0, {comb(n, r)}]")
    return Hypergraph(n, islice(pi_lex_sets(pi, n), e), r=r)


def compression_leq(A, B):
    """True if A ⪯ B, False if B ⪯ A strictly, None if incomparable."""
    if len(A) != len(B):
        raise ValueError("sets must have the same size")
    A, B = sorted(A), sorted(B)
    if all(a <= b for a, b in zip(A, B)):
        return True
    if all(b <= a for a, b in zip(A, B)):
        return False
    return None


def lex_graph(n: int, e: int) -> Graph:
    return Graph(n, initial_segment((1, 2), n, 2, e).edges)


def colex_graph(n: int, e: int) -> Graph:
    return Graph(n, initial_segment((2, 1), n, 2, e).edges)


def _maximum_cliques(G: Graph) -> list:
    adj = G.adjacency()
    best, found = 0, []

    def bk(R, P, X):
        nonlocal best, found
        if not P and not X:
            size = R.bit_count()
            if size > best:
                best, found = size, [R]
            elif size == best:
                found.append(R)
            return
        if R.bit_count() + P.bit_count() < best:
            return
        pivot = (P | X).bit_length() - 1
        cand = P & ~adj[pivot]
        while cand:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            bk(R | (1 << v), P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << G.n) - 1, 0)
    return [sorted(v for v in range(G.n) if c >> v & 1) for c in found]


def lexish_edge(n: int, e: int) -> tuple:
    """The edge f of the lexish definition for L(n, e).

    With {0, ..., i} the unique largest clique of L(n, e), f = (i-2, n-1):
    the 0-indexed image of the 1-indexed edge (i-1, n) attached to the clique
    {1, ..., i+1}.
    """
    L = lex_graph(n, e)
    cliques = _maximum_cliques(L)
    if len(cliques) != 1:
        raise ValueError("L(n,e) has no unique largest clique")
    clique = cliques[0]
    i = len(clique) - 1
    if clique != list(range(i + 1)):
        raise ValueError("largest clique is not an initial block of vertices")
    if i < 2:
        raise ValueError("clique too small to define the lexish edge")
    return (i - 2, n - 1)


def lexish_graph(n: int, e: int) -> tuple:
    """(L(n,e), L(n,e) - f); the second entry is None when f is not an edge
    of L(n,e) or lies inside the clique, so the variant is undefined."""
    if e < 1:
        raise ValueError("e must be positive")
    L = lex_graph(n, e)
    f = lexish_edge(n, e)
    cliques = _maximum_cliques(L)
    inside = n - 1 in cliques[0]
    if f not in L.edges or inside:
        return L, None
    return L, Graph(n, L.edges - {f})


def all_r_sets(n: int, r: int) -> list:
    return list(combinations(range(n), r))
