"""Hypergraphs and graphs on [n] = {0, ..., n-1} and exact independent-set counts.

Counts are plain Python ints, so they never overflow.  The subset-enumeration
counter is the reference oracle; graphs get a faster branching counter.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

ENUMERATION_LIMIT = 30

Edge = tuple  # strictly increasing tuple of vertices


def _normalize_edge(edge, n: int) -> tuple:
    e = tuple(int(v) for v in edge)
    if any(b <= a for a, b in zip(e, e[1:])):
        e = tuple(sorted(e))
        if len(set(e)) != len(e):
            raise ValueError(f"edge {edge} repeats a vertex")
    if e and (e[0] < 0 or e[-1] >= n):
        raise ValueError(f"edge {edge} not inside [0, {n - 1}]")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """Ground set [n], uniformity r (None when edge sizes are mixed), edge set."""
    n: int
    r: int | None
    edges: frozenset

    def __init__(self, n: int, edges=(), r: int | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        es = frozenset(_normalize_edge(e, n) for e in edges)
        sizes = {len(e) for e in es}
        if r is None and len(sizes) == 1:
            r = sizes.pop()
        elif r is not None:
            if r < 1:
                raise ValueError("r must be at least 1")
            if any(len(e) != r for e in es):
                raise ValueError(f"every edge must have size {r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", es)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge):
        return tuple(sorted(edge)) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def max_edge_size(self) -> int:
        return max((len(e) for e in self.edges), default=self.r or 0)

    def with_edges(self, edges) -> "Hypergraph":
        return Hypergraph(self.n, edges, self.r)

    def isolated_vertices(self) -> list:
        used = set()
        for e in self.edges:
            used.update(e)
        return [v for v in range(self.n) if v not in used]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges=()):
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge ({u},{v}) not inside [0, {n - 1}]")
            es.add((u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    def __len__(self):
        return len(self.edges)

    def adjacency(self) -> list:
        """Neighbourhoods as bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degrees(self) -> list:
        return [a.bit_count() for a in self.adjacency()]

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges, r=2)


def graph_of(H: Hypergraph) -> Graph:
    if H.r != 2 and H.edges:
        raise ValueError("hypergraph is not 2-uniform")
    return Graph(H.n, H.edges)


# ---------------------------------------------------------------- counting

def _edge_masks(H: Hypergraph) -> list:
    return [sum(1 << v for v in e) for e in H.edges]


def count_by_enumeration(H: Hypergraph, s: int) -> int:
    """Definitional count of s-independent sets over all 2^n subsets."""
    n = H.n
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"subset enumeration is limited to n <= {ENUMERATION_LIMIT}")
    masks = [m for m, e in zip(_edge_masks(H), H.edges) if len(e) >= s]
    if not masks:
        return 1 << n
    # edges that can be hit s times are the only constraints; big ones first prune faster
    masks.sort(key=lambda m: -m.bit_count())
    total = 0
    chunk = 1 << min(n, 20)
    for start in range(0, 1 << n, chunk):
        sub = np.arange(start, start + chunk, dtype=np.int64)
        for k, m in enumerate(masks):
            sub = sub[np.bitwise_count(sub & m) < s]
            if sub.size == 0:
                break
        total += int(sub.size)
    return total


def count_s_independent(H: Hypergraph, s: int, method: str = "auto") -> int:
    """Number of I in [n] with |I & E| < s for every edge E.

    method: "auto" uses the isolated-vertex formula for s=1 and the shadow
    graph for s=2; "enumerate" always runs the subset oracle.
    """
    top = H.r if H.r is not None else H.max_edge_size()
    if top == 0:
        top = s  # no edges, any s is fine
    if not 1 <= s <= top:
        raise ValueError(f"s must satisfy 1 <= s <= {top}")
    if not H.edges:
        return 1 << H.n
    if method == "enumerate":
        return count_by_enumeration(H, s)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if s == 1:
        return 1 << len(H.isolated_vertices())
    if s == 2:
        return count_graph_independent(shadow2(H))
    return count_by_enumeration(H, s)


def _components(mask: int, adj: list) -> list:
    parts = []
    while mask:
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = adj[v] & mask & ~comp
            comp |= new
            frontier |= new
        parts.append(comp)
        mask &= ~comp
    return parts


def count_graph_independent(G: Graph) -> int:
    """Independent sets of G (including the empty set).

    Branch on a maximum-degree vertex, memoised on connected vertex sets.
    """
    adj = G.adjacency()
    memo: dict = {}

    def connected(mask):
        got = memo.get(mask)
        if got is not None:
            return got
        best, best_deg = -1, -1
        m = mask
        while m:
            v = m.bit_length() - 1
            m &= ~(1 << v)
            d = (adj[v] & mask).bit_count()
            if d > best_deg:
                best, best_deg = v, d
        if best_deg == 0:
            val = 2
        else:
            bit = 1 << best
            val = count(mask & ~bit) + count(mask & ~bit & ~adj[best])
        memo[mask] = val
        return val

    def count(mask):
        out = 1
        for comp in _components(mask, adj):
            out *= connected(comp)
        return out

    return count((1 << G.n) - 1)


def shadow2(H: Hypergraph) -> Graph:
    """All pairs covered by some edge."""
    if H.r is not None and H.r < 2:
        raise ValueError("2-shadow needs edges of size at least 2")
    pairs = set()
    for e in H.edges:
        pairs.update(combinations(e, 2))
    return Graph(H.n, pairs)


def triangle_count(G: Graph) -> int:
    adj = G.adjacency()
    total = 0
    for u, v in G.edges:
        higher = ~((1 << (v + 1)) - 1)
        total += (adj[u] & adj[v] & higher).bit_count()
    return total


def triangle_hypergraph(G: Graph) -> Hypergraph:
    adj = G.adjacency()
    tris = []
    for u, v in G.edges:
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        while common:
            w = (common & -common).bit_length() - 1
            common &= common - 1
            tris.append((u, v, w))
    return Hypergraph(G.n, tris, r=3)


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, combinations(range(n), r), r=r)


# ------------------------------------------------------------ named graphs

_TOKEN = re.compile(
    r"\s*(?:(?P<atom>[KE])_?(?:\{(?P<braced>[^}]*)\}|(?P<plain>\d+|n))"
    r"|(?P<edge>e)(?![A-Za-z])"
    r"|(?P<join>∨|\\vee|\*|v(?![A-Za-z]))"
    r"|(?P<union>∪|\\cup|\+|U(?![A-Za-z]))"
    r"|(?P<minus>−|-|\\setminus)"
    r"|(?P<lp>\()|(?P<rp>\)))"
)


def _eval_index(text: str, n) -> int:
    text = text.replace("−", "-").replace(" ", "")
    if not re.fullmatch(r"[+-]?(\d+|n)([+-](\d+|n))*", text):
        raise ValueError(f"bad subscript {text!r}")
    total = 0
    for sign, term in re.findall(r"([+-]?)(\d+|n)", text):
        if term == "n":
            if n is None:
                raise ValueError("expression mentions n but no n was given")
            val = n
        else:
            val = int(term)
        total += -val if sign == "-" else val
    return total


def _tokenize(expr: str, n):
    pos, out = 0, []
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed graph expression near {expr[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        if m.group("atom"):
            raw = m.group("braced") if m.group("braced") is not None else m.group("plain")
            args = tuple(_eval_index(p, n) for p in raw.split(","))
            out.append(("atom", (m.group("atom"), args)))
        elif kind in ("edge", "join", "union", "minus", "lp", "rp"):
            out.append((kind, None))
        if expr[pos:].strip() == "":
            break
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ValueError(f"malformed graph expression: expected {kind}, got {self.peek()}")
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self):
        g = self.union()
        if self.peek() is not None:
            raise ValueError("malformed graph expression: trailing tokens")
        return g

    def union(self):
        g = self.join()
        while self.peek() == "union":
            self.take("union")
            h = self.join()
            g = (g[0] + h[0], g[1] | {(u + g[0], v + g[0]) for u, v in h[1]})
        return g

    def join(self):
        g = self.minus()
        while self.peek() == "join":
            self.take("join")
            h = self.minus()
            a = g[0]
            edges = set(g[1]) | {(u + a, v + a) for u, v in h[1]}
            edges |= {(u, a + w) for u in range(a) for w in range(h[0])}
            g = (a + h[0], edges)
        return g

    def minus(self):
        g = self.atom()
        while self.peek() == "minus":
            self.take("minus")
            m, edges = g[0], set(g[1])
            if self.peek() == "edge":
                self.take("edge")
                t = 1
            else:
                _, (kind, args) = self.take("atom")
                if kind == "K" and args == (2,):
                    t = 1
                elif kind == "K" and len(args) == 2 and args[0] == 1:
                    t = args[1]
                else:
                    raise ValueError("only an edge or a star K_{1,t} can be deleted")
            # the star is centred on the last vertex and hits the t vertices just below it
            gone = {(m - 1 - k, m - 1) for k in range(1, t + 1)}
            if t < 1 or not gone <= edges:
                raise ValueError("deleted star is not contained in the graph")
            g = (m, edges - gone)
        return g

    def atom(self):
        if self.peek() == "lp":
            self.take("lp")
            g = self.union()
            self.take("rp")
            return g
        _, (kind, args) = self.take("atom")
        if kind == "E":
            if len(args) != 1 or args[0] < 0:
                raise ValueError("E_m needs one non-negative size")
            return (args[0], set())
        if len(args) == 1:
            m = args[0]
            if m < 0:
                raise ValueError("K_m needs a non-negative size")
            return (m, set(combinations(range(m), 2)))
        if len(args) == 2 and min(args) >= 0:
            a, b = args
            return (a + b, {(u, a + w) for u in range(a) for w in range(b)})
        raise ValueError("K takes one or two sizes")


def build_named_graph(expr: str, n: int | None = None) -> Graph:
    """Build K_m, E_m, K_{a,b} combined with join, disjoint union and
    deletion of an edge or star.  Subscripts may use n, e.g. E_{n-5}.

    Labels are fixed per constructor: left operand first, star deletions
    centred on the highest label.
    """
    size, edges = _Parser(_tokenize(expr, n)).parse()
    return Graph(size, edges)


def canonical_form(G: Graph, drop_isolated: bool = True) -> tuple:
    """Relabel by decreasing degree (ties by label).

    Equal forms always mean isomorphic graphs.  For threshold graphs, which
    covers every named family used here, isomorphic graphs always give equal
    forms; for other graphs the test can miss an isomorphism.
    """
    deg = G.degrees()
    verts = [v for v in range(G.n) if deg[v] > 0 or not drop_isolated]
    order = sorted(verts, key=lambda v: (-deg[v], v))
    pos = {v: k for k, v in enumerate(order)}
    edges = frozenset(tuple(sorted((pos[u], pos[v]))) for u, v in G.edges)
    return len(order), edges


def graphs_match(G: Graph, H: Graph, drop_isolated: bool = True) -> bool:
    return canonical_form(G, drop_isolated) == canonical_form(H, drop_isolated)


def describe_graph(G: Graph, with_isolated: bool = True) -> str:
    """Name G in the vocabulary K_m, K_m − e, K_m − K_{1,t}, K_a ∨ E_b."""
    deg = G.degrees()
    core = [v for v in range(G.n) if deg[v] > 0]
    iso = G.n - len(core)
    m = len(core)
    missing = comb(m, 2) - len(G.edges)
    if m == 0:
        return f"E_{G.n}"
    sub = sorted((deg[v] for v in core), reverse=True)
    if missing == 0:
        name = f"K_{m}"
    elif missing == 1:
        name = f"K_{m} − e"
    elif sub[-1] == m - 1 - missing and all(d >= m - 2 for d in sub[:-1]) \
            and sum(1 for d in sub if d == m - 2) == missing:
        name = f"K_{m} − K_{{1,{missing}}}"
    else:
        a = sum(1 for d in sub if d == m - 1)
        b = m - a
        if len(G.edges) == comb(a, 2) + a * b and all(d == a for d in sub[a:]):
            name = f"K_{a} ∨ E_{b}"
        else:
            name = f"G({m} vertices, {len(G.edges)} edges)"
    if with_isolated and iso:
        wrap = f"({name})" if " " in name else name
        return f"{wrap} ∪ E_{iso}"
    return name


# ---------------------------------------------------------------- edge I/O

def read_edge_list(text: str) -> Hypergraph:
    """Parse "n r" followed by one edge per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n r'")
    n, r = int(head[0]), int(head[1])
    edges = []
    for ln in lines[1:]:
        e = tuple(int(x) for x in ln.split())
        if len(e) != r:
            raise ValueError(f"edge {ln!r} does not have {r} vertices")
        if any(b <= a for a, b in zip(e, e[1:])):
            raise ValueError(f"edge {ln!r} is not strictly increasing")
        edges.append(e)
    return Hypergraph(n, edges, r=r)


def write_edge_list(H) -> str:
    if isinstance(H, Graph):
        H = H.as_hypergraph()
    r = H.r if H.r is not None else H.max_edge_size()
    rows = [f"{H.n} {r}"] + [" ".join(map(str, e)) for e in H.sorted_edges()]
    return "\n".join(rows) + "\n"
