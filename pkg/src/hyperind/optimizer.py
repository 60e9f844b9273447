"""Minimum-cost downsets: exact DP, brute-force oracle, classification and reports.

The optimization: over downsets D of B_n with space S(D) >= e, minimise the
cost C(D); among minimisers take the <_L-earliest.  i_2 of the best shifted
3-graph with e edges is then 2^n - C(D).

The DP runs over columns c = 1..n-2.  F_c[p][s] is the least cost of columns
c..n-2 when column c-1 has height p and at least s more space is needed
(s is clamped at 0).  Because F_c[p] is a prefix minimum over the allowed
heights, each column costs O(n) vector operations.

Lex-earliest reconstruction walks the columns left to right and keeps the
tallest column height that still admits an optimal completion.  A taller
column at the first column where two downsets differ means the lex-least
cell of their symmetric difference is in the taller one, so this greedy
choice is exactly lex minimisation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .downset import (Downset, all_cells, column_cost, column_space, describe_graph,
                      downset_cost, downset_space, full_shadow, i2_of_downset,
                      is_231_lex_style, persistent_profiles, total_space)
from .hypergraph import Hypergraph, build_named_graph, count_s_independent, graphs_match
from .orders import initial_segment

DP_MAX_N = 60
ENUMERATION_MAX_N = 16
INF = 1 << 62

# Reference exception shadows by n (n < 32).
EXCEPTIONS_REFERENCE = {
    7: ("K_5",),
    8: ("K_5", "K_6", "K_7"),
    9: ("K_5", "K_6", "K_7", "K_8", "K_9 − K_{1,6}"),
    10: ("K_9",),
    11: ("K_10", "K_11 − K_{1,9}"),
    12: ("K_11",),
    14: ("K_13", "K_13 − e"),
    16: ("K_15",),
}

# What this package's exact search finds; differs from the table at n = 11, 12.
EXCEPTIONS_COMPUTED = {
    7: ("K_5",),
    8: ("K_5", "K_6", "K_7"),
    9: ("K_5", "K_6", "K_7", "K_8", "K_9 − K_{1,6}"),
    10: ("K_9",),
    11: ("K_10", "K_11 − K_{1,8}"),
    12: ("K_11 − e",),
    14: ("K_13", "K_13 − e"),
    16: ("K_15",),
}

TAGS = ("lex-style-full", "lex-style-missing-one", "persistent-exception",
        "transient-exception", "other")


class InfeasibleError(ValueError):
    """e exceeds the total space of B_n; .record holds the full-B_n record."""

    def __init__(self, msg, record=None):
        super().__init__(msg)
        self.record = record


@dataclass
class OptimalRecord:
    n: int
    e: int
    min_cost: int
    witness: Downset
    classification: str
    shadow_description: str | None = None
    lex_full_cost: int | None = None
    lex_missing_cost: int | None = None

    @property
    def i2(self) -> int:
        return (1 << self.n) - self.min_cost

    @property
    def tie_with_full(self) -> bool:
        return self.lex_full_cost == self.min_cost

    @property
    def tie_with_missing(self) -> bool:
        return self.lex_missing_cost == self.min_cost

    def as_dict(self) -> dict:
        return {"n": self.n, "e": self.e, "min_cost": self.min_cost,
                "heights": list(self.witness.heights), "tag": self.classification,
                "shadow": self.shadow_description,
                "tie_full": self.tie_with_full, "tie_missing": self.tie_with_missing}


@dataclass
class ParetoFrontier:
    n: int
    entries: list = field(default_factory=list)  # OptimalRecord for e = 0..C(n,3)


# ------------------------------------------------------------------ the DP

def _check_dp_n(n):
    if not 3 <= n <= DP_MAX_N:
        raise ValueError(f"DP supports 3 <= n <= {DP_MAX_N} (int64 costs)")


@lru_cache(maxsize=2)
def _dp_table(n: int):
    """F[c][p] -> int64 array over required space s = 0..C(n,3)."""
    _check_dp_n(n)
    S = total_space(n)
    s_idx = np.arange(S + 1)
    tail = np.full(S + 1, INF, dtype=np.int64)
    tail[0] = 0
    F = {n - 1: {p: tail for p in range(n - 2, n)}}
    for c in range(n - 2, 0, -1):
        nxt = F[c + 1]
        opts = {}
        for h in range(c, n):
            sp = column_space(c, h)
            v = nxt[h][np.maximum(s_idx - sp, 0)] + column_cost(n, c, h)
            opts[h] = np.minimum(v, INF)
        cur = {}
        run = opts[c]
        cur[c - 1] = run
        cur[c] = run
        for p in range(c + 1, n):
            run = np.minimum(run, opts[p])
            cur[p] = run
        F[c] = cur
    return F


def _reconstruct(n: int, e: int) -> list:
    F = _dp_table(n)
    target = int(F[1][n - 1][e])
    p, rem, hs = n - 1, e, []
    for c in range(1, n - 1):
        for h in list(range(min(p, n - 1), c, -1)) + [c]:
            cost = column_cost(n, c, h)
            r2 = max(rem - column_space(c, h), 0)
            if cost + int(F[c + 1][h][r2]) == target:
                hs.append(h)
                target -= cost
                rem, p = r2, h
                break
        else:
            raise AssertionError("DP reconstruction failed")
    return hs


def _reconstruct_all(n: int) -> np.ndarray:
    """Lex-earliest optimal padded heights for every e at once."""
    F = _dp_table(n)
    S = total_space(n)
    es = np.arange(S + 1)
    target = F[1][n - 1][es].copy()
    rem = es.copy()
    prev = np.full(S + 1, n - 1)
    out = np.zeros((S + 1, n - 2), dtype=np.int64)
    for c in range(1, n - 1):
        todo = np.ones(S + 1, dtype=bool)
        for h in list(range(n - 1, c, -1)) + [c]:
            cost = column_cost(n, c, h)
            r2 = np.maximum(rem - column_space(c, h), 0)
            ok = todo & ((h <= prev) | (h == c)) & (F[c + 1][h][r2] + cost == target)
            out[ok, c - 1] = h
            target[ok] -= cost
            rem[ok] = r2[ok]
            prev[ok] = h
            todo &= ~ok
        assert not todo.any()
    return out


def min_cost(n: int, e: int) -> int:
    return int(_dp_table(n)[1][n - 1][e])


def _check_e(n, e):
    S = total_space(n)
    if e < 0:
        raise ValueError("e must be non-negative")
    if e > S:
        full = Downset.full(n)
        rec = OptimalRecord(n, S, downset_cost(full), full, classify(full))
        raise InfeasibleError(f"e={e} exceeds the total space {S} of B_{n}", rec)


# ----------------------------------------------------- lex-style baselines

def _lex_style_candidates(n: int):
    """(space, cost) arrays for all full-initial and all missing-one downsets."""
    cells = all_cells(n)
    full = [Downset.from_cells(n, cells[:t]) for t in range(len(cells) + 1)]
    missing = []
    for k in range(2, n - 1):
        for h in range(k + 1, n - 1):
            missing.append(Downset(n, [n - 1] * (k - 2) + [n - 2, h]))
    return full, missing


@lru_cache(maxsize=4)
def _lex_style_best(n: int):
    """For each e, least cost over full-initial and over missing-one downsets."""
    es = np.arange(total_space(n) + 1)
    out = []
    for group in _lex_style_candidates(n):
        sp = np.array([downset_space(D) for D in group])
        co = np.array([downset_cost(D) for D in group], dtype=np.int64)
        order = np.argsort(sp, kind="stable")
        sp, co = sp[order], co[order]
        suffix = np.minimum.accumulate(co[::-1])[::-1]
        pos = np.searchsorted(sp, es, side="left")
        out.append([int(suffix[k]) if k < len(sp) else None for k in pos])
    return out


# -------------------------------------------------------- classification

def _catalogue_graphs(n, catalogue):
    return [build_named_graph(x) for x in catalogue.get(n, ())]


def classify(D: Downset, catalogue=None) -> str:
    """Tag a downset; transient exceptions come from the given n -> names
    catalogue (the reference one by default) and only for n < 32."""
    style = is_231_lex_style(D)
    if style == "full-initial":
        return "lex-style-full"
    if style == "missing-one":
        return "lex-style-missing-one"
    if D.n >= 7 and D in persistent_profiles(D.n):
        return "persistent-exception"
    cat = EXCEPTIONS_REFERENCE if catalogue is None else catalogue
    if D.n < 32 and cat.get(D.n):
        G = full_shadow(D)
        if any(graphs_match(G, P) for P in _catalogue_graphs(D.n, cat)):
            return "transient-exception"
    return "other"


def _shadow_name(D: Downset, tag: str):
    if tag.startswith("lex-style"):
        return None
    return describe_graph(full_shadow(D), with_isolated=(tag == "persistent-exception"))


def _record(n, e, hs, catalogue=None):
    D = Downset(n, hs)
    tag = classify(D, catalogue)
    full, missing = _lex_style_best(n)
    return OptimalRecord(n, e, downset_cost(D), D, tag, _shadow_name(D, tag),
                         full[e], missing[e])


def optimize(n: int, e: int, catalogue=None) -> OptimalRecord:
    _check_dp_n(n)
    _check_e(n, e)
    rec = _record(n, e, _reconstruct(n, e), catalogue)
    assert rec.min_cost == min_cost(n, e)
    return rec


def pareto(n: int, catalogue=None) -> ParetoFrontier:
    if n < 4:
        raise ValueError("pareto needs n >= 4")
    _check_dp_n(n)
    table = _reconstruct_all(n)
    return ParetoFrontier(n, [_record(n, e, row, catalogue) for e, row in enumerate(table)])


# ------------------------------------------------------- brute-force oracle

def enumerate_downsets(n: int):
    """Every downset of B_n once, in increasing <_L order (full B_n first)."""
    if n > ENUMERATION_MAX_N:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATION_MAX_N}")
    if n < 3:
        yield Downset(max(n, 0), ())
        return

    def rec(c, prev, acc):
        if c == n - 1:
            yield Downset(n, acc)
            return
        for h in range(min(prev, n - 1), c, -1):
            yield from rec(c + 1, h, acc + [h])
        yield Downset(n, acc)

    yield from rec(1, n - 1, [])


def brute_force_records(n: int, downsets=None) -> list:
    """(min_cost, witness) for every e by scanning downsets in <_L order."""
    ds = list(enumerate_downsets(n)) if downsets is None else list(downsets)
    cost = np.array([downset_cost(D) for D in ds], dtype=np.int64)
    space = np.array([downset_space(D) for D in ds])
    out = []
    for e in range(total_space(n) + 1):
        masked = np.where(space >= e, cost, INF)
        k = int(np.argmin(masked))  # argmin keeps the first, i.e. lex-earliest
        out.append((int(masked[k]), ds[k]))
    return out


def pruned_records(n: int) -> list:
    """Oracle scan that first drops every downset admitting a local move."""
    from .moves import all_applicable_moves
    kept = [D for D in enumerate_downsets(n) if not all_applicable_moves(D)]
    return brute_force_records(n, kept)


# ----------------------------------------------------------------- reports

@dataclass
class TableRow:
    n: int
    found: dict            # shadow name -> list of (e, heights)
    expected: tuple
    missing: list
    extra: list
    persistent_seen: list  # heights of persistent optima seen
    ties: list             # (e, name) where an exception ties a lex-style downset

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra


def _match_sets(found_names, expected_names):
    found_g = [(x, build_named_graph(x)) for x in found_names]
    exp_g = [(x, build_named_graph(x)) for x in expected_names]
    missing = [x for x, G in exp_g if not any(graphs_match(G, H) for _, H in found_g)]
    extra = [x for x, G in found_g if not any(graphs_match(G, H) for _, H in exp_g)]
    return missing, extra


def table_row(n: int, catalogue=None) -> TableRow:
    cat = EXCEPTIONS_REFERENCE if catalogue is None else catalogue
    persistent = persistent_profiles(n)
    found, seen, ties = {}, [], []
    for rec in pareto(n, cat).entries:
        D = rec.witness
        if is_231_lex_style(D) != "no":
            continue
        if D in persistent:
            if D.heights not in seen:
                seen.append(D.heights)
            continue
        name = describe_graph(full_shadow(D), with_isolated=False)
        found.setdefault(name, []).append((rec.e, D.heights))
        if rec.tie_with_full or rec.tie_with_missing:
            ties.append((rec.e, name))
    expected = tuple(cat.get(n, ()))
    missing, extra = _match_sets(list(found), expected)
    return TableRow(n, found, expected, missing, extra, seen, ties)


def reproduce_table(n_lo: int, n_hi: int, catalogue=None) -> list:
    if not 7 <= n_lo <= n_hi:
        raise ValueError("need 7 <= n_lo <= n_hi")
    return [table_row(n, catalogue) for n in range(n_lo, n_hi + 1)]


@dataclass
class TheoremReport:
    n: int
    passed: bool
    counts: dict
    counterexamples: list


def verify_main_theorem(n: int) -> TheoremReport:
    """Check that every optimum for this n is lex-style or persistent."""
    if n < 32:
        raise ValueError("the theorem is stated for n >= 32")
    counts = {t: 0 for t in TAGS}
    bad = []
    for rec in pareto(n).entries:
        counts[rec.classification] += 1
        if rec.classification not in TAGS[:3]:
            bad.append(rec)
    return TheoremReport(n, not bad, counts, bad)


# --------------------------------------------------- shifted hypergraphs

def _compression_poset(n: int, r: int):
    sets = list(combinations(range(n), r))
    idx = {s: k for k, s in enumerate(sets)}
    below = []
    for s in sets:
        b = []
        for t in range(r):
            x = list(s)
            x[t] -= 1
            if x[t] >= 0 and (t == 0 or x[t] > x[t - 1]):
                b.append(idx[tuple(x)])
        below.append(b)
    order = sorted(range(len(sets)), key=lambda k: (sum(sets[k]), sets[k]))
    return sets, below, order


def enumerate_shifted(n: int, r: int, e: int | None = None):
    """Every shifted r-graph on [n] (optionally with exactly e edges), once.

    Ideals of the compression order are grown by adding elements in a fixed
    linear extension, each new element later than the previous one.
    """
    sets, below, order = _compression_poset(n, r)
    total = len(sets)
    stack = [(0, -1, 0)]
    while stack:
        mask, last, size = stack.pop()
        if e is None or size == e:
            yield Hypergraph(n, [sets[k] for k in range(total) if mask >> k & 1], r=r)
        if e is not None and size >= e:
            continue
        for t in range(last + 1, total):
            v = order[t]
            if all(mask >> u & 1 for u in below[v]):
                stack.append((mask | (1 << v), t, size + 1))


@dataclass
class ConjectureReport:
    r: int
    s: int
    n: int
    e: int
    best: int
    best_family: Hypergraph
    candidate: int
    families: int

    @property
    def ratio(self):
        from fractions import Fraction
        return Fraction(self.best, self.candidate)


def conjecture_perm(r: int, s: int) -> tuple:
    """(r-s+1, ..., r, 1, ..., r-s)."""
    return tuple(range(r - s + 1, r + 1)) + tuple(range(1, r - s + 1))


def conjecture_check(r: int, s: int, n: int, e: int) -> ConjectureReport:
    """Max i_s over shifted r-graphs with e edges against the pi-lex segment."""
    if r > 4 or n > 9:
        raise ValueError("conjecture_check is limited to r <= 4, n <= 9")
    if not 1 <= s <= r or not 0 <= e <= comb(n, r):
        raise ValueError("need 1 <= s <= r and 0 <= e <= C(n, r)")
    best, arg, count = -1, None, 0
    for H in enumerate_shifted(n, r, e):
        count += 1
        val = count_s_independent(H, s)
        if val > best:
            best, arg = val, H
    P = initial_segment(conjecture_perm(r, s), n, r, e)
    return ConjectureReport(r, s, n, e, best, arg, count_s_independent(P, s), count)


def i2_table_from_search(n: int) -> list:
    """max i_2 over shifted 3-graphs with exactly e edges, for every e."""
    best = [0] * (comb(n, 3) + 1)
    for H in enumerate_shifted(n, 3):
        v = count_s_independent(H, 2, method="enumerate")
        best[len(H)] = max(best[len(H)], v)
    return best


__all__ = [
    "OptimalRecord", "ParetoFrontier", "InfeasibleError", "EXCEPTIONS_REFERENCE", "EXCEPTIONS_COMPUTED",
    "optimize", "pareto", "classify", "enumerate_downsets", "brute_force_records",
    "pruned_records", "reproduce_table", "table_row", "verify_main_theorem",
    "enumerate_shifted", "conjecture_check", "conjecture_perm", "min_cost", "i2_of_downset",
]
