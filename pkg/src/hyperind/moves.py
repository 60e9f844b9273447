"""Local moves on downsets.

Each move takes a downset D, checks a precondition and, when it holds,
returns D' = D - removed + added together with the cell sets.  A sound move
never raises the cost, never lowers the space and makes D' <_L D, so D
cannot be the lex-earliest minimum-cost downset for any space threshold.

Every lemma has its own identifier.  STRICTNESS records, per identifier,
whether the cost drop and the space gain are claimed to be strict.  The
per-lemma functions return every instance they find; the public move_*
functions return the first one or None.
"""
from __future__ import annotations

from dataclasses import dataclass

from .downset import Downset, corners, downset_cost, downset_lex_compare, downset_space, \
    horizontal_distance_vector, is_231_lex_style, persistent_profiles

# lemma id -> (cost strictly lower, space strictly higher)
STRICTNESS = {
    "distance-vector": (False, False),
    "stairs-111": (True, False),
    "stairs-22": (True, False),
    "stairs-21": (True, False),
    "stairs-12": (True, False),
    "drop-sizes-short": (True, True),
    "drop-sizes-long": (True, True),
    "ends-with-stairs": (True, False),
    "ends-with-stairs-no-earlier": (False, False),
    "column-no-other-corner": (False, False),
    "column-earlier-corner": (True, False),
    "tall-stairs": (False, False),
    "tall-stairs-2": (False, False),
    "trapezoid-two-row": (False, False),
    "trapezoid-two-row-stairs": (False, False),
    "trapezoid-one-row": (False, False),
    "trapezoid-one-row-stairs": (False, False),
    "narrow-i-small": (False, False),
    "narrow-one-short-stair": (False, False),
    "four-empty-rows": (False, False),
}


class MoveConstructionError(AssertionError):
    """A move produced something that is not a downset of B_n."""


@dataclass(frozen=True)
class MoveOutcome:
    lemma_id: str
    removed: frozenset
    added: frozenset
    result: Downset

    def witness(self, D: Downset) -> dict:
        return {
            "lemma": self.lemma_id,
            "removed": sorted(self.removed),
            "added": sorted(self.added),
            "cost": (downset_cost(D), downset_cost(self.result)),
            "space": (downset_space(D), downset_space(self.result)),
            "lex_earlier": downset_lex_compare(self.result, D) < 0,
            "heights": self.result.heights,
        }


def witness_holds(D: Downset, mv: MoveOutcome) -> bool:
    """The three inequalities, strict where the lemma claims strictness."""
    c0, c1 = downset_cost(D), downset_cost(mv.result)
    s0, s1 = downset_space(D), downset_space(mv.result)
    cs, ss = STRICTNESS[mv.lemma_id]
    ok_c = c1 < c0 if cs else c1 <= c0
    ok_s = s1 > s0 if ss else s1 >= s0
    return ok_c and ok_s and downset_lex_compare(mv.result, D) < 0


def _build(D: Downset, lemma: str, removed, added) -> MoveOutcome:
    removed, added = frozenset(removed), frozenset(added)
    if not all(c in D for c in removed) or any(c in D for c in added) or removed & added:
        raise MoveConstructionError(f"{lemma}: bad cell sets for {D}")
    cells = (set(D.cells()) - removed) | added
    try:
        result = Downset.from_cells(D.n, cells)
    except ValueError as exc:
        raise MoveConstructionError(f"{lemma}: result is not a downset ({exc}) for {D}")
    return MoveOutcome(lemma, removed, added, result)


def _log2(i: int) -> int:
    return i.bit_length() - 1


def greatest_cells(D: Downset, t: int) -> list:
    """The t largest cells of D in cell-lex order (last column, top down)."""
    out = []
    for i in range(D.k, 0, -1):
        for j in range(D.heights[i - 1], i, -1):
            if len(out) == t:
                return out
            out.append((i, j))
    return out


def _not_ending_in_stairs(cs) -> bool:
    """The last gap is not a stair, and the previous corner sits in a column
    k with 2k < i - 3 (optimal downsets always satisfy this)."""
    if len(cs) < 2:
        return True
    return 2 * cs[-2][0] < cs[-1][0] - 3


# ------------------------------------------------------ one-cell moves

def distance_vector_moves(D: Downset) -> list:
    out = []
    for (a, b), (c, d) in zip(corners(D), corners(D)[1:]):
        if 3 <= c - a and 2 * (c - a) <= c + 3:
            out.append(_build(D, "distance-vector", [(c, d)], [(a + 1, d + 1), (a + 2, d + 1)]))
    return out


def stairs_moves(D: Downset) -> list:
    cs, hv = corners(D), horizontal_distance_vector(D)
    out = []
    for t in range(len(hv)):
        i = cs[t][0]
        if hv[t:t + 3] == [1, 1, 1]:
            (_, b), (_, c), last = cs[t + 1], cs[t + 2], cs[t + 3]
            out.append(_build(D, "stairs-111", [last], [(i + 1, b + 1), (i + 2, c + 1)]))
        if hv[t:t + 2] == [2, 2]:
            b, last = cs[t + 1][1], cs[t + 2]
            out.append(_build(D, "stairs-22", [last], [(i + 1, b + 1), (i + 2, b + 1)]))
        if hv[t:t + 2] == [2, 1]:
            b, last = cs[t + 1][1], cs[t + 2]
            out.append(_build(D, "stairs-21", [last], [(i + 1, b + 1), (i + 2, b + 1)]))
        if hv[t:t + 2] == [1, 2]:
            b, last = cs[t + 1][1], cs[t + 2]
            c = last[1]
            out.append(_build(D, "stairs-12", [last], [(i + 1, b + 1), (i + 2, c + 1)]))
    return out


def drop_sizes_moves(D: Downset) -> list:
    cs = corners(D)
    out = []
    for t in range(len(cs) - 1):
        (a, b), (a2, c) = cs[t], cs[t + 1]
        if b - c <= 1:
            continue
        if a2 == a + 1 and t + 2 < len(cs) and cs[t + 2][0] == a + 2:
            out.append(_build(D, "drop-sizes-short", [cs[t + 2]], [(a + 1, c + 1), (a + 1, c + 2)]))
        if a2 == a + 2:
            out.append(_build(D, "drop-sizes-long", [(a2, c)], [(a + 1, c + 1), (a + 1, c + 2)]))
    return out


def ends_with_stairs_moves(D: Downset) -> list:
    """Replace the last corner by two cells: one on top of the block before
    the stairs, one on top of the column right after the top stair."""
    if is_231_lex_style(D) != "no":
        return []
    cs, hv = corners(D), horizontal_distance_vector(D)
    if hv[-2:] == [1, 1]:
        top = len(cs) - 3
    elif hv[-1:] == [2]:
        top = len(cs) - 2
    else:
        return []
    i, j = cs[top]
    c = D.height(i + 1)
    last = cs[-1]
    if top > 0:
        a = cs[top - 1][0]
        return [_build(D, "ends-with-stairs", [last], [(a + 1, j + 1), (i + 1, c + 1)])]
    if j >= D.n - 1:
        return []
    return [_build(D, "ends-with-stairs-no-earlier", [last], [(1, j + 1), (i + 1, c + 1)])]


# --------------------------------------------------------- column moves

def _top_rows_cells(D: Downset, i: int, j: int, t: int) -> list:
    """For rows j-t+1..j, the right-most cell of D in that row (column i or i+1)."""
    out = []
    for h in range(j - t + 1, j + 1):
        col = i + 1 if (i + 1, h) in D else i
        out.append((col, h))
    return out


def column_moves(D: Downset) -> list:
    n, cs = D.n, corners(D)
    out = []
    if not cs:
        return out
    i, j = cs[-1]
    t = _log2(i)
    # last column is tall and alone
    if len(cs) == 1 and i >= 5 and j - i >= t and j < n - 1:
        width = i - 1 if i in (5, 6, 8) else i - 2
        L = [(i, h) for h in range(j - t + 1, j + 1)]
        R = [(h, j + 1) for h in range(1, width + 1)]
        out.append(_build(D, "column-no-other-corner", L, R))
    # last column is tall, earlier corner far to the left
    if len(cs) >= 2 and i >= 6 and j - i >= t and _not_ending_in_stairs(cs):
        k = cs[-2][0]
        L = [(i, h) for h in range(j - t + 1, j + 1)]
        R = [(h, j + 1) for h in range(k + 1, i)]
        out.append(_build(D, "column-earlier-corner", L, R))
    # one short stair at the end, top stair column tall
    if len(cs) >= 2 and cs[-1][0] == cs[-2][0] + 1:
        i, j = cs[-2]
        t = _log2(i)
        if i >= 6 and j - i >= t + 1 and j < n - 1:
            if len(cs) == 2:
                width = i - 1 if i in (6, 8, 9) else i - 2
                L = _top_rows_cells(D, i, j, t)
                R = [(h, j + 1) for h in range(1, width + 1)]
                out.append(_build(D, "tall-stairs", L, R))
            elif 2 * cs[-3][0] < i - 3:
                tt = t - 1 if i == 8 else t
                L = _top_rows_cells(D, i, j, tt)
                R = [(h, j + 1) for h in range(1, i) if (h, j + 1) not in D]
                out.append(_build(D, "tall-stairs-2", L, R))
    return out


# ------------------------------------------------------ trapezoid moves

ONE_ROW_MIN_I = 36


def _trapezoid(D, lemma, size, rows, cap):
    T = greatest_cells(D, size)
    if len(T) < size or size < 1:
        return None
    c = min(col for col, _ in T) - 1
    if cap is not None:
        c = min(c, cap)
    R = [(h, k) for k in rows for h in range(1, c + 1) if (h, k) not in D]
    if not R:
        return None
    return _build(D, lemma, T, R)


def trapezoid_moves(D: Downset) -> list:
    n, cs = D.n, corners(D)
    out = []
    if not cs:
        return out
    i, j = cs[-1]
    t = _log2(i)
    plain = _not_ending_in_stairs(cs)
    if plain and i >= 16 and j - i < t and j <= n - 3:
        size = i // 2 if j - i >= 2 else i // 2 - 1
        mv = _trapezoid(D, "trapezoid-two-row", size, (j + 1, j + 2), None)
        out.append(mv)
    # below |T| = 9 the cost bound for the one-row move does not hold in general
    if plain and i >= ONE_ROW_MIN_I and j - i < t and j == n - 2:
        mv = _trapezoid(D, "trapezoid-one-row", i // 4, (n - 1,), i - 4)
        out.append(mv)
    if len(cs) >= 2 and cs[-1][0] == cs[-2][0] + 1 and is_231_lex_style(D) == "no":
        i, j = cs[-2]
        t = _log2(i)
        earlier_ok = len(cs) == 2 or 2 * cs[-3][0] <= i - 4
        if earlier_ok and i >= 16 and j - i < t + 1 and j <= n - 3:
            out.append(_trapezoid(D, "trapezoid-two-row-stairs", i // 2, (j + 1, j + 2), None))
        if earlier_ok and i >= ONE_ROW_MIN_I and j - i < t + 1 and j == n - 2:
            out.append(_trapezoid(D, "trapezoid-one-row-stairs", i // 4, (n - 1,), i - 4))
    return [m for m in out if m is not None]


# --------------------------------------------------------- narrow moves

def narrow_moves(D: Downset) -> list:
    n, cs = D.n, corners(D)
    if not cs or is_231_lex_style(D) != "no":
        return []
    out = []
    if len(cs) == 1 and n >= 10 and D not in persistent_profiles(n):
        i, j = cs[0]
        rem = add = None
        if i == 2 and 4 <= j and j + 4 <= n - 1:
            rem, add = [(2, j), (2, j - 1)], [(1, j + k) for k in range(1, 5)]
        elif i == 3 and 5 <= j <= n - 3:
            rem = [(3, j), (3, j - 1)]
            add = [(1, j + 1), (1, j + 2), (2, j + 1), (2, j + 2)]
        elif i == 3 and j == 4:
            rem, add = [(2, 4), (3, 4)], [(1, k) for k in range(5, 10)]
        elif i == 4 and 6 <= j <= n - 3:
            rem = [(4, j), (4, j - 1)]
            add = [(m, j + d) for m in (1, 2, 3) for d in (1, 2)]
        elif i == 4 and j == 5:
            rem, add = [(4, 5), (3, 5), (3, 4)], [(m, k) for m in (1, 2) for k in range(6, 10)]
        if rem:
            out.append(_build(D, "narrow-i-small", rem, add))
    if len(cs) == 2 and cs[1][0] == cs[0][0] + 1:
        (i, j), last = cs
        if i < 6 and j < n - 1:
            if i == 1 and j < n - 2:
                add = [(1, j + 1), (1, j + 2)]
            elif i == 2:
                add = [(1, j + 1), (2, j + 1)]
            elif 3 <= i <= 5:
                add = [(1, j + 1), (2, j + 1), (3, j + 1)]
            else:
                add = None
            if add:
                out.append(_build(D, "narrow-one-short-stair", [last], add))
    return out


# --------------------------------------------------- four empty rows

def four_empty_rows_moves(D: Downset) -> list:
    cs = corners(D)
    if not cs:
        return []
    (a, b), (i, j) = cs[0], cs[-1]
    if D.n - 1 - b < 4 or i < 6:
        return []
    half = i // 2
    T = greatest_cells(D, half)
    S = [(c, D.height(c) + k) for c in range(1, half + 1) for k in range(1, 5)]
    return [_build(D, "four-empty-rows", T, S)]


# ------------------------------------------------------------ public ops

LEMMA_FAMILIES = (
    ("distance-vector", distance_vector_moves),
    ("stairs", stairs_moves),
    ("drop-sizes", drop_sizes_moves),
    ("ends-with-stairs", ends_with_stairs_moves),
    ("column", column_moves),
    ("trapezoid", trapezoid_moves),
    ("narrow", narrow_moves),
    ("four-empty-rows", four_empty_rows_moves),
)


def _first(moves):
    return moves[0] if moves else None


def move_distance_vector(D): return _first(distance_vector_moves(D))
def move_stairs(D): return _first(stairs_moves(D))
def move_drop_sizes(D): return _first(drop_sizes_moves(D))
def move_ends_with_stairs(D): return _first(ends_with_stairs_moves(D))
def move_column(D): return _first(column_moves(D))
def move_trapezoid(D): return _first(trapezoid_moves(D))
def move_narrow(D): return _first(narrow_moves(D))
def move_four_empty_rows(D): return _first(four_empty_rows_moves(D))


def all_applicable_moves(D: Downset) -> list:
    """Every instance of every move, in the fixed family order above."""
    out = []
    for _, fn in LEMMA_FAMILIES:
        out.extend(fn(D))
    return out
